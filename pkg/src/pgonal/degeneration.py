"""Pinching chain decompositions of the quotient sphere and lifting the pieces.

The quotient of a cyclic p-gonal surface is a sphere with r cone points.  The
chain decomposition uses the curves c_2, ..., c_{r-2}, where c_i encloses the
branch points 1..i; its monodromy is s_i = j_1 + ... + j_i mod p.  Pinching all
of them leaves a disk with points {1, 2}, one annulus per point 3..r-2 and a
disk with points {r-1, r}.  Each piece is lifted through Riemann-Hurwitz to a
component of the nodal surface upstairs; a curve with monodromy 0 lifts to p
curves (p nodes), any other curve to one.

Boundary monodromies of a piece are taken with the far-side convention: a
boundary circle carries the monodromy of everything on the other side of it.
With this convention the boundary and cone exponents of every piece sum to 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    GenusMismatch,
    InconsistentPiece,
    InvalidOrder,
    NonIntegralGenus,
    OutOfRange,
    TooShort,
    ZeroExponent,
)
from .monodromy import MonodromyTuple, genus_of
from .residue import inverse_mod, prime_value

# (genus, cusps) of the trigonal building blocks
TRIGONAL_PIECES = {(1, 1): "Q", (0, 4): "X", (1, 2): "ALPHA", (0, 3): "Y"}

SYMBOLS = {"ALPHA": "α"}


@dataclass(frozen=True)
class ChainDecomposition:
    tuple: MonodromyTuple
    curves: tuple[int, ...]
    curve_monodromy: dict = field(compare=False)

    @classmethod
    def of(cls, t: MonodromyTuple) -> "ChainDecomposition":
        if t.r < 4:
            raise TooShort(f"a chain decomposition needs r >= 4, got r = {t.r}")
        positions = tuple(range(2, t.r - 1))
        return cls(t, positions, {i: curve_monodromy(t, i) for i in positions})

    def pieces(self) -> list["QuotientPiece"]:
        t, s = self.tuple, self.curve_monodromy
        p, js, r = t.p, t.exponents, t.r
        out = [QuotientPiece(boundary=((2, -s[2] % p),), cones=js[0:2])]
        for i in range(3, r - 1):
            out.append(
                QuotientPiece(
                    boundary=((i - 1, s[i - 1]), (i, -s[i] % p)),
                    cones=(js[i - 1],),
                )
            )
        out.append(QuotientPiece(boundary=((r - 2, s[r - 2]),), cones=js[r - 2 :]))
        return out


def curve_monodromy(t: MonodromyTuple, i: int) -> int:
    if not 2 <= i <= t.r - 2:
        raise OutOfRange(f"curve position {i} outside 2..{t.r - 2}")
    return sum(t.exponents[:i]) % t.p


def node_multiplicity(s: int, p) -> int:
    """Number of curves upstairs over a quotient curve with monodromy s."""
    p = prime_value(p)
    return p if s % p == 0 else 1


@dataclass(frozen=True)
class QuotientPiece:
    """A piece of the quotient: boundary circles (curve id, monodromy) plus cones."""

    boundary: tuple[tuple[int, int], ...]
    cones: tuple[int, ...]

    def monodromies(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.boundary) + tuple(self.cones)

    def orbifold_euler(self, p: int) -> Fraction:
        return 2 - len(self.boundary) - len(self.cones) * (1 - Fraction(1, p))


@dataclass(frozen=True)
class LiftedComponent:
    genus: int
    cusps: int
    label: str
    params: tuple[int, ...] = ()

    @property
    def name(self) -> str:
        base = SYMBOLS.get(self.label, self.label)
        if self.label == "P":
            return f"P({self.params[0]})"
        if self.label == "OTHER":
            return f"OTHER(g={self.genus},n={self.cusps})"
        return base


def p_class(a: int, b: int, p) -> int:
    """Label j of the cover of O_{p,p,inf} with cone monodromies (a, b).

    The cover depends on (a, b) only up to a common unit factor and swapping,
    i.e. on x = b/a up to inversion; the label is min(x, 1/x).
    """
    p = prime_value(p)
    a, b = a % p, b % p
    if a == 0:
        raise ZeroExponent(1)
    if b == 0:
        raise ZeroExponent(2)
    x = inverse_mod(a, p) * b % p
    return min(x, inverse_mod(x, p))


def p_labels(p) -> list[int]:
    """All P-labels for modulus p, in increasing order."""
    p = prime_value(p)
    return sorted({min(x, inverse_mod(x, p)) for x in range(1, p)})


def p_piece_shape(j: int, p) -> tuple[int, int]:
    """(genus, cusps) of P(j)."""
    p = prime_value(p)
    return (0, p) if j == p - 1 else ((p - 1) // 2, 1)


def class_stabilizer(a: int, b: int, p) -> frozenset[tuple[int, str]]:
    """Pairs (c, flag) with c * flag(a, b) == (a, b), flag in {"id", "swap"}."""
    p = prime_value(p)
    a, b = a % p, b % p
    out = set()
    for c in range(1, p):
        if (c * a % p, c * b % p) == (a, b):
            out.add((c, "id"))
        if (c * b % p, c * a % p) == (a, b):
            out.add((c, "swap"))
    return frozenset(out)


def lift_piece(piece: QuotientPiece, p) -> list[LiftedComponent]:
    p = prime_value(p)
    monos = piece.monodromies()
    if sum(monos) % p:
        raise InconsistentPiece(f"monodromies {monos} do not sum to 0 mod {p}")
    if any(c % p == 0 for c in piece.cones):
        raise InconsistentPiece("cone exponents must be nonzero")
    # p prime: the subgroup generated is everything or trivial
    order_h = p if any(m % p for m in monos) else 1
    n_comp = p // order_h
    chi_total = p * piece.orbifold_euler(p)
    lifts = sum(node_multiplicity(s, p) for _, s in piece.boundary)
    if chi_total.denominator != 1 or lifts % n_comp or int(chi_total) % n_comp:
        raise NonIntegralGenus(f"piece {piece} has non-integral lift")
    chi = int(chi_total) // n_comp
    cusps = lifts // n_comp
    twice_genus = 2 - cusps - chi
    if twice_genus < 0 or twice_genus % 2:
        raise NonIntegralGenus(f"piece {piece} lifts with 2g = {twice_genus}")
    genus = twice_genus // 2
    label, params = _label(piece, p, genus, cusps)
    return [LiftedComponent(genus, cusps, label, params) for _ in range(n_comp)]


def _label(piece: QuotientPiece, p: int, genus: int, cusps: int):
    if p == 3 and (genus, cusps) in TRIGONAL_PIECES:
        return TRIGONAL_PIECES[(genus, cusps)], ()
    if len(piece.boundary) == 1 and len(piece.cones) == 2:
        return "P", (p_class(*piece.cones, p),)
    return "OTHER", ()


@dataclass(frozen=True)
class NodalSurface:
    """Stable nodal surface: components joined by bundles of nodes.

    ``node_bundles`` holds (left index, right index, multiplicity) triples.
    """

    p: int
    components: tuple[LiftedComponent, ...]
    node_bundles: tuple[tuple[int, int, int], ...]

    @property
    def arithmetic_genus(self) -> int:
        nodes = sum(m for _, _, m in self.node_bundles)
        return sum(c.genus for c in self.components) + nodes - len(self.components) + 1

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.components)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, _, m in self.node_bundles)

    def chain_string(self) -> str:
        """E.g. ``"Q -1- X -3- X -1- Q"``; only meaningful for chains."""
        parts = [self.components[0].name]
        for (_, right, m) in self.node_bundles:
            parts.append(f"-{m}-")
            parts.append(self.components[right].name)
        return " ".join(parts)

    def piece_string(self) -> str:
        return "+".join(self.labels)


def pinch_chain(t: MonodromyTuple) -> NodalSurface:
    chain = ChainDecomposition.of(t)
    components = []
    for piece in chain.pieces():
        lifted = lift_piece(piece, t.p)
        # every chain piece carries a cone point, so it lifts connectedly
        assert len(lifted) == 1
        components.append(lifted[0])
    bundles = tuple(
        (k, k + 1, node_multiplicity(chain.curve_monodromy[i], t.p))
        for k, i in enumerate(chain.curves)
    )
    surface = NodalSurface(t.p, tuple(components), bundles)
    expected = genus_of(t.p, t.r)
    if surface.arithmetic_genus != expected:
        raise GenusMismatch(
            f"{t.exponents}: arithmetic genus {surface.arithmetic_genus} != {expected}"
        )
    return surface


def reordered(t: MonodromyTuple, order: Sequence[int]) -> MonodromyTuple:
    """``t`` with branch points listed in ``order`` (0-based positions)."""
    return MonodromyTuple(t.p, tuple(t.exponents[i] for i in order))


def collar_bound(d: int) -> float:
    """2 arccosh(1 / sin(2 pi / d)).

    Lower bound on the length of a closed geodesic through a fixed point of
    an automorphism of order d.  At d = 4 the formula degenerates to 0.
    """
    if d < 3:
        raise InvalidOrder(f"order must be at least 3, got {d}")
    s = math.sin(2 * math.pi / d)
    return 2 * math.acosh(max(1.0, 1 / s))
