"""Boundary points of one-dimensional strata and the incidence graph.

A stratum with four branch points degenerates by pinching one curve on the
quotient sphere.  Such a curve splits the branch points 2+2, so a stratum has
at most three boundary points P(a,b) + P(c,d).  Two strata meet in the
compactification when their boundary sets intersect.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import networkx as nx

from .degeneration import NodalSurface, class_stabilizer, node_multiplicity, p_class, pinch_chain, reordered
from .errors import BadPartition, WrongArity
from .residue import prime_value
from .strata import R4TypeTag, StratumClass, classify_r4_type, enumerate_strata

# 0-based index pairs of the three 2+2 splittings of four points
PAIRINGS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


@dataclass(frozen=True, order=True)
class BoundaryPoint:
    pieces: tuple[int, int]
    multiplicity: int

    def __post_init__(self):
        if self.pieces[0] > self.pieces[1]:
            raise ValueError("pieces must be sorted")

    @property
    def key(self) -> str:
        return f"P{self.pieces[0]}+P{self.pieces[1]}/{self.multiplicity}"

    def __str__(self):
        a, b = self.pieces
        return f"P({a})+P({b})" + (f" [{self.multiplicity} nodes]" if self.multiplicity > 1 else "")


def _require_r4(s: StratumClass):
    if s.r != 4:
        raise WrongArity(f"boundary sets are computed for r = 4, got r = {s.r}")


def pairing_point(s: StratumClass, pairing) -> BoundaryPoint:
    (i, j), (k, l) = pairing
    ms, p = s.canonical, s.p
    pieces = tuple(sorted((p_class(ms[i], ms[j], p), p_class(ms[k], ms[l], p))))
    return BoundaryPoint(pieces, node_multiplicity(ms[i] + ms[j], p))


def boundary_set(s: StratumClass) -> frozenset[BoundaryPoint]:
    _require_r4(s)
    return frozenset(pairing_point(s, pr) for pr in PAIRINGS)


def boundary_surfaces(s: StratumClass) -> dict[BoundaryPoint, NodalSurface]:
    """Each boundary point with its nodal surface, built by pinching the chain
    of the reordering that puts the paired points next to each other."""
    _require_r4(s)
    out = {}
    for pr in PAIRINGS:
        order = pr[0] + pr[1]
        out.setdefault(pairing_point(s, pr), pinch_chain(reordered(s.tuple, order)))
    return out


def one_curve_degenerations(s: StratumClass, split):
    """Split the branch points (1-based positions) as A | B and pinch.

    Returns the two sides augmented by their node exponent (so each sums to 0
    mod p; the exponent is 0 when the node is trivial) and the number of nodes.
    """
    a_side, b_side = (tuple(sorted(x)) for x in split)
    everything = sorted(a_side + b_side)
    if everything != list(range(1, s.r + 1)) or len(a_side) < 2 or len(b_side) < 2:
        raise BadPartition(f"{a_side} | {b_side} is not a 2+2-or-larger split of 1..{s.r}")
    p, ms = s.p, s.canonical
    sum_a = sum(ms[i - 1] for i in a_side) % p
    aug_a = tuple(ms[i - 1] for i in a_side) + (-sum_a % p,)
    aug_b = tuple(ms[i - 1] for i in b_side) + (sum_a,)
    return aug_a, aug_b, node_multiplicity(sum_a, p)


@dataclass
class StrataGraph:
    p: int
    strata: list[StratumClass]
    points: list[BoundaryPoint]
    incidence: dict[StratumClass, frozenset[BoundaryPoint]]
    _graph: nx.Graph = field(default=None, repr=False)

    def graph(self) -> nx.Graph:
        if self._graph is None:
            g = nx.Graph()
            for s in self.strata:
                g.add_node(("stratum", s))
            for b in self.points:
                g.add_node(("point", b))
            for s, pts in self.incidence.items():
                for b in pts:
                    g.add_edge(("stratum", s), ("point", b))
            self._graph = g
        return self._graph

    def strata_at(self, b: BoundaryPoint) -> list[StratumClass]:
        return sorted(s for s in self.strata if b in self.incidence[s])

    def overlaps(self, s: StratumClass) -> dict[StratumClass, frozenset[BoundaryPoint]]:
        """Other strata sharing a boundary point with ``s``, with the shared points."""
        mine = self.incidence[s]
        out = {}
        for other in self.strata:
            if other != s:
                shared = mine & self.incidence[other]
                if shared:
                    out[other] = shared
        return out


def build_graph(p) -> StrataGraph:
    p = prime_value(p)
    strata = enumerate_strata(p, 4)
    incidence = {s: boundary_set(s) for s in strata}
    points = sorted(set().union(*incidence.values()))
    return StrataGraph(p, strata, points, incidence)


def connected_components(graph: StrataGraph) -> list[list[StratumClass]]:
    comps = []
    for nodes in nx.connected_components(graph.graph()):
        members = sorted(s for kind, s in nodes if kind == "stratum")
        if members:
            comps.append(members)
    return sorted(comps)


@dataclass(frozen=True)
class IsolationEntry:
    stratum: StratumClass
    tag: R4TypeTag
    isolated: bool
    overlaps: dict
    stabilizers: dict

    @property
    def symmetric_pieces(self) -> list[tuple[int, int]]:
        """Boundary pieces whose cone pair has a stabilizer beyond the identity."""
        return sorted(pair for pair, stab in self.stabilizers.items() if len(stab) > 1)


def piece_pairs(s: StratumClass) -> list[tuple[int, int]]:
    """Cone-exponent pairs of all boundary pieces of ``s``."""
    ms = s.canonical
    out = set()
    for pr in PAIRINGS:
        for i, j in pr:
            out.add(tuple(sorted((ms[i], ms[j]))))
    return sorted(out)


def isolation_report(p, graph: StrataGraph | None = None) -> list[IsolationEntry]:
    graph = graph or build_graph(p)
    entries = []
    for s in graph.strata:
        overlaps = graph.overlaps(s)
        stabilizers = {pair: class_stabilizer(*pair, s.p) for pair in piece_pairs(s)}
        entries.append(IsolationEntry(s, classify_r4_type(s), not overlaps, overlaps, stabilizers))
    return entries


def points_by_label(points: Iterable[BoundaryPoint]) -> list[str]:
    return [str(b) for b in sorted(points)]
