"""The trigonal connector surface.

Branch points of a cyclic trigonal covering are grouped into as many
monochromatic triples as possible, followed by the leftover points.  Pinching
the chain decomposition of that ordering gives a nodal surface built from the
pieces Q, X, alpha and Y which does not depend on m_plus, so it lies in the
closure of every trigonal stratum of the genus.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .degeneration import NodalSurface, pinch_chain
from .errors import GenusTooSmall, InadmissibleMPlus, IndependenceViolated, NoTriple
from .monodromy import SignedCounts, admissible_mplus_set, validate


class Leftover(enum.Enum):
    NONE = ()
    ONE_ONE = (1, 2)
    TWO_TWO = (1, 1, 2, 2)


# r mod 3 -> leftover block
_LEFTOVER = {0: Leftover.NONE, 2: Leftover.ONE_ONE, 1: Leftover.TWO_TWO}


@dataclass(frozen=True)
class TrigonalArrangement:
    g: int
    counts: SignedCounts
    ordering: tuple[int, ...]
    triple_count: int
    leftover: Leftover

    @property
    def blocks(self) -> list[tuple[int, ...]]:
        """The triples in order, then the leftover block (possibly empty)."""
        n = 3 * self.triple_count
        out = [self.ordering[k : k + 3] for k in range(0, n, 3)]
        out.append(self.ordering[n:])
        return out


def arrange(g: int, k: int) -> TrigonalArrangement:
    allowed = admissible_mplus_set(g)
    if k not in allowed:
        raise InadmissibleMPlus(f"m_plus = {k} is not admissible for genus {g}: {sorted(allowed)}")
    r = g + 2
    m_plus, m_minus = k, r - k
    if max(m_plus, m_minus) < 3:
        raise NoTriple(f"genus {g}, m_plus = {k} leaves no monochromatic triple")
    leftover = _LEFTOVER[r % 3]
    rest = len(leftover.value) // 2
    plus_triples = (m_plus - rest) // 3
    minus_triples = (m_minus - rest) // 3
    ordering = (1,) * (3 * plus_triples) + (2,) * (3 * minus_triples) + leftover.value
    assert len(ordering) == r
    return TrigonalArrangement(
        g=g,
        counts=SignedCounts(m_plus, m_minus),
        ordering=ordering,
        triple_count=plus_triples + minus_triples,
        leftover=leftover,
    )


def arrangement_surface(arr: TrigonalArrangement) -> NodalSurface:
    return pinch_chain(validate(3, arr.ordering))


def case_template(r: int) -> str:
    """The closed-form piece sequence for r branch points, unexpanded."""
    return {
        0: "Q+X+Σ_{T-2}(X+α+X)+X+Q",
        1: "Q+X+Σ_{T-1}(X+α+X)+X+α+Q",
        2: "Q+X+Σ_{T-1}(X+α+X)+Y",
    }[r % 3]


def case_formula(r: int) -> str:
    """Expanded piece sequence, e.g. ``"Q+X+X+α+Q"`` for r = 7."""
    if r < 7:
        raise GenusTooSmall(f"the connector formula needs r >= 7, got {r}")
    leftover = _LEFTOVER[r % 3]
    triples = (r - len(leftover.value)) // 3
    middle = ["X", "α", "X"]
    if leftover is Leftover.NONE:
        pieces = ["Q", "X"] + middle * (triples - 2) + ["X", "Q"]
    elif leftover is Leftover.TWO_TWO:
        pieces = ["Q", "X"] + middle * (triples - 1) + ["X", "α", "Q"]
    else:
        pieces = ["Q", "X"] + middle * (triples - 1) + ["Y"]
    return "+".join(pieces)


@dataclass(frozen=True)
class Connector:
    g: int
    surface: NodalSurface
    template: str
    per_k: dict

    @property
    def chain(self) -> str:
        return self.surface.chain_string()

    @property
    def formula(self) -> str:
        return self.surface.piece_string()


def connector_surface(g: int) -> Connector:
    if g < 5:
        raise GenusTooSmall(f"the connector theorem needs genus >= 5, got {g}")
    per_k = {}
    for k in sorted(admissible_mplus_set(g)):
        per_k[k] = arrangement_surface(arrange(g, k))
    surfaces = set(per_k.values())
    if len(surfaces) != 1:
        raise IndependenceViolated(
            f"genus {g}: " + "; ".join(f"k={k}: {s.chain_string()}" for k, s in per_k.items())
        )
    (surface,) = surfaces
    return Connector(g, surface, case_template(g + 2), per_k)
