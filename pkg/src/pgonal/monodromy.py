"""Branch data of cyclic p-gonal coverings of the sphere.

A covering with deck group C_p = <t> branched over r points is recorded by
the exponents (j_1, ..., j_r) with x_i -> t^{j_i} for a canonical set of
meridians x_1 ... x_r = 1.  Exponents are kept as ordered tuples of reduced
integers; multiset semantics only appear in :mod:`pgonal.strata`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    NotRamifiedOverSphere,
    PGonalError,
    SumNotZero,
    TooShort,
    WrongModulus,
    ZeroExponent,
)
from .residue import Residue, as_modulus, prime_value, scale_ints


@dataclass(frozen=True)
class MonodromyTuple:
    p: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        _check_exponents(self.p, self.exponents)

    @property
    def r(self) -> int:
        return len(self.exponents)

    @property
    def genus(self) -> int:
        return genus_of(self.p, self.r)

    @property
    def residues(self) -> tuple[Residue, ...]:
        m = as_modulus(self.p)
        return tuple(Residue(j, m) for j in self.exponents)

    def scaled(self, c: int) -> "MonodromyTuple":
        return MonodromyTuple(self.p, scale_ints(self.exponents, c, self.p))

    def __len__(self):
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)


def _check_exponents(p, exponents):
    prime_value(p)
    if len(exponents) < 3:
        raise TooShort(f"need at least 3 branch points, got {len(exponents)}")
    for i, j in enumerate(exponents, start=1):
        if not 0 <= j < p:
            raise ValueError(f"exponent {j} is not reduced mod {p}")
        if j == 0:
            raise ZeroExponent(i)
    total = sum(exponents) % p
    if total:
        raise SumNotZero(total)


def validate(p, exponents: Iterable[int]) -> MonodromyTuple:
    """Reduce ``exponents`` mod p and check the branch-data conditions.

    >>> validate(5, [1, 1, 1, 2]).r
    4
    """
    p = prime_value(p)
    return MonodromyTuple(p, tuple(int(j) % p for j in exponents))


def genus_of(p, r: int) -> int:
    p = prime_value(p)
    if r < 3:
        raise TooShort(f"need at least 3 branch points, got {r}")
    return (r - 2) * (p - 1) // 2


def branch_count(p, g: int) -> int:
    p = prime_value(p)
    if g < 2:
        raise PGonalError(f"genus must be at least 2, got {g}")
    if (2 * g) % (p - 1):
        raise NotRamifiedOverSphere(
            f"no cyclic {p}-gonal surfaces of genus {g}: {p - 1} does not divide {2 * g}"
        )
    return 2 * g // (p - 1) + 2


@dataclass(frozen=True)
class SignedCounts:
    """Numbers of trigonal meridians sent to t and to t^-1."""

    m_plus: int
    m_minus: int

    @property
    def r(self) -> int:
        return self.m_plus + self.m_minus

    @property
    def genus(self) -> int:
        return self.r - 2

    def is_admissible(self) -> bool:
        return (self.m_plus + 2 * self.m_minus) % 3 == 0


def signed_counts(t: MonodromyTuple) -> SignedCounts:
    if t.p != 3:
        raise WrongModulus(f"signed counts are defined for p = 3, not {t.p}")
    m_plus = sum(1 for j in t.exponents if j == 1)
    counts = SignedCounts(m_plus, t.r - m_plus)
    assert counts.is_admissible()
    return counts


def admissible_mplus_set(g: int) -> frozenset[int]:
    """Values k for which trigonal surfaces of genus g with m_plus = k exist."""
    if g < 2:
        raise PGonalError(f"genus must be at least 2, got {g}")
    r = g + 2
    return frozenset(k for k in range(r + 1) if (k + 2 * (r - k)) % 3 == 0)


def trigonal_tuple(g: int, k: int) -> MonodromyTuple:
    """The tuple (1 x k, 2 x (g+2-k)); raises if k is not admissible."""
    r = g + 2
    if not 0 <= k <= r:
        raise PGonalError(f"m_plus = {k} out of range for genus {g}")
    return validate(3, [1] * k + [2] * (r - k))
