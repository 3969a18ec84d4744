"""Equisymmetric strata of the cyclic p-gonal locus.

Two branch data give the same stratum when their exponent multisets differ
by a single unit scaling (reordering branch points is free because C_p is
abelian; scaling is an automorphism of C_p).  The canonical representative
of a class is the lexicographically least sorted scaling.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable

from .errors import WrongArity
from .monodromy import MonodromyTuple, genus_of, validate
from .residue import inverse_mod, prime_value

# below this many candidate multisets a worker pool costs more than it saves
_PARALLEL_THRESHOLD = 200_000


@dataclass(frozen=True, order=True)
class StratumClass:
    p: int
    r: int
    canonical: tuple[int, ...]

    @property
    def genus(self) -> int:
        return genus_of(self.p, self.r)

    @property
    def tuple(self) -> MonodromyTuple:
        return MonodromyTuple(self.p, self.canonical)

    @property
    def key(self) -> str:
        """Stable identifier, e.g. ``"p5:1-1-1-2"``."""
        return f"p{self.p}:" + "-".join(map(str, self.canonical))

    def __str__(self):
        return "(" + ",".join(map(str, self.canonical)) + ")"


def _canonical_ints(exponents: Iterable[int], p: int) -> tuple[int, ...]:
    js = tuple(exponents)
    return min(tuple(sorted(c * j % p for j in js)) for c in range(1, p))


def canonical_form(t: MonodromyTuple) -> StratumClass:
    return StratumClass(t.p, t.r, _canonical_ints(t.exponents, t.p))


def stratum_of(p, exponents: Iterable[int]) -> StratumClass:
    """Validate ``exponents`` and return their stratum."""
    return canonical_form(validate(p, exponents))


def _scan(p: int, r: int, second: int) -> set[tuple[int, ...]]:
    # sorted multisets m_1 <= ... <= m_r with m_1 = 1 and m_2 = second; the
    # last entry is forced by the zero-sum condition
    found = set()
    for middle in combinations_with_replacement(range(second, p), r - 3):
        head = (1, second) + middle
        last = -sum(head) % p
        if last == 0 or last < head[-1]:
            continue
        found.add(_canonical_ints(head + (last,), p))
    return found


def enumerate_strata(p, r: int, threads: int | None = 1) -> list[StratumClass]:
    """All strata with r branch points, sorted by canonical form.

    Every class has a representative containing the exponent 1, so only
    multisets with a 1 are scanned.  The scan is split by the second-smallest
    exponent; with ``threads`` > 1 (None means all cores) the parts run in a
    process pool when the workload is large enough to pay for it.
    """
    p = prime_value(p)
    if r < 3:
        validate(p, [1] * r)  # raises TooShort
    seconds = range(1, p)
    if threads is None:
        threads = os.cpu_count() or 1
    found: set[tuple[int, ...]] = set()
    if threads > 1 and _workload(p, r) > _PARALLEL_THRESHOLD:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_scan, [p] * len(seconds), [r] * len(seconds), seconds):
                found |= part
    else:
        for s in seconds:
            found |= _scan(p, r, s)
    return [StratumClass(p, r, c) for c in sorted(found)]


def _workload(p: int, r: int) -> int:
    from math import comb

    return comb(p - 2 + r - 2, r - 2)


def trigonal_mplus_values(s: StratumClass) -> frozenset[int]:
    """Both m_plus readings {k, r-k} of a p = 3 class (scaling by 2 swaps them)."""
    if s.p != 3:
        raise ValueError("m_plus is only defined for p = 3")
    k = s.canonical.count(1)
    return frozenset({k, s.r - k})


@dataclass(frozen=True)
class R4TypeTag:
    """Type of a stratum with four branch points.

    Parameters are read off the normal form with leading exponent 1:
    T3(i) is (1, i, -i, -1) with i = min(i, -i) minimised over the orbit,
    T4(i) is (1, 1, i, -2-i) with i the smaller of the two, and T5(i, j) is
    (1, i, j, -1-i-j) with (i, j) the lexicographically least choice.
    """

    type: str
    params: tuple[int, ...] = ()

    def __str__(self):
        if not self.params:
            return self.type
        names = ("i", "j")
        inner = ",".join(f"{n}={v}" for n, v in zip(names, self.params))
        return f"{self.type}({inner})"


def _leading_one_forms(ms: tuple[int, ...], p: int):
    # for each entry e, the multiset scaled so that e becomes 1, with e removed
    for idx, e in enumerate(ms):
        c = inverse_mod(e, p)
        rest = sorted(c * x % p for k, x in enumerate(ms) if k != idx)
        yield rest


def classify_r4_type(s: StratumClass) -> R4TypeTag:
    if s.r != 4:
        raise WrongArity(f"type tags are defined for r = 4, got r = {s.r}")
    p, ms = s.p, s.canonical
    shape = sorted(Counter(ms).values())
    if shape == [1, 3]:
        return R4TypeTag("T1")
    if shape == [2, 2]:
        return R4TypeTag("T2")
    if shape == [1, 1, 2]:
        a = next(x for x, n in Counter(ms).items() if n == 2)
        c = inverse_mod(a, p)
        b, d = sorted(c * x % p for x in ms if x != a)
        return R4TypeTag("T4", (b,))
    if shape == [1, 1, 1, 1]:
        values = set(ms)
        if any(-x % p in values for x in values):
            best = min(
                min(x, p - x)
                for rest in _leading_one_forms(ms, p)
                for x in rest
                if x != p - 1
            )
            return R4TypeTag("T3", (best,))
        i, j = min(tuple(rest[:2]) for rest in _leading_one_forms(ms, p))
        return R4TypeTag("T5", (i, j))
    return R4TypeTag("NONE")


def count_type5(p) -> int:
    p = prime_value(p)
    return sum(1 for s in enumerate_strata(p, 4) if classify_r4_type(s).type == "T5")
