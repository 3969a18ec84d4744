"""Brute-force orbit enumeration used as ground truth for small instances.

Nothing here reuses the engine's canonicalisation: orbits are found by
union-find over every valid ordered tuple, joined to its sorted form and to
each of its p-1 scalings.  Keep it that way; the point is an independent
second computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import TooLarge
from .residue import prime_value

TUPLE_GUARD = 10**8
PAIR_GUARD = 101


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def blocks(self):
        groups = {}
        for x in self.parent:
            groups.setdefault(self.find(x), set()).add(x)
        return [frozenset(g) for g in groups.values()]


@dataclass(frozen=True)
class OrbitPartition:
    universe: frozenset
    blocks: tuple[frozenset, ...]

    def __len__(self):
        return len(self.blocks)

    def block_of(self, x) -> frozenset:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def is_partition(self) -> bool:
        seen = set()
        for b in self.blocks:
            if seen & b:
                return False
            seen |= b
        return seen == set(self.universe)


def _sorted_blocks(blocks):
    return tuple(sorted(blocks, key=lambda b: min(b)))


def orbit_classes_bruteforce(p, r: int) -> OrbitPartition:
    p = prime_value(p)
    if (p - 1) ** r > TUPLE_GUARD:
        raise TooLarge(f"(p-1)^r = {(p - 1) ** r} exceeds {TUPLE_GUARD}")
    uf = _UnionFind()
    universe = []
    for head in product(range(1, p), repeat=r - 1):
        last = -sum(head) % p
        if last:
            t = head + (last,)
            universe.append(t)
            uf.add(t)
    for t in universe:
        uf.union(t, tuple(sorted(t)))
        for c in range(2, p):
            uf.union(t, tuple(c * x % p for x in t))
    return OrbitPartition(frozenset(universe), _sorted_blocks(uf.blocks()))


def pclass_orbit_bruteforce(p) -> OrbitPartition:
    p = prime_value(p)
    if p > PAIR_GUARD:
        raise TooLarge(f"p = {p} exceeds {PAIR_GUARD}")
    uf = _UnionFind()
    pairs = [(a, b) for a in range(1, p) for b in range(1, p)]
    for pair in pairs:
        uf.add(pair)
    for a, b in pairs:
        uf.union((a, b), (b, a))
        for c in range(2, p):
            uf.union((a, b), (c * a % p, c * b % p))
    return OrbitPartition(frozenset(pairs), _sorted_blocks(uf.blocks()))


def partitions_agree(partition: OrbitPartition, key) -> list[str]:
    """Compare ``partition`` with the classes induced by ``key``.

    Returns a list of human-readable mismatches (empty when they agree).
    """
    problems = []
    owner = {}
    for n, block in enumerate(partition.blocks):
        keys = {key(x) for x in block}
        if len(keys) != 1:
            problems.append(f"block {n} (e.g. {min(block)}) splits into {len(keys)} classes")
        for k in keys:
            if k in owner and owner[k] != n:
                problems.append(f"class {k} meets blocks {owner[k]} and {n}")
            owner.setdefault(k, n)
    return problems


def verify(p, r: int) -> dict:
    """Cross-check the engine against brute force for (p, r).

    Checks the stratum partition and, for the boundary pieces, the P-class
    labels.  Returns a dict with per-check mismatch lists.
    """
    from .degeneration import p_class, p_labels
    from .strata import enumerate_strata, stratum_of

    p = prime_value(p)
    orbits = orbit_classes_bruteforce(p, r)
    strata_problems = partitions_agree(orbits, lambda t: stratum_of(p, t).canonical)
    enumerated = enumerate_strata(p, r)
    if len(enumerated) != len(orbits):
        strata_problems.append(f"enumerate_strata found {len(enumerated)} classes, oracle {len(orbits)}")
    pairs = pclass_orbit_bruteforce(p)
    pclass_problems = partitions_agree(pairs, lambda ab: p_class(ab[0], ab[1], p))
    if len(pairs) != (p + 1) // 2:
        pclass_problems.append(f"{len(pairs)} pair orbits, expected {(p + 1) // 2}")
    if len(p_labels(p)) != len(pairs):
        pclass_problems.append(f"{len(p_labels(p))} labels for {len(pairs)} orbits")
    return {
        "p": p,
        "r": r,
        "strata_blocks": len(orbits),
        "strata_classes": len(enumerated),
        "pair_blocks": len(pairs),
        "strata_mismatches": strata_problems,
        "pclass_mismatches": pclass_problems,
        "ok": not strata_problems and not pclass_problems,
    }
