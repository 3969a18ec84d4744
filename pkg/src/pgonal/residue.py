"""Exact arithmetic in Z/p for an odd prime p."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotPrime, ZeroNotInvertible, ZeroScalar


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True, order=True)
class PrimeModulus:
    """An odd prime, checked by trial division on construction."""

    value: int

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(self.value, int):
            raise NotPrime(self.value)
        if self.value < 3 or not is_prime(self.value):
            raise NotPrime(self.value)

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __str__(self):
        return str(self.value)


def as_modulus(p) -> PrimeModulus:
    return p if isinstance(p, PrimeModulus) else PrimeModulus(p)


def prime_value(p) -> int:
    """Validated integer value of ``p`` (an int or a PrimeModulus)."""
    return as_modulus(p).value


@dataclass(frozen=True, order=True)
class Residue:
    """Least non-negative representative of a class mod ``modulus``."""

    value: int
    modulus: PrimeModulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.value:
            raise ValueError(f"{self.value} is not reduced mod {self.modulus}")

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError("residues have different moduli")
            return other.value
        return int(other)

    def __add__(self, other):
        return normalize(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return normalize(self.value - self._coerce(other), self.modulus)

    def __mul__(self, other):
        return normalize(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return normalize(-self.value, self.modulus)

    def __repr__(self):
        return f"{self.value} mod {self.modulus.value}"


def normalize(a: int, p) -> Residue:
    m = as_modulus(p)
    return Residue(int(a) % m.value, m)


def inverse_mod(a: int, p: int) -> int:
    """Plain-integer inverse of ``a`` mod ``p``; raises ZeroNotInvertible."""
    a %= p
    if a == 0:
        raise ZeroNotInvertible(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


def unit_inverse(a: Residue) -> Residue:
    p = a.modulus.value
    return Residue(inverse_mod(a.value, p), a.modulus)


def scale_tuple(js: Sequence[Residue], c: Residue) -> tuple[Residue, ...]:
    """Multiply every entry of ``js`` by the unit ``c``, keeping order."""
    if not c:
        raise ZeroScalar("scaling by 0 is not an automorphism of C_p")
    return tuple(c * j for j in js)


def scale_ints(js: Iterable[int], c: int, p: int) -> tuple[int, ...]:
    # hot-path variant on bare ints, used by enumeration
    if c % p == 0:
        raise ZeroScalar("scaling by 0 is not an automorphism of C_p")
    return tuple(c * j % p for j in js)


def residues(values: Iterable[int], p) -> tuple[Residue, ...]:
    m = as_modulus(p)
    return tuple(normalize(v, m) for v in values)
