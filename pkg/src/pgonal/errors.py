"""Exception hierarchy.

Domain errors (bad user input, arithmetic preconditions) derive from
:class:`PGonalError` and :class:`ValueError`.  Broken internal invariants
derive from :class:`EngineInvariantError`, an :class:`AssertionError`: they
must never fire on valid input.
"""


class PGonalError(ValueError):
    """Base class for domain errors raised by the engine."""


class NotPrime(PGonalError):
    def __init__(self, p):
        super().__init__(f"{p} is not an odd prime")
        self.p = p


class ZeroNotInvertible(PGonalError, ZeroDivisionError):
    pass


class ZeroScalar(PGonalError):
    pass


class ZeroExponent(PGonalError):
    def __init__(self, index):
        super().__init__(f"exponent at position {index} is 0 mod p")
        self.index = index


class SumNotZero(PGonalError):
    def __init__(self, total):
        super().__init__(f"exponent sum is {total}, not 0 mod p")
        self.total = total


class TooShort(PGonalError):
    pass


class NotRamifiedOverSphere(PGonalError):
    pass


class WrongModulus(PGonalError):
    pass


class WrongArity(PGonalError):
    pass


class OutOfRange(PGonalError):
    pass


class InconsistentPiece(PGonalError):
    pass


class BadPartition(PGonalError):
    pass


class InadmissibleMPlus(PGonalError):
    pass


class NoTriple(PGonalError):
    pass


class GenusTooSmall(PGonalError):
    pass


class InvalidOrder(PGonalError):
    pass


class TooLarge(PGonalError):
    pass


class EngineInvariantError(AssertionError):
    """An internal invariant failed; indicates a bug, not bad input."""


class NonIntegralGenus(EngineInvariantError):
    pass


class GenusMismatch(EngineInvariantError):
    pass


class IndependenceViolated(EngineInvariantError):
    pass
