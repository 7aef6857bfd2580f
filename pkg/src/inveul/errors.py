"""Exception types shared across the package."""


class InveulError(Exception):
    """Base class for all package errors."""


class NonSymmetricInput(InveulError, ValueError):
    """A gamma expansion was requested for a non-palindromic row."""


class OddIndex(InveulError, ValueError):
    """A fixed-point-free quantity was requested at an odd size."""


class IndexOutOfRange(InveulError, ValueError):
    """A coefficient index lies outside the valid range for its row."""


class DivisibilityViolation(InveulError, ArithmeticError):
    """An exact division left a nonzero remainder.

    Every division in the recurrences and explicit formulas is known to be
    exact, so this always signals corrupted input or a bug.
    """

    def __init__(self, what: str, n: int, k: int, numerator: int, divisor: int):
        self.what = what
        self.n = n
        self.k = k
        self.numerator = numerator
        self.divisor = divisor
        super().__init__(
            f"{what}: {numerator} is not divisible by {divisor} at n={n}, k={k}"
        )


class FeasibilityExceeded(InveulError, ValueError):
    """Brute-force enumeration was requested above the configured bound."""
