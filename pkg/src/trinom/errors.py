"""Exception types shared across the library."""
from __future__ import annotations

from dataclasses import dataclass


class TrinomError(Exception):
    """Base class for domain-level errors."""


@dataclass(frozen=True)
class Violation:
    """One failed constraint of a trinomial data set.

    clause is one of "partition" (block structure), "gcd" (exponent
    positivity / pairwise coprimality of block gcds) or "lambda"
    (scalar count, nonzeroness, distinctness).
    """

    clause: str
    indices: tuple[int, ...]
    message: str


class ValidationError(TrinomError):
    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(v.message for v in self.violations))


class NotUnmixed(TrinomError):
    """Raised when an operation needs a pointed monoid; carries the witness."""

    def __init__(self, relation):
        self.relation = relation
        super().__init__(f"monoid has nontrivial units, relation {relation}")


class NotUnitPartition(TrinomError):
    pass


class NotDimensionThree(TrinomError):
    pass


class NotReduced(TrinomError):
    pass


class NotPointed(TrinomError):
    """Grading admits a nontrivial nonnegative null combination of degrees."""


class NotHomogeneous(TrinomError):
    pass


class VariableCountMismatch(TrinomError):
    pass


class InvalidTarget(TrinomError):
    pass


class NotRepresentable(TrinomError):
    """Target degree is not an integer combination of variable degrees."""
