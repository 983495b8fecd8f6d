"""Exception hierarchy.

Two branches matter for the CLI: InputError means the user gave us something
malformed (exit code 2), ConsistencyError means an internal cross-check failed
(exit code 3).  Everything derives from FiveclassError.
"""

from __future__ import annotations


class FiveclassError(Exception):
    pass


class InputError(FiveclassError):
    pass


class ConsistencyError(FiveclassError):
    pass


# -- intersection forms -------------------------------------------------------

class InvalidFormError(InputError):
    pass


class NotSymmetricError(InvalidFormError):
    pass


class NotUnimodularError(InvalidFormError):
    def __init__(self, abs_det: int):
        self.abs_det = abs_det
        super().__init__(f"matrix is not unimodular: |det| = {abs_det}")


# -- bordism groups -----------------------------------------------------------

class KindMismatchError(InputError):
    pass


# -- manifold expressions -----------------------------------------------------

class InvalidExpressionError(InputError):
    pass


class StarInSmoothError(InvalidExpressionError):
    pass


class CategoryMismatchError(InputError):
    pass


class ExpressionSyntaxError(InputError):
    """Grammar violation, carries the byte offset and the expected token set."""

    def __init__(self, offset: int, expected: tuple[str, ...]):
        self.offset = offset
        self.expected = expected
        alts = ", ".join(repr(e) for e in expected)
        super().__init__(f"syntax error at offset {offset}: expected one of {alts}")


class ExpressionSemanticError(InvalidExpressionError):
    pass


# -- circle bundles -----------------------------------------------------------

class WrongDivisibilityError(InputError):
    def __init__(self, divisibility: int, message: str):
        self.divisibility = divisibility
        super().__init__(message)


class ZeroClassError(InputError):
    pass


class NonIntegralKError(ConsistencyError):
    """A block-count formula failed to produce a non-negative integer.

    Cannot happen for valid divisibility-2 input; raised (never swallowed) so
    that a violation surfaces as an internal consistency failure.
    """


# -- spectral sequence --------------------------------------------------------

class RangeExceededError(InputError):
    pass


class AhssOrderError(ConsistencyError):
    """Computed page data disagrees with the closed-form group order."""
