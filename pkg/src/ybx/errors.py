"""Exception types shared across the package."""


class SolutionError(ValueError):
    """A document or table does not describe a valid solution."""


class ReversingBudgetError(RuntimeError):
    """Word reversing exceeded its step budget.

    With a presentation coming from a genuine symmetric solution this cannot
    happen, so hitting it means the presentation is not complemented-complete.
    """


class LatticeError(RuntimeError):
    """The divisor lattice failed one of its structural checks."""


class TheoremViolation(AssertionError):
    """A computation contradicts one of the structural theorems being checked."""


class FoldingError(ValueError):
    """A partition does not give a folding; the message names the failed condition."""
