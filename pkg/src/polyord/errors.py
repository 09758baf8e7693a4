"""Exception types shared across the package.

The CLI maps these onto process exit codes, so engine code should raise
the most specific one that applies.
"""


class PolyordError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PolyordError, ValueError):
    """Malformed or mathematically inadmissible input (exit code 1)."""


class BudgetExceeded(PolyordError, RuntimeError):
    """A brute-force enumeration would exceed its point budget (exit code 2)."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumeration requires {required} point evaluations, "
            f"budget is {budget}; raise the budget to proceed"
        )


class InternalError(PolyordError, RuntimeError):
    """An internal invariant was violated (exit code 3)."""
