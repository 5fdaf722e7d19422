class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class BudgetExceeded(RuntimeError):
    """A requested enumeration is predicted to exceed the configured budget."""


class IsomorphismUndecided(RuntimeError):
    """The isomorphism search ran out of budget before reaching an answer."""
