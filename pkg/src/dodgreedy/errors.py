"""Exception types shared across the library."""


class ParseError(ValueError):
    """Malformed input text. Messages carry 1-based line numbers."""


class BudgetExceededError(RuntimeError):
    """An exact search ran out of its state budget.

    Raised instead of returning an approximate answer; `what` names the
    computation that hit the limit.
    """

    def __init__(self, what: str, budget: int):
        super().__init__(f"state budget of {budget} exceeded while computing {what}")
        self.what = what
        self.budget = budget


class IntegrityError(RuntimeError):
    """An internal consistency check failed (a solver bug, not bad input)."""
