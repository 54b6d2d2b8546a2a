"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph construction (self-loop, duplicate edge, bad node id)."""


class ParseError(ValueError):
    """Malformed instance file. Carries the 1-based line number."""

    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DecompositionError(ValueError):
    """Tree decomposition violates (T1)/(T2) or structural requirements.

    ``condition`` is "T1" or "T2" and ``witness`` is the offending edge or
    (i, j, k) triple of T-nodes, when applicable.
    """

    def __init__(self, message, condition=None, witness=None):
        super().__init__(message)
        self.condition = condition
        self.witness = witness


class BudgetExceededError(RuntimeError):
    """Exhaustive search ran past its candidate budget.

    ``lower_bound`` is the largest solution size that was fully ruled out
    before the budget ran out (i.e. opt > lower_bound).
    """

    def __init__(self, explored, lower_bound):
        super().__init__(
            f"candidate budget exceeded after {explored} sets; opt > {lower_bound}"
        )
        self.explored = explored
        self.lower_bound = lower_bound
