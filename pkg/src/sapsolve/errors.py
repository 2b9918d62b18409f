"""Exception types shared across the package."""


class ContractViolationError(ValueError):
    """An argument breaks a documented precondition."""


class InfeasibleCountsError(ContractViolationError):
    """A count vector demands more students than the instance has."""


class InfeasibleSelectionError(ContractViolationError):
    """A seminar selection is infeasible for the instance."""


class DegenerateInstanceError(ValueError):
    """Parameters describe an empty or unusable instance."""


class OracleBudgetError(RuntimeError):
    """Exact enumeration would exceed the configured budget."""

    def __init__(self, product_size: int, budget: int):
        self.product_size = product_size
        self.budget = budget
        super().__init__(
            f"refusing exact enumeration: {product_size} candidate selections "
            f"exceed the budget of {budget}"
        )
