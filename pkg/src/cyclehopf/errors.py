"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed edge-list input; message carries the offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class SizeCapError(ValueError):
    """Graph order exceeds the configured subset-table size cap."""


class BudgetExceededError(RuntimeError):
    """An enumeration produced more objects than its configured budget."""


class InternalCheckError(ArithmeticError):
    """A self-check that must hold for correct arithmetic failed (a bug)."""
