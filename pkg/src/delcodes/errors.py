"""Exception types shared across the library."""


class DecodeFailure(Exception):
    """Decoder could not produce a valid estimate (out-of-model input)."""

    def __init__(self, message, diagnostic=None):
        super().__init__(message)
        self.diagnostic = diagnostic or {}


class BudgetExceeded(Exception):
    """An enumeration or verification exceeded its configured budget."""


class FormulaDomainError(ValueError):
    """A bound formula was evaluated outside its domain."""
