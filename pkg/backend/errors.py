# errors.py


class NcsfError(Exception):
    """Custom exception for all errors raised by the toolkit."""
    pass


class ConfigurationError(NcsfError):
    """Custom exception for invalid environment configuration."""
    pass


class ContractError(NcsfError, ValueError):
    """Custom exception for arguments violating an operation's precondition."""
    pass


class InvalidDescentSetError(ContractError):
    """Custom exception for descent sets not contained in {1..n-1}."""
    pass


class UndefinedOperationError(ContractError):
    """Custom exception for operations undefined on their arguments (e.g. near-concatenation with an empty side)."""
    pass


class OutOfRangeError(ContractError):
    """Custom exception for numeric arguments outside their admissible range."""
    pass


class EmptyWordError(ContractError):
    """Custom exception for operations that need a nonempty word."""
    pass


class ResourceLimitError(NcsfError):
    """Custom exception for degrees above the configured enumeration cap."""

    def __init__(self, degree, cap, what="enumeration"):
        self.degree = degree
        self.cap = cap
        super().__init__(
            f"{what} of degree {degree} exceeds the configured cap {cap} "
            f"(raise it with --cap or NCSF_MAX_DEGREE)"
        )


class InvariantViolationError(NcsfError):
    """Custom exception for internal invariants that must never fail."""
    pass
