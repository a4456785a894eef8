class ResourceLimitError(RuntimeError):
    """A computation would exceed the configured size limit."""


class VerificationError(AssertionError):
    """A verification suite found a discrepancy."""
