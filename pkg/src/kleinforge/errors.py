"""Shared exception types."""


class CapacityError(ValueError):
    """Input exceeds a hard representation limit (e.g. bit-mask width)."""


class FeasibilityError(RuntimeError):
    """A search or enumeration would exceed its configured work budget."""
