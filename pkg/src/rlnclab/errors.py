"""Shared exception types."""


class GuardExceeded(RuntimeError):
    """An enumeration request is larger than the configured desk-scale guard."""
