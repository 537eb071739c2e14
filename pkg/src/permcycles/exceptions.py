"""Exceptions shared across the package."""


class ParseError(ValueError):
    """Malformed text input (permutation, cycle form, pattern, or path)."""


class CapExceeded(RuntimeError):
    """An enumeration was requested beyond its configured size cap."""
