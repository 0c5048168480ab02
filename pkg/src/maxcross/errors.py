"""Exception types shared across the package."""


class DegeneracyError(ValueError):
    """A drawing violates general position where an operation requires it."""


class ConstructionError(RuntimeError):
    """A drawing construction failed an internal consistency check."""


class ResourceLimitError(RuntimeError):
    """A request exceeds the configured enumeration or search cap."""
