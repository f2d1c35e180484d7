"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Matrix shape does not fit the requested operation."""


class NonConstantError(TypeError):
    """A polynomial entry was required to be a rational constant."""


class ResourceError(RuntimeError):
    """An enumeration or rewriting exceeded its configured cap."""


class PreconditionError(ValueError):
    """Input violates the documented precondition of an operation."""
