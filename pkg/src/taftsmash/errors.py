class InvalidInput(ValueError):
    """Raised when a spec, flag or serialized object violates a precondition."""


class MalformedInput(InvalidInput):
    """Raised when structure tensors or serialized data are dimensionally inconsistent."""


class ScaleGuardExceeded(RuntimeError):
    """Raised when an exhaustive search would exceed the configured candidate bound."""
