"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """Malformed shape, vertex, set or file contents."""


class CapExceeded(InvalidInput):
    """An instance is larger than the configured size limit."""


class DisconnectedGraph(InvalidInput):
    """Visibility is only defined here for connected graphs."""
