"""Exception hierarchy shared across the package."""


class LlmKeyError(Exception):
    """Base class for all package errors."""


class ConfigurationError(LlmKeyError):
    """Invalid configuration or parameter value."""


class IngestionError(LlmKeyError):
    """A trace file could not be read or parsed."""


class DegenerateTraceError(LlmKeyError):
    """Trace carries no usable variation (flat or too few samples)."""


class DimensionError(LlmKeyError):
    """Operand shapes do not match."""


class ReplyParseError(LlmKeyError):
    """A model reply could not be turned into a value sequence."""


class TransportError(LlmKeyError):
    """The chat endpoint could not be reached or answered unusably."""


class SessionError(LlmKeyError):
    """A key-establishment session failed; carries the failing stage name."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"session aborted in stage '{stage}': {cause}")
        self.stage = stage
        self.cause = cause
