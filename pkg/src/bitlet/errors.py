"""Exception types shared across the package."""

from __future__ import annotations


class BitletError(Exception):
    """Base class for all package errors."""


class ValidationError(BitletError):
    """A parameter violates its constraint. Carries the offending field name."""

    def __init__(self, field: str, message: str):
        self.field = field
        self.message = message
        super().__init__(f"{field} {message}")


class EvaluationError(BitletError):
    """The model cannot be evaluated for the given inputs."""


class UnachievableLevelError(BitletError):
    """An iso-level lies outside the range the machine can reach, or is degenerate."""


class ConfigError(BitletError):
    """A config document is malformed. Carries the offending key path."""

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}" if path else message)


class UnknownScenarioError(BitletError):
    """Requested scenario id is not in the catalog."""
