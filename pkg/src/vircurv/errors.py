"""Exception hierarchy shared by every module."""

from __future__ import annotations


class VircurvError(Exception):
    """Base class for all errors raised by vircurv."""


class ParseError(VircurvError, ValueError):
    """Malformed text input. ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at offset {position}")


class DomainError(VircurvError, ValueError):
    """An operation was applied outside its mathematical domain."""


class ParameterError(VircurvError, ValueError):
    """Central parameters (c, h) are unusable for the requested computation."""
