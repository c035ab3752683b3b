"""Shared exception types."""

from __future__ import annotations


class GuardExceeded(RuntimeError):
    """A computation would exceed a configurable resource guard.

    Carries the size that would be needed so callers (and the CLI) can
    report how far over the limit the request was.
    """

    def __init__(self, message: str, *, needed: int | None = None,
                 guard: int | None = None):
        super().__init__(message)
        self.needed = needed
        self.guard = guard
