"""Exception types shared across the package."""

from __future__ import annotations


class ResourceLimitError(RuntimeError):
    """A request exceeded a configured size ceiling and was refused."""


class EnumerationCapError(ResourceLimitError):
    """Streaming was refused because the sequence count exceeds the cap.

    Carries the exact count so callers can report it without streaming.
    """

    def __init__(self, n: int, count: int, cap: int) -> None:
        super().__init__(
            f"refusing to stream {count} sequences for n={n} (cap {cap})"
        )
        self.n = n
        self.count = count
        self.cap = cap


class TheoremViolationError(RuntimeError):
    """A theorem-backed invariant failed.

    These inequalities are mathematical facts; a violation always means an
    implementation bug, never bad input.
    """

    def __init__(self, message: str, n: int | None = None) -> None:
        super().__init__(message)
        self.n = n
