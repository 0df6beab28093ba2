"""Exception hierarchy.

``ParseError`` covers malformed text or JSON input; ``DomainError`` and
its subclasses cover well-formed input the algebra cannot handle.
"""

from __future__ import annotations


class LinrecError(Exception):
    pass


class ParseError(LinrecError, ValueError):
    def __init__(self, message: str, offset: int | None = None, text: str | None = None):
        super().__init__(message)
        self.message = message
        self.offset = offset
        self.text = text

    def __str__(self):
        if self.offset is None:
            return self.message
        return f"{self.message} (at byte {self.offset})"


class DomainError(LinrecError):
    pass


class LengthMismatch(DomainError, ValueError):
    pass


class OrderMismatch(DomainError, ValueError):
    pass


class NonSplitCharPoly(DomainError):
    """Characteristic polynomial has no full factorization over Q(i)."""

    def __init__(self, message: str, residual=None, roots=None):
        super().__init__(message)
        self.residual = residual
        self.roots = roots


class ZeroElement(DomainError, ValueError):
    pass


class BoxTooSmall(DomainError):
    pass


class VerificationFailure(LinrecError, AssertionError):
    """An internal self-check failed; always a bug."""
