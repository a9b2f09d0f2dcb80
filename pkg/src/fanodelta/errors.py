"""Error taxonomy shared across the library.

DomainError marks inputs outside a formula's domain of validity; the message
always names the violated constraint. InternalCheckError marks a disagreement
between two computation routes that must agree exactly, which indicates a bug
rather than bad input.
"""

from __future__ import annotations


class DomainError(ValueError):
    """Input outside the mathematical domain of the requested operation."""


class InternalCheckError(RuntimeError):
    """Two independent exact routes produced different values."""
