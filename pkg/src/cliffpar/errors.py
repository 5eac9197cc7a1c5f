"""Exception types shared across the package."""

from __future__ import annotations


class MixedFieldError(ValueError):
    """Operands live over different base fields or different coordinate bases."""


class InvalidBasisError(ValueError):
    """The proposed elements do not form a basis of the quartic extension."""


class NonInvertibleError(ZeroDivisionError):
    """Inversion was requested for an element of the non-unit ideal."""


class DegenerateConfigurationError(ValueError):
    """The geometric configuration does not determine the requested object."""
