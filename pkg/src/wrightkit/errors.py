"""Exception hierarchy for wrightkit."""
from __future__ import annotations


class WrightError(Exception):
    """Base class for all library errors."""


class DomainError(WrightError, ValueError):
    """Arguments outside the supported domain."""


class ConvergenceError(WrightError, ArithmeticError):
    """A series did not converge within its term cap."""


class PrecisionError(WrightError, ArithmeticError):
    """Cancellation or intermediate growth exceeds the precision budget."""


class GammaOverflowError(WrightError, OverflowError):
    """Gamma (or a Pochhammer product) is too large for a double."""


class RegistryError(WrightError, KeyError):
    """Unknown closed-form table entry or identity record."""

    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return str(self.args[0]) if self.args else ""


class ContourError(WrightError, ArithmeticError):
    """The contour quadrature failed its symmetry or finiteness check."""
