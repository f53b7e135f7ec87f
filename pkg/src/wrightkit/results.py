"""Result container shared by the series and closed-form evaluators."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EvalResult:
    """A function value with bookkeeping from its evaluation.

    Attributes
    ----------
    value : float
        The computed value, rounded to double.
    terms_used : int
        Series terms summed (quadrature nodes for contour evaluations,
        0 for pure closed forms).
    err_estimate : float
        Absolute error estimate; always non-negative.
    method : str
        ``"series"``, ``"contour"`` or ``"closed"``.
    """

    value: float
    terms_used: int
    err_estimate: float
    method: str = "series"

    def __post_init__(self):
        if not self.err_estimate >= 0:
            raise ValueError("err_estimate must be non-negative")
        if self.terms_used < 0:
            raise ValueError("terms_used must be non-negative")

    def __float__(self) -> float:
        return self.value
