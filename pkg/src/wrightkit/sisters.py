"""Time-fractional diffusion kernels ``t^{mu-1} W_{-nu,mu}(-x/t^nu)``.

The four kernels for ``mu in {0, 1-nu, nu, 1}`` are addressed by role
name.  At ``nu = 1/2`` three of them reduce to the classical diffusion
kernels (complementary error function and Gaussians).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._precision import snap_rational
from .classical import erfc
from .errors import ConvergenceError, DomainError, PrecisionError
from .results import EvalResult
from .wright import WrightParams, series_feasible, wright_series


class Role(str, enum.Enum):
    """Which ``mu`` a kernel uses."""

    MU_ZERO = "mu_zero"
    MU_ONE_MINUS_NU = "mu_one_minus_nu"
    MU_NU = "mu_nu"
    MU_ONE = "mu_one"

    def mu_for(self, nu):
        return {
            Role.MU_ZERO: 0 * nu,
            Role.MU_ONE_MINUS_NU: 1 - nu,
            Role.MU_NU: nu,
            Role.MU_ONE: 1 + 0 * nu,
        }[self]


ROLES = (Role.MU_ZERO, Role.MU_ONE_MINUS_NU, Role.MU_NU, Role.MU_ONE)


@dataclass(frozen=True)
class SisterSpec:
    """A kernel selected by ``nu`` in ``(0, 1)`` and a :class:`Role`."""

    nu: float
    role: Role

    def __post_init__(self):
        nu = snap_rational(self.nu)
        if not 0 < nu < 1:
            raise DomainError(f"nu must lie in (0, 1), got {float(nu)}")
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "role", Role(self.role))

    @property
    def mu(self):
        return self.role.mu_for(self.nu)


def sister_result(spec: SisterSpec, x: float, t: float, method: str = "auto",
                  rel_tol: float = 1e-13) -> EvalResult:
    """Kernel value with bookkeeping; see :func:`sister`."""
    xf, tf = float(x), float(t)
    if not (math.isfinite(xf) and xf >= 0):
        raise DomainError(f"x must be non-negative, got {x}")
    if not (math.isfinite(tf) and tf > 0):
        raise DomainError(f"t must be positive, got {t}")
    if method not in ("auto", "series", "contour"):
        raise DomainError(f"unknown method {method!r}")
    nu, mu = spec.nu, spec.mu
    tpow = tf ** (float(mu) - 1.0)
    z = -xf / tf ** float(nu)
    p = WrightParams(-nu, mu)
    if method == "series" or (method == "auto" and series_feasible(p, z)):
        try:
            r = wright_series(p, z, rel_tol)
            return EvalResult(tpow * r.value, r.terms_used, tpow * r.err_estimate)
        except (ConvergenceError, PrecisionError):
            if method == "series":
                raise
    from .laplace import invert_result

    return invert_result(nu, mu, xf, tf)


def sister(spec: SisterSpec, x: float, t: float, method: str = "auto") -> float:
    """Evaluate ``t^{mu-1} W_{-nu,mu}(-x/t^nu)`` for ``x >= 0``, ``t > 0``.

    ``method="auto"`` sums the series when it fits the term and precision
    budgets and otherwise inverts the Laplace transform numerically.
    """
    return sister_result(spec, x, t, method).value


def three_sisters_closed(which: str, x: float, t: float) -> float:
    """Classical diffusion kernels at ``nu = 1/2``.

    ``phi = erfc(x / (2 sqrt t))``,
    ``psi = x/(2 sqrt(pi)) t^{-3/2} exp(-x^2/(4t))`` and
    ``chi = 1/sqrt(pi) t^{-1/2} exp(-x^2/(4t))``.
    """
    xf, tf = float(x), float(t)
    if not (math.isfinite(xf) and xf >= 0 and math.isfinite(tf) and tf > 0):
        raise DomainError("require x >= 0 and t > 0")
    if which == "phi":
        return erfc(xf / (2.0 * math.sqrt(tf)))
    g = math.exp(-xf * xf / (4.0 * tf))
    if which == "psi":
        return xf / (2.0 * math.sqrt(math.pi)) * tf ** -1.5 * g
    if which == "chi":
        return g / math.sqrt(math.pi * tf)
    raise DomainError(f"unknown kernel {which!r}; expected phi, psi or chi")


#: three-sister name for each role at nu = 1/2 (mu_one_minus_nu equals mu_nu there)
THREE_SISTER_ROLE = {"phi": Role.MU_ONE, "psi": Role.MU_ZERO, "chi": Role.MU_NU}


def grid(lo: float = 0.01, hi: float = 5.0, n: int = 500, log: bool = False) -> np.ndarray:
    """Abscissae for figure data: ``n`` points on ``[lo, hi]``."""
    if n < 1:
        raise DomainError("n must be positive")
    if log:
        if lo <= 0:
            raise DomainError("log spacing needs lo > 0")
        return np.geomspace(lo, hi, n)
    return np.linspace(lo, hi, n)
