"""Numerical inversion of ``s^{-mu} exp(-x s^nu)`` on a Hankel-type contour.

The Bromwich line is deformed into the left-opening hyperbola

    s(u) = S (1 + sin(i u - alpha)),   -umax <= u <= umax,

which crosses the positive real axis once at ``S (1 - sin alpha)`` and
whose ends run off to ``Re s -> -inf`` on either side of the branch cut.
The integral is approximated with the trapezoid rule in ``u``.

Shape selection.  The crossing point is placed at the larger of a fixed
``scale * (1 - sin alpha0) / t`` and the saddle point
``(x nu / t)^{1/(1-nu)}`` of ``s t - x s^nu``.  The opening angle
``alpha`` is then reduced from ``max_angle`` until the real part of the
exponent along the path never rises more than ``growth_margin`` above its
value on the real axis, and ``umax`` is chosen so that ``e^{s t}`` has
decayed by ``e^{-decay}`` at the ends.  The contour depends only on
``(nu, x, t)`` and not on ``node_count``, so doubling the nodes is a clean
convergence check.

The integrand satisfies ``g(-u) = -conj(g(u))``.  Both halves are computed
independently and summed pairwise in a fixed order; the imaginary part of
the result must vanish, which catches branch mistakes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._precision import snap_rational
from .errors import ContourError, DomainError
from .results import EvalResult

SYMMETRY_TOL = 1e-8


@dataclass(frozen=True)
class ContourSpec:
    """Quadrature path parameters.

    Attributes
    ----------
    node_count : int
        Total trapezoid nodes (at least 16); ``node_count // 2`` on each side.
    scale : float
        Minimum crossing scale, divided by ``t``.
    max_angle : float
        Largest opening angle ``alpha`` tried, in radians (below ``pi/2``).
    growth_margin : float
        Allowed rise of the exponent's real part along the path.
    decay : float
        Log-decay of ``e^{s t}`` required at the path ends.
    """

    node_count: int = 96
    scale: float = 30.0
    max_angle: float = 0.9
    growth_margin: float = 8.0
    decay: float = 45.0

    def __post_init__(self):
        if isinstance(self.node_count, bool) or int(self.node_count) != self.node_count or self.node_count < 16:
            raise DomainError(f"node_count must be an integer >= 16, got {self.node_count}")
        if not 0.05 < self.max_angle < math.pi / 2:
            raise DomainError("max_angle must lie in (0.05, pi/2)")
        if self.scale <= 0 or self.decay <= 0 or self.growth_margin < 0:
            raise DomainError("scale and decay must be positive, growth_margin non-negative")

    def doubled(self) -> "ContourSpec":
        return ContourSpec(2 * self.node_count, self.scale, self.max_angle, self.growth_margin, self.decay)


def _shape(nu: float, x: float, t: float, c: ContourSpec):
    """Return ``(alpha, S, umax)`` for the given problem."""
    sig = (x * nu / t) ** (1.0 / (1.0 - nu)) if nu > 0 and x > 0 else 0.0
    cross = max(c.scale * (1.0 - math.sin(c.max_angle)) / t, sig)
    u_probe = None
    for alpha in np.linspace(c.max_angle, 0.05, 18):
        S = cross / (1.0 - math.sin(alpha))
        umax = math.acosh((1.0 + c.decay / (S * t)) / math.sin(alpha))
        u_probe = np.linspace(0.0, umax, 400)
        s = S * (1.0 + np.sin(1j * u_probe - alpha))
        with np.errstate(all="ignore"):
            phase = (s * t - x * s ** nu).real
        if np.max(phase) <= max(phase[0], 0.0) + c.growth_margin:
            return float(alpha), S, umax
    return float(alpha), S, umax


def _integrand(u, alpha, S, t, x, nu, mu):
    w = 1j * u - alpha
    s = S * (1.0 + np.sin(w))
    ds = 1j * S * np.cos(w)
    with np.errstate(all="ignore"):
        return np.exp(s * t - x * s ** nu) * s ** (-mu) * ds


def _trapezoid(nu, mu, x, t, c: ContourSpec):
    alpha, S, umax = _shape(nu, x, t, c)
    n = c.node_count // 2
    h = umax / n
    k = np.arange(1, n + 1)
    g0 = _integrand(np.array([0.0]), alpha, S, t, x, nu, mu)[0]
    gp = _integrand(k * h, alpha, S, t, x, nu, mu)
    gm = _integrand(-k * h, alpha, S, t, x, nu, mu)
    pairs = gp + gm
    if not (np.all(np.isfinite(pairs)) and np.isfinite(g0)):
        raise ContourError("non-finite integrand on the contour")
    re = math.fsum([g0.real, *pairs.real.tolist()])
    im = math.fsum([g0.imag, *pairs.imag.tolist()])
    scale = h / (2.0 * math.pi)
    value = scale * im
    residue = -scale * re
    if abs(residue) > SYMMETRY_TOL * (abs(value) + 1e-30):
        raise ContourError(
            f"imaginary residue {residue:.3e} fails the symmetry check (value {value:.3e})"
        )
    return value


def _validate(nu, mu, x, t):
    nu = float(snap_rational(nu))
    mu = float(snap_rational(mu))
    x = float(x)
    t = float(t)
    if not 0 < nu < 1:
        raise DomainError(f"nu must lie in (0, 1), got {nu}")
    if not mu >= 0:
        raise DomainError(f"mu must be non-negative, got {mu}")
    if not (math.isfinite(x) and x > 0):
        raise DomainError(f"x must be positive, got {x}")
    if not (math.isfinite(t) and t > 0):
        raise DomainError(f"t must be positive, got {t}")
    return nu, mu, x, t


def invert(nu: float, mu: float, x: float, t: float, contour: ContourSpec | None = None) -> float:
    """Inverse Laplace transform of ``s^{-mu} exp(-x s^nu)`` at time ``t``.

    Mathematically equal to ``t^{mu-1} W_{-nu,mu}(-x/t^nu)``, but computed
    without any use of the Wright series.

    Raises
    ------
    ContourError
        If the quadrature's imaginary part is not negligible or the
        integrand overflows.
    """
    nu, mu, x, t = _validate(nu, mu, x, t)
    return _trapezoid(nu, mu, x, t, contour or ContourSpec())


def invert_result(nu, mu, x, t, contour: ContourSpec | None = None) -> EvalResult:
    """:func:`invert` with a node-doubling error estimate.

    ``x = 0`` is allowed here (the transform is then ``s^{-mu}``).
    """
    c = contour or ContourSpec()
    nu_f = float(snap_rational(nu))
    mu_f = float(snap_rational(mu))
    xf, tf = float(x), float(t)
    if xf == 0:
        if mu_f <= 0:
            raise DomainError("x = 0 requires mu > 0")
    else:
        nu_f, mu_f, xf, tf = _validate(nu_f, mu_f, xf, tf)
    v1 = _trapezoid(nu_f, mu_f, xf, tf, c)
    v2 = _trapezoid(nu_f, mu_f, xf, tf, c.doubled())
    return EvalResult(v2, c.doubled().node_count + 1, abs(v2 - v1), method="contour")


def hankel_rgamma(z: float, contour: ContourSpec | None = None) -> float:
    """``1/Gamma(z)`` from the Hankel integral ``(1/2 pi i) int e^s s^{-z} ds``.

    Uses exactly the same path and quadrature as :func:`invert` (with
    ``x = 0``, ``t = 1``), so it checks the contour machinery against a
    known function.
    """
    return _trapezoid(0.5, float(z), 0.0, 1.0, contour or ContourSpec())
