"""Whittaker, Bessel, Airy and error functions for real arguments.

Everything here is assembled from ascending series (via the hypergeometric
kernel where possible) evaluated on the precision ladder, so no independent
asymptotic approximations enter the closed-form side of an identity.

Each public function has an ``*_mp`` twin that works at the current
precision of a given mpmath context; the closed-form registry composes
those twins and runs the whole composition on one ladder.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._precision import get_ctx, ladder, snap_rational, to_mpf, workprec
from .errors import DomainError
from .gamma_core import gamma_mp, rgamma_mp
from .hypergeometric import hyp1f1_mp

_LN2 = math.log(2.0)


def _mp(ctx, x):
    return to_mpf(ctx, x) if isinstance(x, Fraction) else ctx.mpf(x)


def _is_half_integer_multiple(mu) -> bool:
    two_mu = 2 * mu
    if isinstance(two_mu, Fraction):
        return two_mu.denominator == 1
    return float(two_mu) == math.floor(float(two_mu))


# -- Whittaker ---------------------------------------------------------------


@dataclass(frozen=True)
class WhittakerParams:
    """Indices and argument of a Whittaker function.

    Invariants: ``2*mu`` is not an integer and ``argument > 0``.
    """

    kappa: float
    mu: float
    argument: float

    def __post_init__(self):
        object.__setattr__(self, "kappa", snap_rational(self.kappa))
        object.__setattr__(self, "mu", snap_rational(self.mu))
        arg = float(self.argument)
        if not math.isfinite(arg) or arg <= 0:
            raise DomainError(f"Whittaker argument must be positive, got {self.argument}")
        if _is_half_integer_multiple(self.mu):
            raise DomainError(f"2*mu = {2 * self.mu} is an integer (logarithmic case)")


def _pow(ctx, z, e):
    if isinstance(z, ctx.mpc) or z < 0:
        return ctx.power(ctx.mpc(z), e)
    return ctx.power(z, e)


def whittaker_m_mp(ctx, kappa, mu, z):
    """``M_{kappa,mu}(z)`` at the context precision (``z`` may be negative)."""
    zz = _mp(ctx, z)
    if zz == 0:
        return ctx.zero
    a = Fraction(1, 2) + mu - kappa if isinstance(mu, Fraction) and isinstance(kappa, Fraction) else 0.5 + float(mu) - float(kappa)
    b = 1 + 2 * mu
    return ctx.exp(-zz / 2) * _pow(ctx, zz, _mp(ctx, Fraction(1, 2) + mu if isinstance(mu, Fraction) else 0.5 + mu)) * hyp1f1_mp(ctx, a, b, zz)


def whittaker_w_mp(ctx, kappa, mu, z):
    """``W_{kappa,mu}(z)`` from two 1F1 terms, at the context precision.

    For a negative real ``z`` the principal branch is used and the result
    is an ``mpc``.
    """
    zz = _mp(ctx, z)
    exact = isinstance(mu, Fraction) and isinstance(kappa, Fraction)
    half = Fraction(1, 2) if exact else 0.5
    a1 = half + mu - kappa
    a2 = half - mu - kappa
    first = gamma_mp(ctx, -2 * mu) * rgamma_mp(ctx, half - mu - kappa)
    second = gamma_mp(ctx, 2 * mu) * rgamma_mp(ctx, half + mu - kappa)
    total = ctx.zero
    if first != 0:
        total += first * hyp1f1_mp(ctx, a1, 1 + 2 * mu, zz)
    if second != 0:
        total += second * _pow(ctx, zz, _mp(ctx, -2 * mu)) * hyp1f1_mp(ctx, a2, 1 - 2 * mu, zz)
    return ctx.exp(-zz / 2) * _pow(ctx, zz, _mp(ctx, half + mu)) * total


def _whittaker_bits(z: float) -> int:
    return 64 + int(1.5 * abs(z) / _LN2)


def whittaker_w(p: WhittakerParams) -> float:
    """Whittaker function ``W_{kappa,mu}(z)`` for ``z > 0``.

    Built from the two-term 1F1 representation; when a reciprocal gamma
    coefficient vanishes the corresponding term is dropped.

    Examples
    --------
    >>> round(whittaker_w(WhittakerParams(0.5, 1/6, 1.0)), 12) > 0
    True
    """
    val, _ = ladder(
        lambda ctx: whittaker_w_mp(ctx, p.kappa, p.mu, p.argument),
        start_bits=_whittaker_bits(float(p.argument)),
    )
    return float(val)


def whittaker_m(p: WhittakerParams) -> float:
    """Whittaker function ``M_{kappa,mu}(z) = e^{-z/2} z^{1/2+mu} 1F1(1/2+mu-kappa; 1+2mu; z)``."""
    if isinstance(p.mu, Fraction) and (1 + 2 * p.mu).denominator == 1 and 1 + 2 * p.mu <= 0:
        raise DomainError("1 + 2*mu is a non-positive integer")
    val, _ = ladder(
        lambda ctx: whittaker_m_mp(ctx, p.kappa, p.mu, p.argument),
        start_bits=_whittaker_bits(float(p.argument)),
    )
    return float(val)


# -- Bessel ------------------------------------------------------------------


def _bessel_series_mp(ctx, order, x, sign):
    """``sum (sign x^2/4)^k / (k! Gamma(k+order+1))`` times ``(x/2)^order``."""
    xx = _mp(ctx, x)
    nu = _mp(ctx, order)
    w = sign * xx * xx / 4
    eps = ctx.ldexp(1, -ctx.prec)
    rg = rgamma_mp(ctx, order + 1)
    use_recurrence = rg != 0
    total = ctx.zero
    term_c = ctx.one
    small = 0
    k = 0
    while True:
        if not use_recurrence:
            rg = rgamma_mp(ctx, order + 1 + k)
        t = term_c * rg
        total += t
        if abs(t) <= eps * abs(total) and k > abs(w):
            small += 1
            if small >= 3:
                break
        else:
            small = 0
        k += 1
        term_c = term_c * w / k
        if use_recurrence:
            rg = rg / (nu + k)
        if k > 100000:
            raise DomainError("Bessel series failed to converge")
    return total * ctx.power(xx / 2, nu)


def _check_order(order):
    o = snap_rational(order)
    return o


def bessel_j_mp(ctx, order, x):
    """``J_order(x)`` at the context precision, ``x >= 0``."""
    o = _check_order(order)
    if isinstance(o, Fraction) and o.denominator == 1 and o < 0:
        n = -o
        return (-1) ** int(n) * _bessel_series_mp(ctx, n, x, -1)
    return _bessel_series_mp(ctx, o, x, -1)


def bessel_i_mp(ctx, order, x):
    """``I_order(x)`` at the context precision, ``x >= 0``."""
    o = _check_order(order)
    if isinstance(o, Fraction) and o.denominator == 1 and o < 0:
        return _bessel_series_mp(ctx, -o, x, 1)
    return _bessel_series_mp(ctx, o, x, 1)


def bessel_k_mp(ctx, order, x):
    """``K_order(x) = pi (I_{-order} - I_order) / (2 sin(order pi))``."""
    o = _check_order(order)
    s = ctx.sinpi(_mp(ctx, o))
    if s == 0:
        raise DomainError("integer order K is not supported")
    return ctx.pi * (bessel_i_mp(ctx, -o, x) - bessel_i_mp(ctx, o, x)) / (2 * s)


def _check_x_bessel(order, x, strict: bool):
    xf = float(x)
    if not math.isfinite(xf):
        raise DomainError(f"argument must be finite, got {x}")
    if strict and xf <= 0:
        raise DomainError(f"K requires x > 0, got {x}")
    if xf < 0:
        raise DomainError(f"argument must be non-negative, got {x}")
    if xf == 0 and float(order) < 0 and float(order) != math.floor(float(order)):
        raise DomainError("negative non-integer order is singular at x = 0")


def bessel_j(order: float, x: float) -> float:
    """Bessel function of the first kind ``J_order(x)`` for ``x >= 0``.

    Ascending series; accurate for moderate ``x`` (tested up to 10).
    """
    _check_x_bessel(order, x, strict=False)
    if float(x) == 0:
        return 1.0 if float(order) == 0 else 0.0
    val, _ = ladder(lambda ctx: bessel_j_mp(ctx, order, x), start_bits=64 + int(abs(float(x)) / _LN2))
    return float(val)


def bessel_i(order: float, x: float) -> float:
    """Modified Bessel function ``I_order(x)`` for ``x >= 0``."""
    _check_x_bessel(order, x, strict=False)
    if float(x) == 0:
        return 1.0 if float(order) == 0 else 0.0
    val, _ = ladder(lambda ctx: bessel_i_mp(ctx, order, x), start_bits=64)
    return float(val)


def bessel_k(order: float, x: float) -> float:
    """Modified Bessel function ``K_order(x)`` for ``x > 0``, non-integer order.

    Computed from the difference of ``I_{-order}`` and ``I_order``; the
    cancellation (about ``2x/ln 2`` bits) is absorbed by the precision
    ladder.
    """
    _check_x_bessel(order, x, strict=True)
    val, _ = ladder(lambda ctx: bessel_k_mp(ctx, order, x), start_bits=64 + int(2 * float(x) / _LN2))
    return float(val)


# -- Airy --------------------------------------------------------------------


def airy_mp(ctx, x):
    """``(Ai(x), Ai'(x))`` from the Maclaurin pair at the context precision."""
    xx = _mp(ctx, x)
    third = ctx.one / 3
    c1 = ctx.cbrt(3) ** -2 * ctx.rgamma(2 * third)
    c2 = ctx.rgamma(third) / ctx.cbrt(3)
    if xx == 0:
        return c1, -c2
    x3 = xx ** 3
    eps = ctx.ldexp(1, -ctx.prec)
    f = fp = g = gp = ctx.zero
    tf = ctx.one
    tg = xx
    k = 0
    small = 0
    while True:
        f += tf
        fp += 3 * k * tf
        g += tg
        gp += (3 * k + 1) * tg
        mag = max(abs(tf), abs(tg)) * (3 * k + 1)
        if mag <= eps * (abs(f) + abs(g)) and k > abs(xx) ** 1.5:
            small += 1
            if small >= 3:
                break
        else:
            small = 0
        tf = tf * x3 / ((3 * k + 2) * (3 * k + 3))
        tg = tg * x3 / ((3 * k + 3) * (3 * k + 4))
        k += 1
    fp /= xx
    gp /= xx
    return c1 * f - c2 * g, c1 * fp - c2 * gp


def airy(x: float) -> tuple[float, float]:
    """Airy function and its derivative, ``(Ai(x), Ai'(x))``.

    Maclaurin pair on the precision ladder; validated for ``|x| <= 8``.
    """
    xf = float(x)
    if not math.isfinite(xf):
        raise DomainError(f"argument must be finite, got {x}")
    hint = 64 + int((4.0 / 3.0) * abs(xf) ** 1.5 / _LN2)
    ai, _ = ladder(lambda ctx: airy_mp(ctx, xf)[0], start_bits=hint)
    aip, _ = ladder(lambda ctx: airy_mp(ctx, xf)[1], start_bits=hint)
    return float(ai), float(aip)


# -- error function ----------------------------------------------------------

_ERF_SERIES_MAX = 3.0


def _erf_series_mp(ctx, x):
    """``(2x/sqrt(pi)) e^{-x^2} sum (2x^2)^n / (1*3*...*(2n+1))``; no cancellation."""
    xx = _mp(ctx, x)
    w = 2 * xx * xx
    eps = ctx.ldexp(1, -ctx.prec)
    total = ctx.zero
    t = ctx.one
    n = 0
    while True:
        total += t
        if t <= eps * total and n > w:
            break
        t = t * w / (2 * n + 3)
        n += 1
    return 2 * xx / ctx.sqrt(ctx.pi) * ctx.exp(-xx * xx) * total


def _erfc_cf_mp(ctx, x):
    """``erfc(x)`` for ``x > 0`` by the Laplace continued fraction.

    ``erfc(x) = e^{-x^2}/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))``,
    evaluated backwards with the depth doubled until it stabilizes.
    """
    xx = _mp(ctx, x)
    eps = ctx.ldexp(1, -ctx.prec + 4)

    def depth(n):
        r = xx
        for k in range(n, 0, -1):
            r = xx + (ctx.mpf(k) / 2) / r
        return r

    n = 32
    prev = depth(n)
    while True:
        n *= 2
        cur = depth(n)
        if abs(cur - prev) <= eps * abs(cur):
            break
        if n > 1 << 16:
            raise DomainError("erfc continued fraction failed to converge")
        prev = cur
    return ctx.exp(-xx * xx) / (ctx.sqrt(ctx.pi) * cur)


def erfc_mp(ctx, x):
    """Complementary error function at the context precision."""
    xx = _mp(ctx, x)
    if xx < 0:
        return 2 - erfc_mp(ctx, -xx)
    if xx > _ERF_SERIES_MAX:
        return _erfc_cf_mp(ctx, xx)
    return 1 - _erf_series_mp(ctx, xx)


def erf_mp(ctx, x):
    """Error function at the context precision."""
    xx = _mp(ctx, x)
    if abs(xx) > _ERF_SERIES_MAX:
        s = 1 if xx > 0 else -1
        return s * (1 - _erfc_cf_mp(ctx, abs(xx)))
    return _erf_series_mp(ctx, xx)


def erf(x: float) -> float:
    """Error function.

    Uses a positive-term series for ``|x| <= 3`` and a continued fraction
    for the complement beyond.

    Examples
    --------
    >>> erf(0.0)
    0.0
    """
    xf = float(x)
    if math.isnan(xf):
        raise DomainError("erf of NaN")
    if math.isinf(xf):
        return math.copysign(1.0, xf)
    if xf == 0:
        return 0.0
    ctx = get_ctx()
    with workprec(ctx, 96):
        return float(erf_mp(ctx, xf))


def erfc(x: float) -> float:
    """Complementary error function ``1 - erf(x)`` without cancellation."""
    xf = float(x)
    if math.isnan(xf):
        raise DomainError("erfc of NaN")
    if math.isinf(xf):
        return 0.0 if xf > 0 else 2.0
    ctx = get_ctx()
    bits = 96 + (int(xf * xf / _LN2) if 0 < xf <= _ERF_SERIES_MAX else 0)
    with workprec(ctx, bits):
        return float(erfc_mp(ctx, xf))
