"""Wright functions ``W_{lam,mu}(z) = sum z^n / (n! Gamma(lam n + mu))``.

For the second kind (``-1 < lam < 0``) and ``z < 0`` the series alternates
and its terms grow to many orders of magnitude above the sum before they
decay.  The engine therefore

1. scans the log-magnitude envelope of the terms in double precision to
   locate the peak and estimate the cancellation,
2. sums in extended precision with Neumaier compensation, past the peak,
   until the geometric tail of the envelope (an upper bound on each term,
   blind to the zeros of ``1/Gamma``) drops below ``rel_tol * |sum|`` for
   three consecutive terms, and
3. re-runs at higher precision if the measured cancellation
   ``log2(sum|t| / |sum t|)`` leaves fewer than 64 good bits.

When ``lam`` is a rational ``-p/q`` with a small denominator, reciprocal
gammas are propagated with ``1/Gamma(y-p) = (1/Gamma(y)) prod_{j=1..p}(y-j)``
so each term costs a few multiplications and poles give exact zeros.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._precision import (
    CompensatedSum,
    cancellation_bits,
    default_term_cap,
    get_ctx,
    is_nonpos_int,
    ladder,
    snap_rational,
    to_mpf,
    workprec,
)
from .errors import ConvergenceError, DomainError, PrecisionError
from .gamma_core import rgamma, rgamma_mp
from .hypergeometric import pfq_mp
from .results import EvalResult

#: largest working precision the series engine will use, in bits
SERIES_MAX_BITS = 12000
#: auto mode hands over to contour inversion above this many bits
AUTO_MAX_BITS = 1500
_LN_PI = math.log(math.pi)
_LN2 = math.log(2.0)
_MAX_RATIONAL_DEN = 64


@dataclass(frozen=True)
class WrightParams:
    """Parameters ``(lam, mu)`` of a Wright function.

    ``lam`` must exceed -1; the function is of the second kind when
    ``lam < 0``, with ``nu = -lam``.
    """

    lam: float
    mu: float

    def __post_init__(self):
        lam = snap_rational(self.lam)
        mu = snap_rational(self.mu)
        if not lam > -1:
            raise DomainError(f"lambda must exceed -1, got {float(lam)}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    @property
    def second_kind(self) -> bool:
        return self.lam < 0

    @property
    def nu(self):
        """``-lam`` for the second kind, else ``None``."""
        return -self.lam if self.second_kind else None


def _log_abs_rgamma_bound(y: float) -> float:
    """Upper bound on ``log|1/Gamma(y)|`` (``-inf`` at poles)."""
    if y > 0:
        return -math.lgamma(y)
    r = round(y)
    if abs(y - r) < 1e-12:
        return -math.inf
    return math.lgamma(1.0 - y) - _LN_PI


@dataclass(frozen=True)
class _Scan:
    n_peak: int
    log_peak: float
    n_end: int


def _scan(lam: float, mu: float, zabs: float, cap: int) -> _Scan:
    """Locate the peak of the term envelope and the point of decay.

    ``n_end`` is the first index past the peak whose envelope is
    ``~e^{-2 L - 40}`` below 1, with ``L`` the peak log-magnitude.  Raises
    :class:`ConvergenceError` when either lies beyond ``cap``.
    """
    lz = math.log(zabs)
    best = -math.inf
    n_peak = 0
    n = 0
    prev = -math.inf
    while True:
        if n > cap:
            raise ConvergenceError(
                f"series needs more than {cap} terms (term peak not reached)"
            )
        env = n * lz - math.lgamma(n + 1.0) + _log_abs_rgamma_bound(mu + lam * n)
        if env > best:
            best = env
            n_peak = n
        floor = -2.0 * max(best, 0.0) - 40.0
        if n > n_peak + 3 and -math.inf < env < floor and env <= prev + 1e-9:
            return _Scan(n_peak, max(best, 0.0), n)
        if math.isfinite(env):
            prev = env
        n += 1


def _rational_step(lam):
    """``(P, q)`` with ``lam = P/q`` if a cheap recurrence applies, else None."""
    if isinstance(lam, Fraction) and lam.denominator <= _MAX_RATIONAL_DEN and abs(lam.numerator) <= _MAX_RATIONAL_DEN:
        return lam.numerator, lam.denominator
    return None


def _wright_mp(ctx, lam, mu, z, eps, cap, n_min):
    """Sum the Wright series at the context precision.

    Returns ``(sum, sum_abs, terms, tail)``.
    """
    zz = to_mpf(ctx, z) if isinstance(z, Fraction) else ctx.mpf(z)
    step = _rational_step(lam)
    exact_mu = isinstance(mu, Fraction)
    mu_mp = to_mpf(ctx, mu) if exact_mu else ctx.mpf(mu)
    lam_mp = to_mpf(ctx, lam) if isinstance(lam, Fraction) else ctx.mpf(lam)
    acc = CompensatedSum(ctx.zero)
    coef = ctx.one
    small = 0
    lamf, muf = float(lam), float(mu)
    lz = math.log(abs(float(z)))
    log_eps = float(ctx.ln(eps))
    prev_env, prev_n = -math.inf, -1
    ring: list = []
    n = 0
    while True:
        if n >= cap:
            raise ConvergenceError(f"Wright series exceeded {cap} terms")
        if step is None:
            y = mu_mp + lam_mp * n
            rg = ctx.rgamma(y) if not is_nonpos_int(mu + lam * n) else ctx.zero
        else:
            P, q = step
            if n < q:
                y_exact = mu + lam * n if exact_mu else None
                y = to_mpf(ctx, y_exact) if exact_mu else mu_mp + lam_mp * n
                rg = rgamma_mp(ctx, y_exact) if exact_mu else ctx.rgamma(y)
                ring.append((y, rg))
            else:
                y0, rg0 = ring[n % q]
                y = y0 + P
                if P < 0:
                    prod = ctx.one
                    for j in range(1, -P + 1):
                        prod *= y0 - j
                    rg = rg0 * prod
                elif P > 0:
                    if rg0 == 0:
                        rg = rgamma_mp(ctx, mu + lam * n) if exact_mu else ctx.rgamma(y)
                    else:
                        prod = ctx.one
                        for j in range(P):
                            prod *= y0 + j
                        rg = rg0 / prod
                else:
                    rg = rg0
                ring[n % q] = (y, rg)
        term = coef * rg
        acc.add(term)
        # stop on the envelope, not the term: 1/Gamma has zeros that make
        # single terms spuriously small
        env = n * lz - math.lgamma(n + 1.0) + _log_abs_rgamma_bound(muf + lamf * n)
        cur = acc.value
        if env == -math.inf:
            gain = 0.0
        elif prev_env > env:
            # geometric tail factor 1/(1-r), r the per-step envelope ratio
            gain = -math.log1p(-math.exp((env - prev_env) / (n - prev_n)))
        else:
            gain = math.inf
        if n >= n_min and (cur == 0 or env + gain <= log_eps + float(ctx.ln(abs(cur)))):
            small += 1
            if small >= 3:
                return cur, acc.abs_total, n + 1, _tail(ctx, env, prev_env, n - prev_n)
        else:
            small = 0
        if env > -math.inf:
            prev_env, prev_n = env, n
        n += 1
        coef = coef * zz / n


def _tail(ctx, env, prev_env, gap):
    """Geometric tail bound from the last two finite envelope logs ``gap`` steps apart."""
    if env == -math.inf:
        env, gap = prev_env, gap + 1
    if env == -math.inf:
        return ctx.zero
    last = ctx.exp(env)
    if math.isfinite(prev_env) and env < prev_env and gap > 0:
        r = ctx.exp((env - prev_env) / gap)
        return last * r / (1 - r)
    return last


def _start_bits(p: WrightParams, z, scan: _Scan) -> int:
    if z < 0 or p.lam < 0:
        return 64 + int(2.0 * scan.log_peak / _LN2) + 16
    return 80


def _plan(p: WrightParams, z, cap):
    zf = float(z)
    scan = _scan(float(p.lam), float(p.mu), abs(zf), cap)
    return scan, _start_bits(p, z, scan)


def wright_series(
    p: WrightParams,
    z: float,
    rel_tol: float = 1e-12,
    term_cap: int | None = None,
    max_bits: int = SERIES_MAX_BITS,
) -> EvalResult:
    """Wright function by direct summation of its power series.

    Parameters
    ----------
    p : WrightParams
        Function parameters.
    z : float
        Real argument.
    rel_tol : float
        Stopping tolerance in ``(0, 1e-3]``: summation ends once the
        envelope tail bound past the term peak is below ``rel_tol * |sum|``.
    term_cap : int, optional
        Maximum number of terms (``WRIGHT_TERM_CAP`` or 10000 by default).
    max_bits : int
        Precision budget; exceeding it raises :class:`PrecisionError`.

    Returns
    -------
    EvalResult
        ``err_estimate`` is the envelope tail bound plus rounding, taken as
        ``sum|t| * (n+1) * 2**-prec`` on top of the final rounding to double.

    Raises
    ------
    ConvergenceError
        If more than ``term_cap`` terms would be needed.
    PrecisionError
        If the cancellation exceeds ``max_bits`` or the value overflows.
    """
    if not (0 < rel_tol <= 1e-3):
        raise DomainError(f"rel_tol must lie in (0, 1e-3], got {rel_tol}")
    z = snap_rational(z)
    cap = default_term_cap() if term_cap is None else int(term_cap)
    if z == 0:
        return EvalResult(_rgamma_exact(p.mu), 1, 0.0)
    scan, bits = _plan(p, z, cap)
    ctx = get_ctx()
    while True:
        if bits > max_bits:
            raise PrecisionError(
                f"cancellation needs {bits} bits, above the budget of {max_bits}"
            )
        with workprec(ctx, bits):
            s, sabs, n, tail = _wright_mp(ctx, p.lam, p.mu, z, ctx.mpf(rel_tol), cap, scan.n_peak)
            lost = cancellation_bits(ctx, s, sabs)
            if s != 0 and bits - lost < 64:
                bits = max(bits + 32, int(lost) + 96)
                continue
            value = float(s)
            if not math.isfinite(value):
                raise PrecisionError("Wright function value overflows a double")
            err = float(tail + sabs * (n + 1) * ctx.ldexp(1, -bits)) + abs(value) * 2.0 ** -53
            return EvalResult(value, n, err)


def _rgamma_exact(mu) -> float:
    if isinstance(mu, Fraction) and is_nonpos_int(mu):
        return 0.0
    return rgamma(float(mu))


def series_feasible(p: WrightParams, z, term_cap: int | None = None, max_bits: int = AUTO_MAX_BITS) -> bool:
    """Cheap prediction of whether :func:`wright_series` fits the budget."""
    cap = default_term_cap() if term_cap is None else term_cap
    if z == 0:
        return True
    try:
        scan, bits = _plan(p, snap_rational(z), cap)
    except ConvergenceError:
        return False
    return bits <= max_bits and scan.n_end <= cap


# -- auxiliary functions -----------------------------------------------------


def _check_nu_x(nu, x):
    nu = snap_rational(nu)
    if not 0 < nu < 1:
        raise DomainError(f"nu must lie in (0, 1), got {float(nu)}")
    xf = float(x)
    if not math.isfinite(xf) or xf < 0:
        raise DomainError(f"x must be finite and non-negative, got {x}")
    return nu, snap_rational(x)


def _auto(p: WrightParams, z, rel_tol, method, contour_args):
    if method not in ("auto", "series", "contour"):
        raise DomainError(f"unknown method {method!r}")
    if method == "series" or (method == "auto" and series_feasible(p, z)):
        try:
            return wright_series(p, z, rel_tol)
        except (ConvergenceError, PrecisionError):
            if method == "series":
                raise
    from .laplace import invert_result

    return invert_result(*contour_args)


def mainardi_m(nu: float, x: float, rel_tol: float = 1e-12, method: str = "auto") -> EvalResult:
    """M-Wright function ``M_nu(x) = W_{-nu,1-nu}(-x)`` for ``x >= 0``.

    With ``method="auto"`` the series is used whenever it fits the term
    and precision budgets; otherwise (large ``x`` or ``nu`` near 1) the
    value comes from contour inversion of ``s^{nu-1} exp(-x s^nu)`` at
    ``t = 1``, flagged by ``method="contour"`` in the result.
    """
    nu, x = _check_nu_x(nu, x)
    p = WrightParams(-nu, 1 - nu)
    return _auto(p, -x, rel_tol, method, (nu, 1 - nu, x, 1.0))


def auxiliary_f(nu: float, x: float, rel_tol: float = 1e-12, method: str = "auto") -> EvalResult:
    """Auxiliary function ``F_nu(x) = W_{-nu,0}(-x) = nu x M_nu(x)``."""
    nu, x = _check_nu_x(nu, x)
    if x == 0:
        return EvalResult(0.0, 1, 0.0)
    p = WrightParams(-nu, 0)
    return _auto(p, -x, rel_tol, method, (nu, 0, x, 1.0))


# -- the three-way split for nu = 2/3 -----------------------------------------

_SPLIT = (
    # (upper offsets a, lower b) per residue class j; uppers are a - mu/2
    ((Fraction(1, 2), Fraction(1)), (Fraction(1, 3), Fraction(2, 3)), Fraction(1)),
    ((Fraction(5, 6), Fraction(4, 3)), (Fraction(2, 3), Fraction(4, 3)), Fraction(5, 3)),
    ((Fraction(7, 6), Fraction(5, 3)), (Fraction(4, 3), Fraction(5, 3)), Fraction(7, 3)),
)


def split_two_thirds_mp(ctx, mu, x, sign: int):
    """``W_{-2/3,mu}(sign x)`` through the residue-class split ``n = 3m + j``.

    Each class is a 2F2 in ``sign X`` with ``X = 4x^3/27`` weighted by a
    gamma ratio and ``sin(pi(c - mu))``.
    """
    xx = to_mpf(ctx, x) if isinstance(x, Fraction) else ctx.mpf(x)
    mu_mp = to_mpf(ctx, mu) if isinstance(mu, Fraction) else ctx.mpf(mu)
    X = 4 * xx ** 3 / 27
    total = ctx.zero
    for j, (ups, lows, c) in enumerate(_SPLIT):
        ua = [u - mu / 2 for u in ups]
        lo_mp = [to_mpf(ctx, b) for b in lows]
        weight = 1 / (ctx.gamma(lo_mp[0]) * ctx.gamma(lo_mp[1]))
        s = ctx.sinpi(to_mpf(ctx, c) - mu_mp)
        for u in ua:
            if is_nonpos_int(u):
                # Gamma(u) sin(pi(c - mu)) -> 2 pi (-1)^(k + d) / k! with
                # u = -k and c - mu = 2u + d, d integer
                k = int(-u)
                d = int(round(float(c - mu - 2 * u)))
                weight *= 2 * ctx.pi * (-1) ** (k + d) / ctx.factorial(k)
                s = ctx.one
            else:
                weight *= ctx.gamma(to_mpf(ctx, u) if isinstance(u, Fraction) else ctx.mpf(u))
        if s == 0:
            continue
        series = pfq_mp(ctx, ua, list(lows), sign * X)
        piece = s * weight * series
        if j == 1:
            piece *= sign * ctx.cbrt(X)
        elif j == 2:
            piece *= ctx.cbrt(X) ** 2
        total += piece
    return ctx.power(2, 1 - mu_mp) / ctx.sqrt(3 * ctx.pi) * total


def split_two_thirds(mu: float, x: float, sign: int = -1) -> float:
    """Double-precision value of :func:`split_two_thirds_mp`."""
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    mu = snap_rational(mu)
    xf = float(x)
    if xf < 0:
        raise DomainError("x must be non-negative")
    if xf == 0:
        return _rgamma_exact(mu)
    X = 4 * xf ** 3 / 27
    val, _ = ladder(lambda ctx: split_two_thirds_mp(ctx, mu, snap_rational(x), sign),
                    start_bits=64 + int(2 * X / _LN2))
    return float(val)
