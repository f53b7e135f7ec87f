"""Extended-precision plumbing shared by the series kernels.

Every kernel runs on a private, thread-local :class:`mpmath.MPContext`, so
changing the working precision never touches the global ``mpmath.mp``
context and concurrent callers do not interfere with each other.
"""
from __future__ import annotations

import math
import os
import threading
from fractions import Fraction
from numbers import Rational
from typing import Callable

import mpmath

from .errors import DomainError, PrecisionError

DEFAULT_TERM_CAP = 10000
MAX_BITS = 12000
#: relative agreement required between two rungs of the precision ladder
LADDER_TOL = 2.0 ** -58

_local = threading.local()


def get_ctx() -> mpmath.ctx_mp.MPContext:
    """Return the calling thread's private mpmath context."""
    ctx = getattr(_local, "ctx", None)
    if ctx is None:
        ctx = mpmath.MPContext()
        _local.ctx = ctx
    return ctx


class workprec:
    """Context manager setting the precision (in bits) of ``ctx``."""

    def __init__(self, ctx, bits: int):
        self.ctx = ctx
        self.bits = int(bits)

    def __enter__(self):
        self.saved = self.ctx.prec
        self.ctx.prec = self.bits
        return self.ctx

    def __exit__(self, *exc):
        self.ctx.prec = self.saved
        return False


def default_term_cap() -> int:
    """Series term cap, overridable through ``WRIGHT_TERM_CAP``."""
    raw = os.environ.get("WRIGHT_TERM_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_TERM_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise DomainError(f"WRIGHT_TERM_CAP must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise DomainError(f"WRIGHT_TERM_CAP must be positive, got {cap}")
    return cap


def snap_rational(x, max_den: int = 64):
    """Return ``x`` as a :class:`Fraction` when that is lossless, else a float.

    Integers and Fractions are returned exactly.  A float is converted only
    when a fraction with denominator at most ``max_den`` rounds back to the
    very same double, e.g. ``0.5`` or ``2/3`` computed in floating point.
    Exact parameters let the kernels hit gamma poles exactly and use the
    cheap rational recurrence for the reciprocal gamma.
    """
    if isinstance(x, bool):
        raise DomainError("boolean is not a valid real parameter")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_number(x)
    xf = float(x)
    if not math.isfinite(xf):
        raise DomainError(f"parameter must be finite, got {x!r}")
    cand = Fraction(xf).limit_denominator(max_den)
    if float(cand) == xf:
        return cand
    return xf


def parse_number(text: str) -> Fraction | float:
    """Parse ``"2/3"``, ``"0.5"``, ``"-1e-3"`` and similar strings.

    Fraction strings and short decimals are kept exact; anything else falls
    back to :func:`snap_rational` on the float value.
    """
    s = text.strip()
    if not s:
        raise DomainError("empty number")
    try:
        if "/" in s:
            return Fraction(s)
        value = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        try:
            f = float(s)
        except ValueError:
            raise DomainError(f"not a number: {text!r}") from exc
        return snap_rational(f)
    if value.denominator <= 10**6:
        return value
    return snap_rational(float(value))


def to_mpf(ctx, x):
    """Convert an int, Fraction, float or mpf to ``ctx.mpf`` at ctx precision."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return ctx.mpf(x.numerator)
        return ctx.mpf(x.numerator) / x.denominator
    return ctx.mpf(x)


def is_nonpos_int(x) -> bool:
    """True when ``x`` is exactly a non-positive integer."""
    if isinstance(x, Fraction):
        return x.denominator == 1 and x <= 0
    if isinstance(x, int):
        return x <= 0
    xf = float(x)
    return xf <= 0 and xf == math.floor(xf)


class CompensatedSum:
    """Neumaier compensated accumulator.

    Works for floats and for mpmath numbers alike; it also tracks the sum of
    absolute values, which measures the cancellation of an alternating series.
    """

    __slots__ = ("s", "c", "abs_total", "count")

    def __init__(self, zero=0.0):
        self.s = zero
        self.c = zero
        self.abs_total = zero
        self.count = 0

    def add(self, term) -> None:
        s = self.s
        t = s + term
        if abs(s) >= abs(term):
            self.c += (s - t) + term
        else:
            self.c += (term - t) + s
        self.s = t
        self.abs_total += abs(term)
        self.count += 1

    @property
    def value(self):
        return self.s + self.c


def cancellation_bits(ctx, total, abs_total) -> float:
    """Bits lost to cancellation, ``log2(sum|t| / |sum t|)``."""
    if abs_total == 0:
        return 0.0
    if total == 0:
        return float(ctx.prec)
    return max(0.0, float(ctx.log(abs_total / abs(total), 2)))


def ladder(
    fn: Callable[[object], object],
    start_bits: int = 80,
    step: int = 48,
    max_bits: int = MAX_BITS,
    rel_tol: float = LADDER_TOL,
    abs_floor: float = 1e-320,
):
    """Evaluate ``fn(ctx)`` at increasing precision until two rungs agree.

    ``fn`` builds its result from the thread context at whatever precision
    is current.  The value of the higher rung is returned together with the
    absolute difference between the last two rungs, which serves as the
    error estimate.  Complex results are compared by modulus.
    """
    ctx = get_ctx()
    bits = max(int(start_bits), 53)
    with workprec(ctx, bits):
        prev = fn(ctx)
    while True:
        nxt_bits = bits + step
        if nxt_bits > max_bits:
            raise PrecisionError(
                f"no agreement below {max_bits} bits; cancellation too severe"
            )
        with workprec(ctx, nxt_bits):
            cur = fn(ctx)
            diff = abs(cur - prev)
            if diff <= rel_tol * abs(cur) or diff <= abs_floor:
                return cur, diff
        prev = cur
        bits = nxt_bits
        step = int(step * 1.5)
