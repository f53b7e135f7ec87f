"""Generalized hypergeometric series pFq for real parameters and argument.

The sum is accumulated with compensated summation in extended precision;
the working precision is raised automatically when the measured
cancellation would otherwise eat into double-precision accuracy.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ._precision import (
    CompensatedSum,
    cancellation_bits,
    default_term_cap,
    get_ctx,
    is_nonpos_int,
    snap_rational,
    to_mpf,
    workprec,
)
from .errors import ConvergenceError, DomainError, PrecisionError
from .results import EvalResult

_MAX_BITS = 12000


@dataclass(frozen=True)
class PfqSpec:
    """Parameters of ``pFq(upper; lower; argument)``.

    Invariants: no lower parameter is a non-positive integer, ``p <= q+1``
    and ``|argument| < 1`` when ``p == q+1``.
    """

    upper: tuple = field(default_factory=tuple)
    lower: tuple = field(default_factory=tuple)
    argument: float = 0.0

    def __post_init__(self):
        up = tuple(snap_rational(a) for a in self.upper)
        lo = tuple(snap_rational(b) for b in self.lower)
        object.__setattr__(self, "upper", up)
        object.__setattr__(self, "lower", lo)
        z = snap_rational(self.argument)
        object.__setattr__(self, "argument", z)
        for b in lo:
            if is_nonpos_int(b):
                raise DomainError(f"lower parameter {b} is a non-positive integer")
        p, q = len(up), len(lo)
        if p > q + 1:
            raise DomainError(f"{p}F{q} diverges for every nonzero argument")
        if p == q + 1 and abs(float(z)) >= 1:
            raise DomainError(f"{p}F{q} requires |argument| < 1, got {float(z)}")


def kummer_transform(a, b, z):
    """Kummer's transformation for 1F1.

    Returns ``(b - a, b, -z, exp(z))`` so that
    ``prefactor * 1F1(a'; b'; z') == 1F1(a; b; z)``.

    Examples
    --------
    >>> kummer_transform(1, 2, -3)[:3]
    (1, 2, 3)
    """
    if is_nonpos_int(b):
        raise DomainError(f"b = {b} is a non-positive integer")
    return b - a, b, -z, math.exp(float(z))


def _pfq_mp(ctx, upper, lower, z, eps, cap):
    """Sum pFq at the current context precision.

    Returns ``(sum, sum_abs, terms, tail)`` with ``tail`` an estimate of the
    magnitude of the neglected remainder.  Stops after three consecutive
    terms below ``eps * |sum|`` once the term magnitudes are decreasing.
    """
    acc = CompensatedSum(ctx.zero)
    term = ctx.one
    small = 0
    k = 0
    while True:
        if k >= cap:
            raise ConvergenceError(f"hypergeometric series exceeded {cap} terms")
        acc.add(term)
        num = z
        for a in upper:
            num *= a + k
        den = k + 1
        for b in lower:
            den *= b + k
        nxt = num / den * term
        k += 1
        cur = acc.value
        bound = eps * abs(cur)
        decreasing = abs(nxt) <= abs(term) or nxt == 0
        if abs(term) <= bound and decreasing:
            small += 1
        else:
            small = 0
        if small >= 3 or (term == 0 and nxt == 0):
            r = abs(nxt / term) if term != 0 else ctx.zero
            tail = abs(nxt) / (1 - r) if r < 1 else abs(nxt) * k
            return cur, acc.abs_total, k, tail
        term = nxt


def pfq_mp(ctx, upper, lower, z, cap=None):
    """pFq at the context precision with a relative stop of one ulp.

    Used inside closed-form compositions; callers control precision through
    :func:`wrightkit._precision.ladder`.
    """
    if z == 0:
        return ctx.one
    cap = default_term_cap() if cap is None else cap
    up = [to_mpf(ctx, a) if isinstance(a, Fraction) else ctx.mpf(a) for a in upper]
    lo = [to_mpf(ctx, b) if isinstance(b, Fraction) else ctx.mpf(b) for b in lower]
    zz = to_mpf(ctx, z) if isinstance(z, Fraction) else ctx.mpf(z)
    eps = ctx.ldexp(1, -ctx.prec)
    return _pfq_mp(ctx, up, lo, zz, eps, cap)[0]


def hyp1f1_mp(ctx, a, b, z, cap=None):
    """1F1 at the context precision, Kummer-transformed for ``z < 0``."""
    zz = to_mpf(ctx, z) if isinstance(z, Fraction) else ctx.mpf(z)
    if zz < 0:
        a2 = b - a
        return ctx.exp(zz) * pfq_mp(ctx, [a2], [b], -zz, cap)
    return pfq_mp(ctx, [a], [b], zz, cap)


def pfq(spec: PfqSpec, rel_tol: float = 1e-12, term_cap: int | None = None) -> EvalResult:
    """Evaluate a generalized hypergeometric series.

    Parameters
    ----------
    spec : PfqSpec
        Parameters and argument.
    rel_tol : float
        Stopping tolerance in ``(0, 1e-3]``.
    term_cap : int, optional
        Maximum number of terms; defaults to ``WRIGHT_TERM_CAP`` or 10000.

    Returns
    -------
    EvalResult
        Value and term count. The absolute error estimate bounds the
        truncated tail plus all rounding.

    Notes
    -----
    1F1 with a negative argument is evaluated through Kummer's
    transformation, which turns the alternating series into one with
    positive terms.
    """
    if not (0 < rel_tol <= 1e-3):
        raise DomainError(f"rel_tol must lie in (0, 1e-3], got {rel_tol}")
    cap = default_term_cap() if term_cap is None else int(term_cap)
    z = spec.argument
    if z == 0:
        return EvalResult(1.0, 1, 0.0)
    upper, lower = list(spec.upper), list(spec.lower)
    prefactor_arg = None
    if len(upper) == 1 and len(lower) == 1 and z < 0:
        a2, b2, z2, _ = kummer_transform(upper[0], lower[0], z)
        upper, lower, prefactor_arg, z = [a2], [b2], z, z2
    ctx = get_ctx()
    bits = 80
    while True:
        with workprec(ctx, bits):
            up = [to_mpf(ctx, a) if isinstance(a, Fraction) else ctx.mpf(a) for a in upper]
            lo = [to_mpf(ctx, b) if isinstance(b, Fraction) else ctx.mpf(b) for b in lower]
            zz = to_mpf(ctx, z) if isinstance(z, Fraction) else ctx.mpf(z)
            s, sabs, n, tail = _pfq_mp(ctx, up, lo, zz, ctx.mpf(rel_tol), cap)
            lost = cancellation_bits(ctx, s, sabs)
            if bits - lost < 64 and s != 0:
                need = int(lost) + 96
                if need > _MAX_BITS:
                    raise PrecisionError(f"cancellation of {lost:.0f} bits exceeds budget")
                if need > bits:
                    bits = need
                    continue
            round_err = sabs * (n + 1) * ctx.ldexp(1, -bits)
            if prefactor_arg is not None:
                pref = ctx.exp(to_mpf(ctx, prefactor_arg) if isinstance(prefactor_arg, Fraction) else ctx.mpf(prefactor_arg))
                s *= pref
                tail *= pref
                round_err *= pref
            value = float(s)
            err = float(tail + round_err) + abs(value) * 2.0 ** -53
            return EvalResult(value, n, err)


def pfq_float(upper: Sequence, lower: Sequence, z, rel_tol: float = 1e-12) -> float:
    """Shorthand returning only the value of ``pFq(upper; lower; z)``."""
    return pfq(PfqSpec(tuple(upper), tuple(lower), z), rel_tol).value
