"""Shared oracle helpers: an independent mpmath context at high precision."""
from __future__ import annotations

from fractions import Fraction

import mpmath
import numpy as np
import pytest

ORACLE = mpmath.MPContext()
ORACLE.prec = 200


def rel_err(got, ref) -> float:
    ref = float(ref)
    if ref == 0:
        return abs(float(got))
    return abs(float(got) - ref) / abs(ref)


def _mp(ctx, v):
    if isinstance(v, Fraction):
        return ctx.mpf(v.numerator) / v.denominator
    return ctx.mpf(v)


def wright_oracle(lam, mu, z, dps: int = 120, max_terms: int = 20000) -> float:
    """Plain term-by-term Wright series on an independent mpmath context.

    Summation stops once twenty consecutive terms past the largest one are
    below ``10**-(dps-10)`` times that peak.
    """
    ctx = mpmath.MPContext()
    ctx.dps = dps
    lam, mu, z = (_mp(ctx, v) for v in (lam, mu, z))
    total, peak, small, power = ctx.zero, ctx.zero, 0, ctx.one
    eps = ctx.mpf(10) ** (10 - dps)
    for n in range(max_terms):
        term = power * ctx.rgamma(lam * n + mu)
        total += term
        peak = max(peak, abs(term))
        small = small + 1 if abs(term) <= eps * peak and abs(power) <= eps * peak else 0
        if small >= 20 and n > 20:
            return float(total)
        power = power * z / (n + 1)
    raise RuntimeError("oracle series did not converge")


@pytest.fixture
def rng():
    return np.random.default_rng(20241015)
