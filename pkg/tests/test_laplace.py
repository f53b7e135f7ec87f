from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import pytest

from conftest import wright_oracle
from wrightkit.errors import ContourError, DomainError
from wrightkit.gamma_core import rgamma
from wrightkit.laplace import ContourSpec, hankel_rgamma, invert, invert_result

F = Fraction


def _talbot(nu, mu, x, t):
    """Independent oracle: mpmath's Talbot inversion at 40 digits."""
    ctx = mpmath.MPContext()
    ctx.dps = 40
    nu, mu, x = ctx.mpf(nu), ctx.mpf(mu), ctx.mpf(x)
    return float(ctx.invertlaplace(lambda s: s ** (-mu) * ctx.exp(-x * s ** nu), t, method="talbot"))


@pytest.mark.parametrize("nu, mu, x, t", [
    (0.5, 1.0, 1.0, 1.0), (1 / 3, 0.0, 0.5, 2.0), (2 / 3, 1 / 3, 1.0, 2.0), (0.25, 0.75, 3.0, 0.4),
])
def test_invert_matches_talbot(nu, mu, x, t):
    assert invert(nu, mu, x, t) == pytest.approx(_talbot(nu, mu, x, t), rel=1e-9, abs=1e-12)


def test_three_sister_erfc():
    # s^{-1} exp(-x sqrt s)  <->  erfc(x / (2 sqrt t))
    assert abs(invert(0.5, 1, 1.0, 1.0) - math.erfc(0.5)) <= 1e-10


def test_small_x_limit():
    assert invert(0.5, 0.5, 1e-4, 1.0) == pytest.approx(1 / math.sqrt(math.pi), abs=1e-4)


@pytest.mark.parametrize("nu", [F(1, 3), F(1, 2), F(2, 3)])
def test_master_identity_sample(nu):
    for mu in (0, 1 - nu, nu, 1):
        for x, t in ((0.25, 0.25), (1.0, 2.0), (4.0, 0.5), (4.0, 4.0)):
            ref = t ** (float(mu) - 1) * wright_oracle(-nu, mu, -x / t ** float(nu))
            assert abs(invert(nu, mu, x, t) - ref) <= 1e-6


def test_node_doubling_estimate():
    r = invert_result(F(2, 3), F(1, 3), 1.0, 2.0)
    assert r.method == "contour"
    assert r.err_estimate <= 1e-8
    assert r.terms_used == 2 * ContourSpec().node_count + 1


@pytest.mark.parametrize("z", [1 / 3, 1 / 2, 5 / 6, 7 / 6, 2.5, -0.5])
def test_hankel_rgamma(z):
    assert abs(hankel_rgamma(z) - rgamma(z)) <= 1e-8


def test_contour_spec_validation():
    with pytest.raises(DomainError):
        ContourSpec(node_count=8)
    with pytest.raises(DomainError):
        ContourSpec(max_angle=2.0)
    assert ContourSpec().doubled().node_count == 192


def test_invert_domain():
    with pytest.raises(DomainError):
        invert(1.5, 0.5, 1.0, 1.0)
    with pytest.raises(DomainError):
        invert(0.5, 0.5, 1.0, -1.0)
    with pytest.raises(DomainError):
        invert_result(0.5, 0.0, 0.0, 1.0)
    assert invert_result(0.5, 0.5, 0.0, 1.0).value == pytest.approx(1 / math.sqrt(math.pi), rel=1e-10)


def test_overflowing_contour_raises_contour_error():
    # a crossing scale of 1e4 makes exp(s t) overflow on the path
    with pytest.raises(ContourError):
        invert(0.5, 0.5, 1.0, 1.0, ContourSpec(scale=1e4))


def test_deterministic():
    assert invert(F(2, 3), 0, 1.7, 0.9) == invert(F(2, 3), 0, 1.7, 0.9)
