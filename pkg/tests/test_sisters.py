from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest

from conftest import rel_err
from wrightkit.classical import WhittakerParams, whittaker_w
from wrightkit.errors import DomainError
from wrightkit.sisters import (
    ROLES,
    THREE_SISTER_ROLE,
    Role,
    SisterSpec,
    grid,
    sister,
    sister_result,
    three_sisters_closed,
)

F = Fraction
PTS = np.geomspace(0.25, 4, 5).tolist()


def test_roles_map_to_mu():
    nu = F(1, 3)
    assert [Role(r).mu_for(nu) for r in ROLES] == [0, F(2, 3), F(1, 3), 1]
    for r in ROLES:
        assert 0 <= SisterSpec(nu, r).mu <= 1
    with pytest.raises(DomainError):
        SisterSpec(1.0, Role.MU_ONE)
    with pytest.raises(ValueError):
        SisterSpec(0.5, "mu_two")


@pytest.mark.parametrize("which", ["phi", "psi", "chi"])
def test_three_sisters_closed_vs_wright(which):
    spec = SisterSpec(F(1, 2), THREE_SISTER_ROLE[which])
    for x in PTS:
        for t in PTS:
            assert rel_err(sister(spec, x, t), three_sisters_closed(which, x, t)) <= 1e-9, (x, t)


def test_humbert_sister():
    spec = SisterSpec(F(2, 3), Role.MU_ONE_MINUS_NU)
    for t in np.linspace(0.5, 5, 19):
        X = 4 / (27 * t * t)
        rhs = 1.5 * math.sqrt(3 / math.pi) * math.exp(-X / 2) * whittaker_w(WhittakerParams(0.5, 1 / 6, X))
        assert rel_err(sister(spec, 1.0, t), rhs) <= 1e-8, t


@pytest.mark.parametrize("nu", [F(1, 3), F(1, 2), F(2, 3)])
def test_phi_sister_monotone_in_x(nu):
    spec = SisterSpec(nu, Role.MU_ONE)
    xs = np.linspace(0.25, 4, 25)
    for t in PTS:
        vals = [sister(spec, x, t) for x in xs]
        assert all(b <= a + 1e-15 for a, b in zip(vals, vals[1:])), t


def test_series_and_contour_agree():
    spec = SisterSpec(F(2, 3), Role.MU_NU)
    a = sister_result(spec, 1.3, 0.7, method="series")
    b = sister_result(spec, 1.3, 0.7, method="contour")
    assert a.method == "series" and b.method == "contour"
    assert abs(a.value - b.value) <= 1e-9


def test_domain():
    spec = SisterSpec(0.5, Role.MU_ONE)
    with pytest.raises(DomainError):
        sister(spec, -1.0, 1.0)
    with pytest.raises(DomainError):
        sister(spec, 1.0, 0.0)
    with pytest.raises(DomainError):
        sister(spec, 1.0, 1.0, method="magic")
    with pytest.raises(DomainError):
        three_sisters_closed("omega", 1.0, 1.0)


def test_grid():
    assert grid(0, 5, 500)[0] == 0 and grid(0, 5, 500)[-1] == 5 and len(grid()) == 500
    g = grid(0.01, 5, 7, log=True)
    assert np.allclose(g[1:] / g[:-1], g[1] / g[0])
    with pytest.raises(DomainError):
        grid(0, 1, 10, log=True)
