from __future__ import annotations

import math
from fractions import Fraction

import pytest

from wrightkit._precision import (
    CompensatedSum,
    get_ctx,
    ladder,
    parse_number,
    snap_rational,
    workprec,
)
from wrightkit.errors import DomainError, PrecisionError


@pytest.mark.parametrize("text, expected", [
    ("2/3", Fraction(2, 3)),
    ("-1/6", Fraction(-1, 6)),
    ("0.5", Fraction(1, 2)),
    ("3", Fraction(3)),
])
def test_parse_number_exact(text, expected):
    assert parse_number(text) == expected


def test_parse_number_rejects_garbage():
    with pytest.raises(DomainError):
        parse_number("two thirds")
    with pytest.raises(DomainError):
        parse_number("1/0")


def test_snap_rational_round_trip_only():
    assert snap_rational(2.0 / 3.0) == Fraction(2, 3)
    assert snap_rational(0.25) == Fraction(1, 4)
    # 0.666667 is not 2/3 to double precision and must stay a float
    assert not isinstance(snap_rational(0.666667), Fraction) or snap_rational(0.666667) != Fraction(2, 3)
    assert snap_rational("5/6") == Fraction(5, 6)


def test_compensated_sum_beats_naive():
    ctx = get_ctx()
    with workprec(ctx, 53):
        acc = CompensatedSum(ctx.mpf(0))
        terms = [ctx.mpf(1e16), ctx.mpf(1.0), ctx.mpf(-1e16)] * 1000
        for t in terms:
            acc.add(t)
        assert acc.value == 1000
        assert acc.abs_total == pytest.approx(2e19 + 1000)


def test_compensated_sum_floats_match_fsum():
    terms = [(-1) ** k * 10.0 ** (k % 17) / (k + 1) for k in range(2000)]
    acc = CompensatedSum()
    for t in terms:
        acc.add(t)
    assert acc.value == pytest.approx(math.fsum(terms), rel=1e-15, abs=1e-12)
    assert acc.count == 2000


def test_ladder_converges_and_reports_difference():
    val, diff = ladder(lambda ctx: ctx.exp(1))
    assert float(val) == pytest.approx(math.e, rel=1e-16)
    assert diff < 2 ** -58


def test_ladder_budget_exhausted():
    # a value that never stabilizes: depends on the working precision itself
    with pytest.raises(PrecisionError):
        ladder(lambda ctx: ctx.mpf(ctx.prec), max_bits=400)
