from __future__ import annotations

import json

import pytest

from wrightkit.errors import DomainError, RegistryError
from wrightkit.identities import (
    Expectation,
    Grid,
    Kind,
    get_record,
    record_ids,
    run_all,
    run_one,
)

TABLE_PREFIXES = ("w-1/2-", "w-1/3-", "w-2/3-")


@pytest.fixture(scope="module")
def report():
    return run_all()


def test_record_inventory():
    ids = record_ids()
    assert len(ids) == len(set(ids)) == 31
    assert sum(i.startswith(TABLE_PREFIXES) for i in ids) == 22
    for rid in ("stankovic-original", "humbert-original"):
        assert get_record(rid).expectation.kind is Kind.FAIL_COMPLEX
    for rid in ("stankovic-corrected", "humbert-corrected", "reduced-pair-plus", "reduced-pair-minus"):
        assert get_record(rid).expectation.kind is Kind.HOLD


def test_every_record_passes(report):
    failed = [r.id for r in report.records if not r.passed]
    assert failed == []
    assert report.all_passed
    assert report.summary["expected_failures_confirmed"] == 2


def test_hold_records_use_pinned_tolerance(report):
    for r in report.records:
        if r.expectation.kind is Kind.HOLD:
            assert (r.expectation.rel_tol, r.expectation.abs_floor) == (1e-8, 1e-12)
            assert r.grid.points == 41


def test_disputed_form_reported_not_counted(report):
    r = report.by_id("w-1/3-2/3-plus")
    disputed = [f for f in r.forms if f.disputed]
    assert len(disputed) == 1 and not disputed[0].met
    assert disputed[0].max_rel_err > 1e-3
    assert r.passed
    assert report.summary["disputed_forms"] == ["w-1/3-2/3-plus:+:bessel-as-tabulated"]


def test_original_forms_are_complex(report):
    for rid in ("stankovic-original", "humbert-original"):
        r = report.by_id(rid)
        assert isinstance(r.worst_point["rhs"], dict)
        assert r.worst_point["rhs"]["im"] != 0


def test_report_json_round_trip(report):
    data = json.loads(report.dumps())
    assert data["summary"]["total"] == 31
    assert [r["id"] for r in data["records"]] == record_ids()
    with pytest.raises(RegistryError):
        report.by_id("nope")


def test_single_point_grid():
    g = Grid("x", 0.1, 5, 1)
    assert g.values() == [1.0]
    assert Grid("x", 2, 5, 1).values() == [3.5]
    assert run_all(grid_density=1).all_passed


def test_run_one_is_deterministic():
    a = run_one("humbert-corrected", 9).dumps()
    b = run_one("humbert-corrected", 9).dumps()
    assert a == b


def test_tightest_tolerance_override():
    assert run_all(ids=["w-1/2-1/2-pm"], rel_tol_override=1e-12).all_passed


def test_validation():
    with pytest.raises(DomainError):
        Expectation(Kind.HOLD, rel_tol=1e-3)
    with pytest.raises(DomainError):
        Expectation(Kind.FAIL_COMPLEX, min_discrepancy=1e-6)
    with pytest.raises(DomainError):
        Grid("x", 1, 0)
    with pytest.raises(DomainError):
        run_all(grid_density=0)
    with pytest.raises(DomainError):
        run_all(rel_tol_override=0.1)
    with pytest.raises(RegistryError):
        get_record("c6")
