"""Registry of Wright-function identities and a grid-based checker.

Each :class:`IdentityRecord` pairs a series-engine left-hand side with
closed-form right-hand sides. Its grid is checked against one expectation:

* ``hold``: every non-disputed form agrees with the series to
  ``max(rel_tol * |rhs|, abs_floor)`` at every grid point;
* ``fail_discrepancy``: the relative discrepancy exceeds
  ``min_discrepancy`` at every point;
* ``fail_complex``: the right-hand side is genuinely complex (its
  imaginary part exceeds ``min_discrepancy * |rhs|``) at every point.

Forms flagged ``disputed`` are transcribed as tabulated but are known not to
hold; they are evaluated and reported but do not affect the status.
"""
from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from ._precision import ladder
from .classical import airy_mp, whittaker_w_mp
from .closed_forms import REGISTRY, TableEntry, m_two_thirds_airy
from .errors import DomainError, RegistryError, WrightError
from .wright import WrightParams, mainardi_m, wright_series

F = Fraction
_LN2 = math.log(2.0)
#: tolerance used for the series side of every identity
SERIES_REL_TOL = 1e-14


class Kind(str, enum.Enum):
    HOLD = "hold"
    FAIL_DISCREPANCY = "fail_discrepancy"
    FAIL_COMPLEX = "fail_complex"


@dataclass(frozen=True)
class Expectation:
    """Expected outcome of a record."""

    kind: Kind = Kind.HOLD
    rel_tol: float = 1e-8
    abs_floor: float = 1e-12
    min_discrepancy: float = 1e-3

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.kind is Kind.HOLD and not 1e-12 <= self.rel_tol <= 1e-6:
            raise DomainError(f"hold tolerance must lie in [1e-12, 1e-6], got {self.rel_tol}")
        if self.kind is not Kind.HOLD and not self.min_discrepancy >= 1e-3:
            raise DomainError(f"fail discrepancy must be >= 1e-3, got {self.min_discrepancy}")

    def to_json(self) -> dict:
        if self.kind is Kind.HOLD:
            return {"kind": self.kind.value, "rel_tol": self.rel_tol, "abs_floor": self.abs_floor}
        return {"kind": self.kind.value, "min_discrepancy": self.min_discrepancy}


@dataclass(frozen=True)
class Grid:
    """Evaluation grid over one variable.

    ``open_lo`` drops the left endpoint: ``points`` values are spaced
    evenly on ``(lo, hi]``.
    """

    variable: str = "x"
    lo: float = 0.1
    hi: float = 5.0
    points: int = 41
    open_lo: bool = False

    def __post_init__(self):
        if self.points < 1:
            raise DomainError("grid needs at least one point")
        if not self.hi >= self.lo:
            raise DomainError("grid requires hi >= lo")

    def with_points(self, n: int) -> "Grid":
        return Grid(self.variable, self.lo, self.hi, int(n), self.open_lo)

    def values(self) -> list[float]:
        if self.points == 1:
            inside = self.lo < 1.0 <= self.hi if self.open_lo else self.lo <= 1.0 <= self.hi
            return [1.0 if inside else 0.5 * (self.lo + self.hi)]
        if self.open_lo:
            return [float(v) for v in np.linspace(self.lo, self.hi, self.points + 1)[1:]]
        return [float(v) for v in np.linspace(self.lo, self.hi, self.points)]

    def to_json(self) -> dict:
        return {"variable": self.variable, "lo": self.lo, "hi": self.hi,
                "points": self.points, "open_lo": self.open_lo}


@dataclass(frozen=True)
class RhsForm:
    """A closed-form side: ``fn(point) -> float | complex``."""

    label: str
    formula: str
    fn: Callable[[float], object]
    disputed: bool = False


@dataclass(frozen=True)
class Case:
    """One left-hand side (e.g. one sign of a ``+-`` row) with its forms."""

    label: str
    lhs: Callable[[float], float]
    forms: tuple


@dataclass(frozen=True)
class IdentityRecord:
    """A registered identity."""

    id: str
    citation: str
    group: str
    domain: Grid
    expectation: Expectation
    cases: tuple

    def __post_init__(self):
        if not self.citation.strip():
            raise DomainError(f"record {self.id} needs a citation")
        if not self.cases or any(not c.forms for c in self.cases):
            raise DomainError(f"record {self.id} needs at least one form per case")


# -- evaluation helpers ------------------------------------------------------


def _series(nu, mu, sign: int) -> Callable[[float], float]:
    p = WrightParams(-nu, mu)

    def lhs(x: float) -> float:
        return wright_series(p, sign * x, rel_tol=SERIES_REL_TOL).value

    return lhs


def _mp_form(fn, hint_of: Callable[[float], int]) -> Callable[[float], object]:
    def rhs(x: float):
        val, _ = ladder(lambda ctx: fn(ctx, x), start_bits=hint_of(x))
        if hasattr(val, "_mpc_"):
            return complex(val)
        return float(val)

    return rhs


def _hint_X(kind: str):
    def hint(x: float) -> int:
        if kind == "half":
            X = x * x / 4
        elif kind == "third":
            X = 2 * (x / 3) ** 1.5
        elif kind == "two_thirds":
            X = 4 * x ** 3 / 27
        else:
            X = abs(kind(x))
        return 64 + int(2.5 * X / _LN2)

    return hint


_HINTS = {F(1, 2): "half", F(1, 3): "third", F(2, 3): "two_thirds"}


def _table_forms(entry: TableEntry) -> tuple:
    hint = _hint_X(_HINTS[entry.nu])
    return tuple(
        RhsForm(f.label, f.formula, _mp_form(f.fn, hint), f.disputed)
        for f in entry.forms if f.tabulated
    )


def _wname(nu, mu, sign: str) -> str:
    return f"W[-{nu},{mu}]({sign}x)"


def _table_record(nu, mu, signs: str, suffix: str = "", labels: Sequence[str] | None = None) -> IdentityRecord:
    """Record for one printed table row; ``signs`` is ``'+'``, ``'-'`` or ``'pm'``."""
    sign_list = (1, -1) if signs == "pm" else ((1,) if signs == "+" else (-1,))
    cases = []
    cites = []
    for s in sign_list:
        entry = REGISTRY[(nu, mu, s)]
        forms = _table_forms(entry)
        if labels is not None:
            forms = tuple(f for f in forms if f.label in labels)
        sg = "+" if s > 0 else "-"
        cases.append(Case(sg, _series(nu, mu, s), forms))
        cites.append(f"{_wname(nu, mu, sg)} = " + " = ".join(f.formula for f in forms) + f", {entry.variable}")
    rid = f"w-{nu}-{mu}-{'pm' if signs == 'pm' else ('plus' if signs == '+' else 'minus')}{suffix}"
    return IdentityRecord(rid, "; ".join(cites), f"table-nu{nu}", Grid("x", 0.1, 5.0, 41),
                          Expectation(), tuple(cases))


def _two_thirds_X(ctx, x):
    return 4 * ctx.mpf(x) ** 3 / 27


def _build_records() -> list[IdentityRecord]:
    h, t, tt = F(1, 2), F(1, 3), F(2, 3)
    recs: list[IdentityRecord] = []
    # nu = 1/2 table
    recs.append(_table_record(h, F(0), "pm"))
    recs.append(_table_record(h, F(1, 4), "+"))
    recs.append(_table_record(h, F(1, 4), "-"))
    recs.append(_table_record(h, h, "pm"))
    recs.append(_table_record(h, F(3, 4), "+"))
    recs.append(_table_record(h, F(3, 4), "-"))
    recs.append(_table_record(h, F(1), "pm", "-whittaker", labels=("whittaker",)))
    recs.append(_table_record(h, F(1), "pm", "-erf", labels=("erf",)))
    # nu = 1/3 table
    for mu in (F(0), t, tt):
        recs.append(_table_record(t, mu, "+"))
        recs.append(_table_record(t, mu, "-"))
    recs.append(_table_record(t, F(1), "pm"))
    # nu = 2/3 table
    for mu in (F(0), t, tt):
        recs.append(_table_record(tt, mu, "+"))
        recs.append(_table_record(tt, mu, "-"))
    recs.append(_table_record(tt, F(1), "pm"))

    # special cases of the M function
    open5 = Grid("x", 0.0, 5.0, 41, open_lo=True)

    def mlhs(nu):
        return lambda x: mainardi_m(nu, x, rel_tol=SERIES_REL_TOL).value

    def m_half(ctx, x):
        xx = ctx.mpf(x)
        return ctx.exp(-xx * xx / 4) / ctx.sqrt(ctx.pi)

    def m_third(ctx, x):
        return ctx.cbrt(3) ** 2 * airy_mp(ctx, ctx.mpf(x) / ctx.cbrt(3))[0]

    small_hint = _hint_X("half")
    specials = [
        ("m-1/2-gaussian", h, "M[1/2](x) = e^(-x^2/4)/sqrt(pi)", m_half, small_hint),
        ("m-1/3-airy", t, "M[1/3](x) = 3^(2/3) Ai(x/3^(1/3))", m_third, _hint_X("third")),
        ("m-2/3-airy", tt,
         "M[2/3](x) = 3^(-2/3) [3^(1/3) x Ai(x^2/3^(4/3)) - 3 Ai'(x^2/3^(4/3))] e^(-2x^3/27)",
         m_two_thirds_airy, _hint_X("two_thirds")),
    ]
    for rid, nu, cite, fn, hint in specials:
        form = RhsForm("closed", cite.split(" = ", 1)[1], _mp_form(fn, hint))
        recs.append(IdentityRecord(rid, cite, "m-special", open5, Expectation(),
                                   (Case("", mlhs(nu), (form,)),)))

    # reduced Wright function pair, x in (0, 4]
    open4 = Grid("x", 0.0, 4.0, 41, open_lo=True)
    hint23 = _hint_X("two_thirds")
    plus = REGISTRY[(tt, F(0), 1)].primary
    minus = REGISTRY[(tt, F(0), -1)].primary
    recs.append(IdentityRecord(
        "reduced-pair-plus",
        "W[-2/3,0](x) = -1/(2 sqrt(3 pi)) e^(2x^3/27) W[-1/2,1/6](4x^3/27)",
        "reduced", open4, Expectation(),
        (Case("+", _series(tt, F(0), 1), (RhsForm("whittaker", plus.formula, _mp_form(plus.fn, hint23)),)),)))
    recs.append(IdentityRecord(
        "reduced-pair-minus",
        "W[-2/3,0](-x) = sqrt(3/pi) e^(-2x^3/27) W[1/2,1/6](4x^3/27)",
        "reduced", open4, Expectation(),
        (Case("-", _series(tt, F(0), -1), (RhsForm("whittaker", minus.formula, _mp_form(minus.fn, hint23)),)),)))

    # inverted-argument representation, x in [0.5, 5]
    grid_s = Grid("x", 0.5, 5.0, 41)

    def stank_lhs(x: float) -> float:
        return wright_series(WrightParams(-tt, 0), -x ** (-2.0 / 3.0), rel_tol=SERIES_REL_TOL).value

    def stank_corrected(ctx, x):
        xx = ctx.mpf(x)
        X = 4 / (27 * xx * xx)
        return ctx.sqrt(3 / ctx.pi) * ctx.exp(-X / 2) * whittaker_w_mp(ctx, F(1, 2), F(1, 6), X)

    def stank_original(ctx, x):
        xx = ctx.mpf(x)
        return (-1 / (2 * ctx.sqrt(3 * ctx.pi)) * ctx.exp(-2 / (27 * xx * xx))
                * whittaker_w_mp(ctx, F(-1, 2), F(1, 6), -4 / (27 * xx)))

    inv_hint = lambda x: 96  # noqa: E731  arguments stay below 1 on this grid
    recs.append(IdentityRecord(
        "stankovic-corrected",
        "W[-2/3,0](-x^(-2/3)) = sqrt(3/pi) e^(-2/(27x^2)) W[1/2,1/6](4/(27x^2))",
        "inverted", grid_s, Expectation(),
        (Case("", stank_lhs, (RhsForm("whittaker", "sqrt(3/pi) e^(-2/(27x^2)) W[1/2,1/6](4/(27x^2))",
                                      _mp_form(stank_corrected, inv_hint)),)),)))
    recs.append(IdentityRecord(
        "stankovic-original",
        "W[-2/3,0](-x^(-2/3)) = -1/(2 sqrt(3 pi)) e^(-2/(27x^2)) W[-1/2,1/6](-4/(27x))",
        "inverted", grid_s, Expectation(Kind.FAIL_COMPLEX),
        (Case("", stank_lhs, (RhsForm("whittaker-negative-argument",
                                      "-1/(2 sqrt(3 pi)) e^(-2/(27x^2)) W[-1/2,1/6](-4/(27x))",
                                      _mp_form(stank_original, inv_hint)),)),)))

    # transform pair in t at x = 1, t in [0.5, 5]
    grid_t = Grid("t", 0.5, 5.0, 41)

    def humb_lhs(tv: float) -> float:
        r = wright_series(WrightParams(-tt, t), -tv ** (-2.0 / 3.0), rel_tol=SERIES_REL_TOL)
        return tv ** (-2.0 / 3.0) * r.value

    def humb_corrected(ctx, tv):
        tt_ = ctx.mpf(tv)
        X = 4 / (27 * tt_ * tt_)
        return ctx.mpf(3) / 2 * ctx.sqrt(3 / ctx.pi) * ctx.exp(-X / 2) * whittaker_w_mp(ctx, F(1, 2), F(1, 6), X)

    def humb_original(ctx, tv):
        tt_ = ctx.mpf(tv)
        X = 4 / (27 * tt_ * tt_)
        return (-ctx.sqrt(3 / ctx.pi) / 4 * ctx.exp(-X / 2)
                * whittaker_w_mp(ctx, F(-1, 2), F(-1, 6), -X))

    recs.append(IdentityRecord(
        "humbert-corrected",
        "t^(-2/3) W[-2/3,1/3](-t^(-2/3)) = (3/2) sqrt(3/pi) e^(-2/(27t^2)) W[1/2,1/6](4/(27t^2))",
        "transform", grid_t, Expectation(),
        (Case("", humb_lhs, (RhsForm("whittaker", "(3/2) sqrt(3/pi) e^(-2/(27t^2)) W[1/2,1/6](4/(27t^2))",
                                     _mp_form(humb_corrected, inv_hint)),)),)))
    recs.append(IdentityRecord(
        "humbert-original",
        "t^(-2/3) W[-2/3,1/3](-t^(-2/3)) = -(1/4) sqrt(3/pi) e^(-2/(27t^2)) W[-1/2,-1/6](-4/(27t^2))",
        "transform", grid_t, Expectation(Kind.FAIL_COMPLEX),
        (Case("", humb_lhs, (RhsForm("whittaker-negative-argument",
                                     "-(1/4) sqrt(3/pi) e^(-2/(27t^2)) W[-1/2,-1/6](-4/(27t^2))",
                                     _mp_form(humb_original, inv_hint)),)),)))
    return recs


RECORDS: tuple = tuple(_build_records())
_BY_ID = {r.id: r for r in RECORDS}
if len(_BY_ID) != len(RECORDS):  # pragma: no cover - construction guard
    raise RuntimeError("duplicate identity ids")


def record_ids() -> list[str]:
    """Registered ids in suite order."""
    return [r.id for r in RECORDS]


def get_record(rid: str) -> IdentityRecord:
    try:
        return _BY_ID[rid]
    except KeyError:
        raise RegistryError(f"unknown identity id {rid!r}; known ids: {', '.join(record_ids())}") from None


# -- running -----------------------------------------------------------------


def _finite(v):
    """JSON-safe number."""
    if v is None:
        return None
    if isinstance(v, float) and not math.isfinite(v):
        return "inf" if v > 0 else ("-inf" if v < 0 else "nan")
    return v


@dataclass
class FormStats:
    case: str
    label: str
    formula: str
    disputed: bool
    max_abs_err: float = 0.0
    max_rel_err: float = 0.0
    met: bool = True

    def to_json(self) -> dict:
        return {"case": self.case, "label": self.label, "formula": self.formula,
                "disputed": self.disputed, "max_abs_err": _finite(self.max_abs_err),
                "max_rel_err": _finite(self.max_rel_err), "expectation_met": self.met}


@dataclass
class RecordResult:
    """Outcome of one record over its grid."""

    id: str
    citation: str
    expectation: Expectation
    grid: Grid
    status: str
    max_abs_err: float
    max_rel_err: float
    worst_point: dict | None
    forms: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "citation": self.citation,
            "expectation": self.expectation.to_json(),
            "grid": self.grid.to_json(),
            "status": self.status,
            "max_abs_err": _finite(self.max_abs_err),
            "max_rel_err": _finite(self.max_rel_err),
            "worst_point": self.worst_point,
            "forms": [f.to_json() for f in self.forms],
            "errors": self.errors,
        }


@dataclass
class SuiteReport:
    """Results of a suite run in registry order."""

    records: list

    @property
    def summary(self) -> dict:
        n = len(self.records)
        passed = sum(r.passed for r in self.records)
        return {
            "total": n,
            "passed": passed,
            "failed": n - passed,
            "expected_failures_confirmed": sum(
                r.passed and r.expectation.kind is not Kind.HOLD for r in self.records),
            "disputed_forms": sorted(
                f"{r.id}:{f.case}:{f.label}" for r in self.records for f in r.forms if f.disputed),
        }

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.records)

    def by_id(self, rid: str) -> RecordResult:
        for r in self.records:
            if r.id == rid:
                return r
        raise RegistryError(f"record {rid!r} not in this report")

    def to_json(self) -> dict:
        return {"records": [r.to_json() for r in self.records], "summary": self.summary}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2, allow_nan=False) + "\n"


def _rel(err: float, ref) -> float:
    mag = abs(ref)
    if mag == 0:
        return 0.0 if err == 0 else math.inf
    return err / mag


def evaluate_record(rec: IdentityRecord, grid: Grid | None = None,
                    rel_tol_override: float | None = None) -> RecordResult:
    """Run one record on ``grid`` (default: its own domain)."""
    g = grid or rec.domain
    exp = rec.expectation
    if rel_tol_override is not None and exp.kind is Kind.HOLD:
        exp = Expectation(Kind.HOLD, rel_tol_override, exp.abs_floor)
    pts = g.values()
    stats = [FormStats(c.label, f.label, f.formula, f.disputed) for c in rec.cases for f in c.forms]
    errors: list[str] = []
    worst = None
    worst_rel = -1.0
    max_abs = 0.0
    max_rel = 0.0
    ok = True
    k = 0
    for case in rec.cases:
        for x in pts:
            try:
                lhs = case.lhs(x)
            except (WrightError, ArithmeticError, ValueError) as exc:
                errors.append(f"{case.label or '='}@{g.variable}={x!r}: lhs {type(exc).__name__}: {exc}")
                for j in range(len(case.forms)):
                    if not case.forms[j].disputed:
                        stats[k + j].met = False
                ok = False
                continue
            for j, form in enumerate(case.forms):
                st = stats[k + j]
                try:
                    rhs = form.fn(x)
                except (WrightError, ArithmeticError, ValueError) as exc:
                    errors.append(f"{case.label or '='}@{g.variable}={x!r}: {form.label} {type(exc).__name__}: {exc}")
                    st.met = False
                    if not form.disputed:
                        ok = False
                    continue
                err = abs(lhs - rhs)
                rel = _rel(err, rhs)
                if exp.kind is Kind.HOLD:
                    met = err <= max(exp.rel_tol * abs(rhs), exp.abs_floor)
                elif exp.kind is Kind.FAIL_DISCREPANCY:
                    met = rel > exp.min_discrepancy
                else:
                    im = abs(complex(rhs).imag)
                    met = im > exp.min_discrepancy * abs(rhs)
                st.max_abs_err = max(st.max_abs_err, err)
                st.max_rel_err = max(st.max_rel_err, rel)
                if not met:
                    st.met = False
                if form.disputed:
                    continue
                if not met:
                    ok = False
                max_abs = max(max_abs, err)
                max_rel = max(max_rel, rel)
                if rel > worst_rel:
                    worst_rel = rel
                    worst = {"case": case.label, "form": form.label, g.variable: x,
                             "lhs": _finite(float(lhs)), "rhs": _rhs_json(rhs)}
        k += len(case.forms)
    return RecordResult(rec.id, rec.citation, exp, g, "pass" if ok else "fail",
                        max_abs, max_rel, worst, stats, errors)


def _rhs_json(v):
    if isinstance(v, complex):
        return {"re": _finite(v.real), "im": _finite(v.imag)}
    return _finite(float(v))


def run_all(grid_density: int = 41, rel_tol_override: float | None = None,
            ids: Iterable[str] | None = None) -> SuiteReport:
    """Evaluate every record (or the listed ``ids``) at ``grid_density`` points."""
    if isinstance(grid_density, bool) or int(grid_density) != grid_density or grid_density < 1:
        raise DomainError(f"grid_density must be a positive integer, got {grid_density}")
    if rel_tol_override is not None and not 1e-12 <= rel_tol_override <= 1e-6:
        raise DomainError("rel_tol_override must lie in [1e-12, 1e-6]")
    recs = RECORDS if ids is None else tuple(get_record(i) for i in ids)
    return SuiteReport([evaluate_record(r, r.domain.with_points(grid_density), rel_tol_override)
                        for r in recs])


def run_one(rid: str, grid: Grid | int | None = None) -> SuiteReport:
    """Evaluate one record; ``grid`` may be a :class:`Grid` or a point count."""
    rec = get_record(rid)
    if grid is None:
        g = rec.domain
    elif isinstance(grid, Grid):
        g = grid
    else:
        g = rec.domain.with_points(int(grid))
    return SuiteReport([evaluate_record(rec, g)])
