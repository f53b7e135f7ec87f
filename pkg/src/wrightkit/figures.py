"""Figure data as CSV tables.

Each figure id maps to fixed functions and ranges:

=======  ==============================================================
fig1     ``M_{2/3}(x)`` on ``[0, 5]``
fig3a    ``W_{-2/3,0}(x)``: series and Whittaker form on ``[0.01, 4]``
fig3b    ``W_{-2/3,0}(-x)``: series and Whittaker form on ``[0.01, 4]``
fig4     ``W_{-2/3,0}(-x^{-2/3})``: series and corrected Whittaker form
fig5     three sisters at ``nu = 1/2``, versus t at x=1 and versus x at t=1
fig6     four sisters at ``nu = 1/3``, same layout
fig7     four sisters at ``nu = 2/3``, same layout
fig8     ``t^{-2/3} W_{-2/3,1/3}(-t^{-2/3})``: series and Whittaker form
=======  ==============================================================

Both-sides figures carry a ``difference`` column.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from ._precision import ladder
from .classical import whittaker_w_mp
from .errors import DomainError
from .sisters import ROLES, Role, SisterSpec, grid, sister
from .wright import WrightParams, auxiliary_f, mainardi_m, wright_series

F = Fraction
FIGURE_IDS = ("fig1", "fig3a", "fig3b", "fig4", "fig5", "fig6", "fig7", "fig8")

#: default abscissa range per figure
_RANGES = {
    "fig1": (0.0, 5.0),
    "fig3a": (0.01, 4.0),
    "fig3b": (0.01, 4.0),
    "fig4": (0.05, 5.0),
    "fig5": (0.01, 5.0),
    "fig6": (0.01, 5.0),
    "fig7": (0.01, 5.0),
    "fig8": (0.05, 5.0),
}


@dataclass(frozen=True)
class FigureSpec:
    """Figure id plus grid parameters (defaults per id when omitted)."""

    id: str
    points: int = 500
    lo: float | None = None
    hi: float | None = None
    log: bool = False

    def __post_init__(self):
        if self.id not in FIGURE_IDS:
            raise DomainError(f"unknown figure {self.id!r}; choose from {', '.join(FIGURE_IDS)}")
        if self.points < 2:
            raise DomainError("a figure needs at least 2 points")

    @property
    def range(self) -> tuple[float, float]:
        lo, hi = _RANGES[self.id]
        return (lo if self.lo is None else self.lo, hi if self.hi is None else self.hi)

    def abscissa(self) -> list[float]:
        lo, hi = self.range
        return [float(v) for v in grid(lo, hi, self.points, self.log)]


@dataclass(frozen=True)
class Table:
    """One CSV file: header plus float rows, tagged by a file-name suffix."""

    suffix: str
    header: tuple
    rows: list

    def max_difference(self) -> float:
        if "difference" not in self.header:
            raise DomainError("table has no difference column")
        j = self.header.index("difference")
        return max(abs(r[j]) for r in self.rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.header)
        for row in self.rows:
            w.writerow([format(v, ".17g") for v in row])
        return buf.getvalue()


def _whittaker_side(fn):
    def rhs(v: float) -> float:
        val, _ = ladder(lambda ctx: fn(ctx, ctx.mpf(v)), start_bits=96)
        return float(val)

    return rhs


def _pv_plus(ctx, x):
    X = 4 * x ** 3 / 27
    return -1 / (2 * ctx.sqrt(3 * ctx.pi)) * ctx.exp(X / 2) * whittaker_w_mp(ctx, F(-1, 2), F(1, 6), X)


def _pv_minus(ctx, x):
    X = 4 * x ** 3 / 27
    return ctx.sqrt(3 / ctx.pi) * ctx.exp(-X / 2) * whittaker_w_mp(ctx, F(1, 2), F(1, 6), X)


def _stank(ctx, x):
    X = 4 / (27 * x * x)
    return ctx.sqrt(3 / ctx.pi) * ctx.exp(-X / 2) * whittaker_w_mp(ctx, F(1, 2), F(1, 6), X)


def _humbert(ctx, t):
    X = 4 / (27 * t * t)
    return ctx.mpf(3) / 2 * ctx.sqrt(3 / ctx.pi) * ctx.exp(-X / 2) * whittaker_w_mp(ctx, F(1, 2), F(1, 6), X)


def _two_sided(var: str, xs, lhs, rhs) -> Table:
    rows = []
    for v in xs:
        a = lhs(v)
        b = rhs(v)
        rows.append((v, a, b, a - b))
    return Table("", (var, "wright", "whittaker", "difference"), rows)


def build_tables(spec: FigureSpec) -> list[Table]:
    """Compute the CSV tables for one figure."""
    xs = spec.abscissa()
    fid = spec.id
    if fid == "fig1":
        rows = [(x, mainardi_m(F(2, 3), x).value) for x in xs]
        return [Table("", ("x", "M_2/3"), rows)]
    if fid == "fig3a":
        p = WrightParams(F(-2, 3), 0)
        return [_two_sided("x", xs, lambda x: wright_series(p, x).value, _whittaker_side(_pv_plus))]
    if fid == "fig3b":
        return [_two_sided("x", xs, lambda x: auxiliary_f(F(2, 3), x).value, _whittaker_side(_pv_minus))]
    if fid == "fig4":
        return [_two_sided("x", xs, lambda x: auxiliary_f(F(2, 3), x ** (-2.0 / 3.0)).value,
                           _whittaker_side(_stank))]
    if fid == "fig8":
        def lhs(t):
            return t ** (-2.0 / 3.0) * mainardi_m(F(2, 3), t ** (-2.0 / 3.0)).value
        return [_two_sided("t", xs, lhs, _whittaker_side(_humbert))]
    nu = {"fig5": F(1, 2), "fig6": F(1, 3), "fig7": F(2, 3)}[fid]
    if fid == "fig5":
        curves = (("phi", Role.MU_ONE), ("psi", Role.MU_ZERO), ("chi", Role.MU_NU))
    else:
        curves = tuple((r.value, r) for r in ROLES)
    specs = [(name, SisterSpec(nu, role)) for name, role in curves]
    tables = []
    for suffix, var in (("_vs_t", "t"), ("_vs_x", "x")):
        rows = []
        for v in xs:
            x, t = (1.0, v) if var == "t" else (v, 1.0)
            rows.append((v, *(sister(s, x, t) for _, s in specs)))
        tables.append(Table(suffix, (var, *(n for n, _ in specs)), rows))
    return tables


def output_paths(spec: FigureSpec, out: str | Path, tables: list[Table]) -> list[Path]:
    """File names: ``out`` itself, or ``<stem>_vs_t<ext>`` and ``<stem>_vs_x<ext>``."""
    out = Path(out)
    if len(tables) == 1:
        return [out]
    return [out.with_name(f"{out.stem}{t.suffix}{out.suffix or '.csv'}") for t in tables]


def write_figure(spec: FigureSpec, out: str | Path) -> list[Path]:
    """Compute and write a figure's CSV file(s); returns the paths written."""
    tables = build_tables(spec)
    paths = output_paths(spec, out, tables)
    for table, path in zip(tables, paths):
        with open(path, "w", newline="") as fh:
            fh.write(table.to_csv())
    return paths
