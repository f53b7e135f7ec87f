"""Registry of closed forms for ``W_{-nu,mu}(+x)`` and ``W_{-nu,mu}(-x)``.

Entries are keyed by exact ``(nu, mu, sign)`` with ``nu`` in
``{1/3, 1/2, 2/3}``.  Each entry has a primary formula and optional
alternates (for instance a Bessel and an Airy form of the same function).
Every formula is a function ``f(ctx, x)`` evaluated at the current
precision of ``ctx``; :func:`closed_form` runs it on the precision ladder.

A formula marked ``disputed`` is transcribed exactly as tabulated but does
not agree with the series; it is kept for reporting and never used as a
primary form.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ._precision import ladder, snap_rational
from .classical import (
    airy_mp,
    bessel_j_mp,
    bessel_k_mp,
    erf_mp,
    whittaker_m_mp,
    whittaker_w_mp,
)
from .errors import DomainError, RegistryError
from .hypergeometric import pfq_mp
from .results import EvalResult

F = Fraction
_LN2 = math.log(2.0)

Formula = Callable[[object, object], object]


@dataclass(frozen=True)
class Form:
    """One right-hand side of a tabulated identity."""

    label: str
    formula: str
    fn: Formula
    disputed: bool = False
    tabulated: bool = True


@dataclass(frozen=True)
class TableEntry:
    """Closed forms for ``W_{-nu,mu}(sign x)``."""

    nu: Fraction
    mu: Fraction
    sign: int
    variable: str
    primary: Form
    alternates: tuple = field(default_factory=tuple)

    @property
    def forms(self) -> tuple:
        return (self.primary, *self.alternates)

    @property
    def key(self):
        return (self.nu, self.mu, self.sign)

    def describe(self) -> str:
        s = "+" if self.sign > 0 else "-"
        return f"nu={self.nu}, mu={self.mu}, sign={s}"


def _x(ctx, x):
    return ctx.mpf(x) if not isinstance(x, Fraction) else ctx.mpf(x.numerator) / x.denominator


# -- substitution variables --------------------------------------------------


def X_half(ctx, x):
    """``X = x^2/4``."""
    xx = _x(ctx, x)
    return xx * xx / 4


def X_third(ctx, x):
    """``X = 2 (x/3)^{3/2}``."""
    xx = _x(ctx, x)
    return 2 * (xx / 3) ** ctx.mpf(1.5)


def X_two_thirds(ctx, x):
    """``X = 4 x^3 / 27``."""
    xx = _x(ctx, x)
    return 4 * xx ** 3 / 27


def _q(ctx, fr: Fraction):
    return ctx.mpf(fr.numerator) / fr.denominator


# -- nu = 1/2 ------------------------------------------------------------------


def _half_mu0(sign):
    def f(ctx, x):
        X = X_half(ctx, x)
        return -sign * ctx.sqrt(X) * ctx.exp(-X) / ctx.sqrt(ctx.pi)

    return f


def _half_pref(ctx, X):
    return X ** _q(ctx, F(-1, 4)) * ctx.exp(-X / 2) / ctx.sqrt(ctx.pi)


def _half_mu14_plus(ctx, x):
    X = X_half(ctx, x)
    w = whittaker_w_mp(ctx, F(1, 2), F(1, 4), X)
    m = whittaker_m_mp(ctx, F(1, 2), F(1, 4), X)
    return _half_pref(ctx, X) * (w - ctx.sqrt(ctx.pi) / ctx.gamma(_q(ctx, F(3, 4))) * m)


def _half_mu14_minus(ctx, x):
    X = X_half(ctx, x)
    return _half_pref(ctx, X) * whittaker_w_mp(ctx, F(1, 2), F(1, 4), X)


def _half_mu12(ctx, x):
    X = X_half(ctx, x)
    return ctx.exp(-X) / ctx.sqrt(ctx.pi)


def _half_mu34_plus(ctx, x):
    X = X_half(ctx, x)
    w = whittaker_w_mp(ctx, F(0), F(1, 4), X)
    m = whittaker_m_mp(ctx, F(0), F(1, 4), X)
    return _half_pref(ctx, X) * (w + ctx.sqrt(ctx.pi) / ctx.gamma(_q(ctx, F(5, 4))) * m)


def _half_mu34_minus(ctx, x):
    X = X_half(ctx, x)
    return _half_pref(ctx, X) * whittaker_w_mp(ctx, F(0), F(1, 4), X)


def _half_mu1_whittaker(sign):
    def f(ctx, x):
        X = X_half(ctx, x)
        w = whittaker_w_mp(ctx, F(-1, 4), F(1, 4), X)
        return -sign * _half_pref(ctx, X) * w + (2 if sign > 0 else 0)

    return f


def _half_mu1_erf(sign):
    def f(ctx, x):
        X = X_half(ctx, x)
        return 1 + sign * erf_mp(ctx, ctx.sqrt(X))

    return f


# -- nu = 1/3 ------------------------------------------------------------------


def _y3(ctx, x):
    return _x(ctx, x) / ctx.cbrt(3)


def _third_mu0_plus_bessel(ctx, x):
    X = X_third(ctx, x)
    return -X / 2 * (bessel_j_mp(ctx, F(-1, 3), X) + bessel_j_mp(ctx, F(1, 3), X))


def _third_mu0_plus_airy(ctx, x):
    return -_y3(ctx, x) * airy_mp(ctx, -_y3(ctx, x))[0]


def _third_mu0_minus_bessel(ctx, x):
    X = X_third(ctx, x)
    return ctx.sqrt(3) / (2 * ctx.pi) * X * bessel_k_mp(ctx, F(1, 3), X)


def _third_mu0_minus_airy(ctx, x):
    return _y3(ctx, x) * airy_mp(ctx, _y3(ctx, x))[0]


def _third_mu13_plus_bessel(ctx, x):
    X = X_third(ctx, x)
    return (X / 2) ** _q(ctx, F(2, 3)) * (bessel_j_mp(ctx, F(-2, 3), X) - bessel_j_mp(ctx, F(2, 3), X))


def _third_mu13_plus_airy(ctx, x):
    return -ctx.cbrt(3) * airy_mp(ctx, -_y3(ctx, x))[1]


def _third_mu13_minus_bessel(ctx, x):
    X = X_third(ctx, x)
    return ctx.sqrt(3) / ctx.pi * (X / 2) ** _q(ctx, F(2, 3)) * bessel_k_mp(ctx, F(2, 3), X)


def _third_mu13_minus_airy(ctx, x):
    return -ctx.cbrt(3) * airy_mp(ctx, _y3(ctx, x))[1]


def _third_mu23_plus_airy(ctx, x):
    return ctx.cbrt(3) ** 2 * airy_mp(ctx, -_y3(ctx, x))[0]


def _third_mu23_plus_bessel_printed(ctx, x):
    X = X_third(ctx, x)
    return (X / 2) ** _q(ctx, F(2, 3)) * (bessel_j_mp(ctx, F(-2, 3), X) + bessel_j_mp(ctx, F(2, 3), X))


def _third_mu23_plus_bessel_third(ctx, x):
    X = X_third(ctx, x)
    return (X / 2) ** _q(ctx, F(1, 3)) * (bessel_j_mp(ctx, F(-1, 3), X) + bessel_j_mp(ctx, F(1, 3), X))


def _third_mu23_minus_bessel(ctx, x):
    X = X_third(ctx, x)
    return ctx.sqrt(3) / ctx.pi * (X / 2) ** _q(ctx, F(1, 3)) * bessel_k_mp(ctx, F(1, 3), X)


def _third_mu23_minus_airy(ctx, x):
    return ctx.cbrt(3) ** 2 * airy_mp(ctx, _y3(ctx, x))[0]


def _third_mu1(sign):
    def f(ctx, x):
        xx = _x(ctx, x)
        X = X_third(ctx, x)
        arg = -sign * X * X / 4
        a = pfq_mp(ctx, [F(1, 3)], [F(2, 3), F(4, 3)], arg)
        b = pfq_mp(ctx, [F(2, 3)], [F(4, 3), F(5, 3)], arg)
        return (1 + sign * xx * ctx.rgamma(_q(ctx, F(2, 3))) * a
                + xx * xx / 2 * ctx.rgamma(_q(ctx, F(1, 3))) * b)

    return f


# -- nu = 2/3 ------------------------------------------------------------------


def _tt_mu0_plus(ctx, x):
    X = X_two_thirds(ctx, x)
    return -1 / (2 * ctx.sqrt(3 * ctx.pi)) * ctx.exp(X / 2) * whittaker_w_mp(ctx, F(-1, 2), F(1, 6), X)


def _tt_mu0_minus(ctx, x):
    X = X_two_thirds(ctx, x)
    return ctx.sqrt(3 / ctx.pi) * ctx.exp(-X / 2) * whittaker_w_mp(ctx, F(1, 2), F(1, 6), X)


def _tt_mu13_plus(ctx, x):
    X = X_two_thirds(ctx, x)
    return (ctx.power(2, _q(ctx, F(-4, 3))) / ctx.sqrt(3 * ctx.pi) * ctx.exp(X / 2)
            * X ** _q(ctx, F(-1, 3)) * whittaker_w_mp(ctx, F(-1, 2), F(1, 6), X))


def _tt_mu13_minus(ctx, x):
    X = X_two_thirds(ctx, x)
    return (ctx.power(2, _q(ctx, F(-1, 3))) * ctx.sqrt(3 / ctx.pi) * ctx.exp(-X / 2)
            * X ** _q(ctx, F(-1, 3)) * whittaker_w_mp(ctx, F(1, 2), F(1, 6), X))


def m_two_thirds_airy(ctx, x):
    """``M_{2/3}`` through ``Ai`` and ``Ai'`` at ``x^2 / 3^{4/3}``."""
    xx = _x(ctx, x)
    arg = xx * xx / ctx.power(3, _q(ctx, F(4, 3)))
    ai, aip = airy_mp(ctx, arg)
    return (ctx.power(3, _q(ctx, F(-2, 3))) * (ctx.cbrt(3) * xx * ai - 3 * aip)
            * ctx.exp(-2 * xx ** 3 / 27))


def _tt_mu23(sign):
    def f(ctx, x):
        X = X_two_thirds(ctx, x)
        return (ctx.power(2, _q(ctx, F(-2, 3))) * ctx.sqrt(3 / ctx.pi) * ctx.exp(sign * X / 2)
                * X ** _q(ctx, F(-1, 6)) * whittaker_w_mp(ctx, F(0), F(1, 3), X))

    return f


def _tt_mu1(sign):
    def f(ctx, x):
        xx = _x(ctx, x)
        X = X_two_thirds(ctx, x)
        g = ctx.gamma
        a = pfq_mp(ctx, [F(1, 3), F(5, 6)], [F(2, 3), F(4, 3)], sign * X)
        b = pfq_mp(ctx, [F(2, 3), F(7, 6)], [F(4, 3), F(5, 3)], sign * X)
        c1 = g(_q(ctx, F(5, 6))) / g(_q(ctx, F(2, 3)))
        c2 = g(_q(ctx, F(1, 6))) / (4 * g(_q(ctx, F(1, 3))))
        return 1 + ctx.power(2, _q(ctx, F(-1, 3))) * xx / ctx.sqrt(ctx.pi) * (
            sign * c1 * a - ctx.cbrt(X) * c2 * b)

    return f


# -- table ---------------------------------------------------------------------

_HALF = "X = x^2/4"
_THIRD = "X = 2(x/3)^(3/2)"
_TWO_THIRDS = "X = 4x^3/27"


def _build() -> dict:
    h, t, tt = F(1, 2), F(1, 3), F(2, 3)
    entries = []
    for s in (1, -1):
        sg = "+" if s > 0 else "-"
        mp_ = "-" if s > 0 else "+"
        entries.append(TableEntry(h, F(0), s, _HALF, Form(
            "gaussian", f"{mp_}X^(1/2) e^(-X)/sqrt(pi)", _half_mu0(s))))
        entries.append(TableEntry(h, h, s, _HALF, Form(
            "gaussian", "e^(-X)/sqrt(pi)", _half_mu12)))
        entries.append(TableEntry(h, F(1), s, _HALF, Form(
            "erf", f"1 {sg} erf(sqrt(X))", _half_mu1_erf(s)), (Form(
                "whittaker",
                f"{mp_}(1/sqrt(pi)) X^(-1/4) e^(-X/2) W[-1/4,1/4](X)" + (" + 2" if s > 0 else ""),
                _half_mu1_whittaker(s)),)))
        entries.append(TableEntry(t, F(1), s, _THIRD, Form(
            "1F2",
            f"1 {sg} x/G(2/3) 1F2(1/3; 2/3, 4/3; {mp_}X^2/4) + x^2/(2 G(1/3)) 1F2(2/3; 4/3, 5/3; {mp_}X^2/4)",
            _third_mu1(s))))
        entries.append(TableEntry(tt, tt, s, _TWO_THIRDS, Form(
            "whittaker", f"2^(-2/3) sqrt(3/pi) e^({sg}X/2) X^(-1/6) W[0,1/3](X)", _tt_mu23(s))))
        entries.append(TableEntry(tt, F(1), s, _TWO_THIRDS, Form(
            "2F2",
            f"1 + 2^(-1/3) x/sqrt(pi) {{{sg}G(5/6)/G(2/3) 2F2(1/3, 5/6; 2/3, 4/3; {sg}X)"
            f" - X^(1/3) G(1/6)/(4 G(1/3)) 2F2(2/3, 7/6; 4/3, 5/3; {sg}X)}}",
            _tt_mu1(s))))
    entries += [
        TableEntry(h, F(1, 4), 1, _HALF, Form(
            "whittaker",
            "(1/sqrt(pi)) X^(-1/4) e^(-X/2) {W[1/2,1/4](X) - sqrt(pi)/G(3/4) M[1/2,1/4](X)}",
            _half_mu14_plus)),
        TableEntry(h, F(1, 4), -1, _HALF, Form(
            "whittaker", "(1/sqrt(pi)) X^(-1/4) e^(-X/2) W[1/2,1/4](X)", _half_mu14_minus)),
        TableEntry(h, F(3, 4), 1, _HALF, Form(
            "whittaker",
            "(1/sqrt(pi)) X^(-1/4) e^(-X/2) {W[0,1/4](X) + sqrt(pi)/G(5/4) M[0,1/4](X)}",
            _half_mu34_plus)),
        TableEntry(h, F(3, 4), -1, _HALF, Form(
            "whittaker", "(1/sqrt(pi)) X^(-1/4) e^(-X/2) W[0,1/4](X)", _half_mu34_minus)),
        TableEntry(t, F(0), 1, _THIRD,
                   Form("bessel", "-(X/2) {J[-1/3](X) + J[1/3](X)}", _third_mu0_plus_bessel),
                   (Form("airy", "-3^(-1/3) x Ai(-3^(-1/3) x)", _third_mu0_plus_airy),)),
        TableEntry(t, F(0), -1, _THIRD,
                   Form("bessel", "sqrt(3)/(2 pi) X K[1/3](X)", _third_mu0_minus_bessel),
                   (Form("airy", "3^(-1/3) x Ai(3^(-1/3) x)", _third_mu0_minus_airy),)),
        TableEntry(t, t, 1, _THIRD,
                   Form("bessel", "(X/2)^(2/3) {J[-2/3](X) - J[2/3](X)}", _third_mu13_plus_bessel),
                   (Form("airy", "-3^(1/3) Ai'(-3^(-1/3) x)", _third_mu13_plus_airy),)),
        TableEntry(t, t, -1, _THIRD,
                   Form("bessel", "sqrt(3)/pi (X/2)^(2/3) K[2/3](X)", _third_mu13_minus_bessel),
                   (Form("airy", "-3^(1/3) Ai'(3^(-1/3) x)", _third_mu13_minus_airy),)),
        TableEntry(t, tt, 1, _THIRD,
                   Form("airy", "3^(2/3) Ai(-3^(-1/3) x)", _third_mu23_plus_airy),
                   (Form("bessel-as-tabulated", "(X/2)^(2/3) {J[-2/3](X) + J[2/3](X)}",
                         _third_mu23_plus_bessel_printed, disputed=True),
                    Form("bessel-order-1/3", "(X/2)^(1/3) {J[-1/3](X) + J[1/3](X)}",
                         _third_mu23_plus_bessel_third))),
        TableEntry(t, tt, -1, _THIRD,
                   Form("bessel", "sqrt(3)/pi (X/2)^(1/3) K[1/3](X)", _third_mu23_minus_bessel),
                   (Form("airy", "3^(2/3) Ai(3^(-1/3) x)", _third_mu23_minus_airy),)),
        TableEntry(tt, F(0), 1, _TWO_THIRDS, Form(
            "whittaker", "-1/(2 sqrt(3 pi)) e^(X/2) W[-1/2,1/6](X)", _tt_mu0_plus)),
        TableEntry(tt, F(0), -1, _TWO_THIRDS, Form(
            "whittaker", "sqrt(3/pi) e^(-X/2) W[1/2,1/6](X)", _tt_mu0_minus)),
        TableEntry(tt, t, 1, _TWO_THIRDS, Form(
            "whittaker", "2^(-4/3)/sqrt(3 pi) e^(X/2) X^(-1/3) W[-1/2,1/6](X)", _tt_mu13_plus)),
        TableEntry(tt, t, -1, _TWO_THIRDS,
                   Form("whittaker", "2^(-1/3) sqrt(3/pi) e^(-X/2) X^(-1/3) W[1/2,1/6](X)", _tt_mu13_minus),
                   (Form("airy", "3^(-2/3) [3^(1/3) x Ai(x^2/3^(4/3)) - 3 Ai'(x^2/3^(4/3))] e^(-2x^3/27)",
                         m_two_thirds_airy, tabulated=False),)),
    ]
    return {e.key: e for e in entries}


REGISTRY: dict = _build()


def registered_entries() -> list:
    """Sorted list of ``(nu, mu, sign)`` keys."""
    return sorted(REGISTRY)


def _parse_sign(sign) -> int:
    if sign in (1, "+", "plus"):
        return 1
    if sign in (-1, "-", "−", "minus"):
        return -1
    raise DomainError(f"sign must be '+' or '-', got {sign!r}")


def _exact(v) -> Fraction | None:
    """Exact fraction for a registry lookup, or None when not exact."""
    s = snap_rational(v, max_den=12)
    return s if isinstance(s, Fraction) else None


def lookup(nu, mu, sign) -> TableEntry:
    """Return the registered entry or raise :class:`RegistryError`."""
    sg = _parse_sign(sign)
    key = (_exact(nu), _exact(mu), sg)
    entry = REGISTRY.get(key)
    if entry is None:
        listing = ", ".join(
            f"({n}, {m}, {'+' if s > 0 else '-'})" for n, m, s in registered_entries()
        )
        raise RegistryError(
            f"no closed form for nu={nu}, mu={mu}, sign={'+' if sg > 0 else '-'}; "
            f"registered entries: {listing}"
        )
    return entry


def _hint(entry: TableEntry, x: float) -> int:
    if entry.nu == F(1, 2):
        X = x * x / 4
    elif entry.nu == F(1, 3):
        X = 2 * (x / 3) ** 1.5
    else:
        X = 4 * x ** 3 / 27
    return 64 + int(2.5 * X / _LN2)


def evaluate_form(entry: TableEntry, form: Form, x) -> tuple[float, float]:
    """Evaluate one form on the precision ladder; returns ``(value, err)``."""
    xf = float(x)
    val, diff = ladder(lambda ctx: form.fn(ctx, x), start_bits=_hint(entry, xf))
    return float(val), float(diff)


def closed_form(nu, mu, sign, x: float) -> EvalResult:
    """Evaluate the tabulated closed form of ``W_{-nu,mu}(sign x)``.

    Parameters
    ----------
    nu, mu : Fraction, str or float
        Must match a registered entry exactly (``"2/3"``, ``Fraction(2, 3)``
        or the double nearest to 2/3 all match; ``0.666667`` does not).
    sign : {'+', '-'}
        Sign of the Wright argument.
    x : float
        Positive magnitude of the argument.

    Returns
    -------
    EvalResult
        ``method == "closed"``; ``err_estimate`` is the difference between
        the last two precision rungs plus the final rounding.
    """
    entry = lookup(nu, mu, sign)
    xs = snap_rational(x)
    if not float(xs) > 0 or not math.isfinite(float(xs)):
        raise DomainError(f"x must be positive and finite, got {x}")
    value, diff = evaluate_form(entry, entry.primary, xs)
    return EvalResult(value, 0, diff + abs(value) * 2.0 ** -53, method="closed")
