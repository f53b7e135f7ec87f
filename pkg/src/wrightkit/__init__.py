"""Wright functions of the second kind and their closed-form representations.

Main entry points
-----------------
wright_series, mainardi_m, auxiliary_f
    Series evaluation of ``W_{lam,mu}(z)`` and the auxiliary functions.
closed_form
    Tabulated Whittaker, Bessel, Airy, erf and pFq representations.
invert
    Numerical inverse Laplace transform of ``s^{-mu} exp(-x s^nu)``.
sister, three_sisters_closed
    Time-fractional diffusion kernels.
run_all, run_one
    The identity suite.
"""
from __future__ import annotations

from .classical import (
    WhittakerParams,
    airy,
    bessel_i,
    bessel_j,
    bessel_k,
    erf,
    erfc,
    whittaker_m,
    whittaker_w,
)
from .closed_forms import closed_form, registered_entries
from .errors import (
    ContourError,
    ConvergenceError,
    DomainError,
    GammaOverflowError,
    PrecisionError,
    RegistryError,
    WrightError,
)
from .gamma_core import GammaValue, gamma, pochhammer, rgamma
from .hypergeometric import PfqSpec, kummer_transform, pfq
from .identities import IdentityRecord, SuiteReport, run_all, run_one
from .laplace import ContourSpec, hankel_rgamma, invert
from .results import EvalResult
from .sisters import Role, SisterSpec, sister, three_sisters_closed
from .wright import WrightParams, auxiliary_f, mainardi_m, split_two_thirds, wright_series

__all__ = [
    "ContourError", "ContourSpec", "ConvergenceError", "DomainError", "EvalResult",
    "GammaOverflowError", "GammaValue", "IdentityRecord", "PfqSpec", "PrecisionError",
    "RegistryError", "Role", "SisterSpec", "SuiteReport", "WhittakerParams", "WrightError",
    "WrightParams", "airy", "auxiliary_f", "bessel_i", "bessel_j", "bessel_k", "closed_form",
    "erf", "erfc", "gamma", "hankel_rgamma", "invert", "kummer_transform", "mainardi_m",
    "pfq", "pochhammer", "registered_entries", "rgamma", "run_all", "run_one", "sister",
    "split_two_thirds", "three_sisters_closed", "whittaker_m", "whittaker_w", "wright_series",
]
__version__ = "0.1.0"
