"""Exact coefficients and saddle-point asymptotics for e.g.f.s of the form
exp(m*e^(b*x) + r*e^(d*x) + s).
"""

from egfasym.params import EgfParams, Regime, classify_regime, validate
from egfasym.numerics import PrecisionContext, lambert_w0, log_factorial, stirling_factorial
from egfasym.series import CoeffTable, Float, egf_coefficients, taylor_oracle
from egfasym.saddle import (
    SaddlePoint,
    saddle_closed_form,
    saddle_main_term,
    saddle_newton_refine,
    saddle_solve,
)
from egfasym.asymptotics import (
    AsympEstimate,
    Formula,
    asymp_full,
    asymp_simplified,
    correction_constant,
    estimate,
    hayman_estimate,
)
from egfasym.richardson import (
    ExtrapolationReport,
    RatioSeries,
    extrapolation_table,
    ratio_series,
    richardson_extrapolate,
    richardson_weights,
)
from egfasym.oeis import BFile, ComparisonReport, compare_prefix, fetch_bfile, parse_bfile

__version__ = "0.1.0"
