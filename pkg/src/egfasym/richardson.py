"""Ratio series a(n)/estimate(n) and Richardson extrapolation.

For a series f(1..L) and order m the extrapolant is

    sum_{j=1}^{m} (-1)^(m+j) f(j * floor(L/m)) j^(m-1) / ((j-1)! (m-j)!)

which cancels the 1/n, ..., 1/n^(m-1) terms of f.  Weights are exact
rationals; at large m they alternate in sign and span hundreds of orders of
magnitude, so floats are accumulated at max(digits, 2m) digits.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import mpmath
from mpmath import mpf

from egfasym.asymptotics import Formula, check_formula, estimate
from egfasym.errors import OrderTooLarge, ValidationError
from egfasym.numerics import PrecisionContext, mpf_rational
from egfasym.series import CoeffTable


@dataclass(frozen=True)
class RatioSeries:
    label: str
    formula: Formula
    entries: tuple  # (n, ratio) for n = 1..L
    ctx: PrecisionContext

    @property
    def L(self) -> int:
        return len(self.entries)

    @property
    def values(self) -> list:
        return [v for _, v in self.entries]

    def __getitem__(self, n):
        """f(n), 1-based."""
        return self.entries[n - 1][1]


@dataclass(frozen=True)
class ExtrapolationReport:
    orders: tuple
    extrapolants: tuple
    target: object = 1
    digits: int = 40

    def rows(self):
        for order, value in zip(self.orders, self.extrapolants):
            yield order, _render(value, self.digits)

    def to_table(self) -> str:
        return "\n".join(f"{order}\t{value}" for order, value in self.rows())


def _render(value, digits):
    if isinstance(value, Fraction):
        return str(value)
    return mpmath.nstr(value, digits, strip_zeros=False)


@lru_cache(maxsize=None)
def richardson_weights(m: int) -> tuple:
    """Exact weights for j = 1..m."""
    if m < 1:
        raise ValidationError(f"order must be positive, got {m}")
    return tuple(
        Fraction((-1) ** (m + j) * j ** (m - 1), math.factorial(j - 1) * math.factorial(m - j))
        for j in range(1, m + 1)
    )


def _as_values(series):
    if isinstance(series, RatioSeries):
        return series.values
    return list(series)


def richardson_extrapolate(series, m: int, ctx: PrecisionContext = PrecisionContext(), working_digits=None):
    """Order-m extrapolant of f(1..L); ``series`` is a RatioSeries or a
    sequence whose element 0 is f(1).

    All-rational input is extrapolated exactly and returns a Fraction.
    """
    values = _as_values(series)
    L = len(values)
    if m < 1:
        raise ValidationError(f"order must be positive, got {m}")
    if m > L:
        raise OrderTooLarge(f"order {m} exceeds series length {L}")
    step = L // m
    weights = richardson_weights(m)
    samples = [values[j * step - 1] for j in range(1, m + 1)]
    if all(isinstance(v, (int, Fraction)) for v in samples):
        return sum((w * v for w, v in zip(weights, samples)), Fraction(0))
    if working_digits is None:
        working_digits = max(ctx.digits, 2 * m)
    with mpmath.workdps(working_digits + ctx.guard):
        total = mpmath.fsum(mpf_rational(w) * mpf(v) for w, v in zip(weights, samples))
    return ctx.round(total)


def extrapolation_table(series, orders: Sequence[int], ctx: PrecisionContext = PrecisionContext(), digits: int = 40) -> ExtrapolationReport:
    orders = tuple(orders)
    if not orders:
        raise ValidationError("at least one order is required")
    values = _as_values(series)
    extrapolants = tuple(richardson_extrapolate(values, m, ctx) for m in orders)
    return ExtrapolationReport(orders, extrapolants, 1, min(digits, ctx.digits))


def _ratio_entry(args):
    params, n, a_n, formula, ctx = args
    est = estimate(params, n, formula, ctx)
    with ctx.working():
        prefactor = mpf_rational(params.prefactor_exponent)
        a = mpf_rational(a_n) if isinstance(a_n, Fraction) else mpf(a_n)
        ratio = a * mpmath.exp(prefactor - est.log_value)
    if not mpmath.isfinite(ratio):
        raise ArithmeticError(f"non-finite ratio at n={n}")
    return n, ctx.round(ratio)


def ratio_series(
    coeffs: CoeffTable,
    estimator=Formula.SIMPLIFIED,
    ctx: PrecisionContext = PrecisionContext(),
    label: str = "",
    jobs: int = 1,
) -> RatioSeries:
    """f(n) = e^(m+r+s) a(n) / estimate(n) for n = 1..N."""
    formula = Formula(estimator)
    check_formula(coeffs.params, formula)
    if coeffs.N < 1:
        raise ValidationError("ratio series needs at least a(1)")
    tasks = [(coeffs.params, n, coeffs.values[n], formula, ctx) for n in range(1, coeffs.N + 1)]
    if jobs > 1:
        # mpmath precision is process-global, so fan out to processes, not threads
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = tuple(pool.map(_ratio_entry, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        entries = tuple(map(_ratio_entry, tasks))
    return RatioSeries(label or str(coeffs.params), formula, entries, ctx)
