"""Log-space asymptotic estimates of a(n).

Three estimators:

* ``hayman_estimate``: G(z) n! / (z^n sqrt(2 pi b(z))) at any saddle z.
* ``asymp_full``: the same with Stirling's n! and the closed-form saddle,
  valid for every b > d.
* ``asymp_simplified``: the single-term form, only for b/d >= 2, scaled by
  the regime constant c.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath
from mpmath import mpf

from egfasym.errors import FullFormulaRequired, NegativeVariance, ValidationError
from egfasym.numerics import (
    PrecisionContext,
    _halley_w0,
    _log_factorial,
    _log_stirling,
    _rpow,
    mpf_rational,
)
from egfasym.params import EgfParams, Regime, classify_regime
from egfasym.saddle import _closed_form, _Coeffs, _fprime_terms, saddle_solve


class Formula(enum.Enum):
    HAYMAN = "hayman"
    FULL = "full"
    SIMPLIFIED = "simplified"


@dataclass(frozen=True)
class AsympEstimate:
    n: int
    formula: Formula
    log_value: mpf
    ctx: PrecisionContext
    z: Optional[mpf] = None

    @property
    def log10_value(self):
        with self.ctx.working():
            v = self.log_value / mpmath.ln10
        return self.ctx.round(v)

    def mantissa_exponent(self):
        """(mantissa in [1, 10) as mpf, integer base-10 exponent)."""
        with self.ctx.working(extra=len(str(int(abs(self.log_value)))) + 2):
            l10 = self.log_value / mpmath.ln10
            e = int(mpmath.floor(l10))
            mant = mpf(10) ** (l10 - e)
            if mpmath.nstr(mant, self.ctx.digits).startswith("10"):
                mant /= 10
                e += 1
        return self.ctx.round(mant), e

    @property
    def value(self) -> str:
        mant, e = self.mantissa_exponent()
        return f"{mpmath.nstr(mant, self.ctx.digits, strip_zeros=False)}e{e}"


def _variance_terms(params, z):
    c = _Coeffs(params)
    return _fprime_terms(c, z), c


def correction_constant(params: EgfParams) -> Fraction:
    """log c: 0 for b/d > 2, -r^2/(8m) for b/d = 2."""
    regime = classify_regime(params)
    if regime is Regime.FULL_ONLY:
        raise FullFormulaRequired(
            f"b/d = {params.ratio} < 2: the single-term formula does not apply, use the full formula"
        )
    if regime is Regime.SUPER:
        return Fraction(0)
    return -params.r**2 / (8 * params.m)


def _hayman_log(params, n, z, factorial_mode):
    (t1, t2), c = _variance_terms(params, z)
    bz = z * (t1 + t2)
    if bz <= 0:
        raise NegativeVariance(f"b(z) = {mpmath.nstr(bz, 10)} <= 0 at z = {mpmath.nstr(z, 15)}")
    if factorial_mode == "exact":
        lfact = _log_factorial(n)
    elif factorial_mode == "stirling":
        lfact = _log_stirling(n)
    else:
        raise ValidationError(f"factorial_mode must be 'exact' or 'stirling', got {factorial_mode!r}")
    log_g = c.m * mpmath.exp(c.b * z) + c.r * mpmath.exp(c.d * z) + c.s
    return log_g - n * mpmath.log(z) - mpmath.log(2 * mpmath.pi * bz) / 2 + lfact


def hayman_estimate(
    params: EgfParams,
    n: int,
    z,
    ctx: PrecisionContext = PrecisionContext(),
    factorial_mode: str = "exact",
) -> AsympEstimate:
    if n < 1:
        raise ValidationError(f"n must be positive, got {n}")
    with ctx.working():
        z = mpf(z)
        if z <= 0:
            raise ValidationError(f"z must be positive, got {z}")
        lv = _hayman_log(params, n, z, factorial_mode)
    return AsympEstimate(n, Formula.HAYMAN, ctx.round(lv), ctx, ctx.round(z))


def _full_log(params, n, z):
    (t1, t2), c = _variance_terms(params, z)
    var = t1 + t2
    if var <= 0:
        raise NegativeVariance(f"variance term {mpmath.nstr(var, 10)} <= 0 at z = {mpmath.nstr(z, 15)}")
    nn = mpf(n)
    return (
        (nn + mpf(1) / 2) * (mpmath.log(nn) - mpmath.log(z))
        + c.m * mpmath.exp(c.b * z)
        + c.r * mpmath.exp(c.d * z)
        - nn
        + c.s
        - mpmath.log(var) / 2
    )


def asymp_full(
    params: EgfParams, n: int, ctx: PrecisionContext = PrecisionContext(), z=None
) -> AsympEstimate:
    """Full formula at the closed-form saddle (or at ``z`` if given)."""
    if n < 1:
        raise ValidationError(f"n must be positive, got {n}")
    with ctx.working():
        z = _closed_form(params, n) if z is None else mpf(z)
        lv = _full_log(params, n, z)
    return AsympEstimate(n, Formula.FULL, ctx.round(lv), ctx, ctx.round(z))


def _simplified_log(params, n, log_c):
    m, b = mpf_rational(params.m), mpf_rational(params.b)
    r, s = mpf_rational(params.r), mpf_rational(params.s)
    nn = mpf(n)
    w = _halley_w0(nn / m)
    t = nn / (m * w)
    return (
        mpf_rational(log_c)
        + nn * (mpmath.log(b) + mpmath.log(nn) - mpmath.log(w))
        + r * _rpow(t, params.d / params.b)
        + nn / w
        - nn
        + s
        - mpmath.log(w + 1) / 2
    )


def asymp_simplified(
    params: EgfParams, n: int, ctx: PrecisionContext = PrecisionContext()
) -> AsympEstimate:
    """c (bn/W)^n exp(r (n/(mW))^(d/b) + n/W - n + s) / sqrt(W + 1), W = W(n/m)."""
    log_c = correction_constant(params)
    if n < 1:
        raise ValidationError(f"n must be positive, got {n}")
    with ctx.working():
        lv = _simplified_log(params, n, log_c)
    return AsympEstimate(n, Formula.SIMPLIFIED, ctx.round(lv), ctx)


def estimate(params: EgfParams, n: int, formula, ctx: PrecisionContext = PrecisionContext()) -> AsympEstimate:
    """Dispatch on ``formula``; HAYMAN uses the converged saddle and exact n!."""
    formula = Formula(formula)
    if formula is Formula.FULL:
        return asymp_full(params, n, ctx)
    if formula is Formula.SIMPLIFIED:
        return asymp_simplified(params, n, ctx)
    # tighter than saddle_solve's default so the estimate is stable in digits
    sp = saddle_solve(params, n, tol=mpf(10) ** -(ctx.digits + ctx.guard // 2), ctx=ctx)
    return hayman_estimate(params, n, sp.z, ctx, factorial_mode="exact")


def check_formula(params: EgfParams, formula) -> None:
    """Raise FullFormulaRequired early if ``formula`` is invalid for the regime."""
    if Formula(formula) is Formula.SIMPLIFIED:
        correction_constant(params)
