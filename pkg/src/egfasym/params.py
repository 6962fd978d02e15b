"""Parameter validation and regime classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Rational

from egfasym.errors import NonPositiveM, OrderViolation, ValidationError, ZeroR


class Regime(enum.Enum):
    FULL_ONLY = "full-only"  # b/d < 2
    BOUNDARY = "boundary"  # b/d = 2
    SUPER = "super"  # b/d > 2


def to_rational(value) -> Fraction:
    """Convert ints, rationals, decimal strings, "p/q" strings and floats
    to an exact ``Fraction``.

    Floats go through their shortest repr, so ``-1.5`` becomes ``-3/2`` and
    ``0.1`` becomes ``1/10`` rather than the binary expansion.
    """
    if isinstance(value, bool):
        raise ValidationError(f"not a rational parameter: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise ValidationError(f"not a finite parameter: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValidationError(f"not a finite parameter: {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"cannot parse rational {value!r}") from exc
    raise ValidationError(f"unsupported parameter type {type(value).__name__}")


@dataclass(frozen=True)
class EgfParams:
    """Parameters of exp(m*e^(b*x) + r*e^(d*x) + s).

    Construct through :func:`validate`; direct construction skips the checks.
    """

    m: Fraction
    b: Fraction
    d: Fraction
    r: Fraction
    s: Fraction

    @property
    def ratio(self) -> Fraction:
        return self.b / self.d

    @property
    def regime(self) -> Regime:
        return classify_regime(self)

    @property
    def prefactor_exponent(self) -> Fraction:
        """m + r + s, the log of the constant dropped by normalizing a(0) = 1."""
        return self.m + self.r + self.s

    @property
    def outside_worked_examples(self) -> bool:
        return self.b.denominator != 1 or self.d.denominator != 1

    def as_strings(self) -> dict:
        return {k: str(getattr(self, k)) for k in "mbdrs"}

    def __str__(self):
        return "m={m} b={b} d={d} r={r} s={s}".format(**self.as_strings())


def validate(m, b, d, r, s=0) -> EgfParams:
    m, b, d, r, s = (to_rational(v) for v in (m, b, d, r, s))
    if m <= 0:
        raise NonPositiveM(f"m must be positive, got {m}")
    if d < 1:
        raise OrderViolation(f"d must be at least 1, got {d}")
    if b <= d:
        raise OrderViolation(f"b must exceed d, got b={b}, d={d}")
    if r == 0:
        raise ZeroR("r must be nonzero")
    return EgfParams(m, b, d, r, s)


def classify_regime(params: EgfParams) -> Regime:
    ratio = params.b / params.d
    if ratio < 2:
        return Regime.FULL_ONLY
    if ratio == 2:
        return Regime.BOUNDARY
    return Regime.SUPER
