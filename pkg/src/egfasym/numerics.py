"""Arbitrary-precision scalar kernels: principal-branch Lambert W, Stirling's
formula, log-factorial, and the precision policy shared by float code.

Public functions take an explicit :class:`PrecisionContext`, evaluate at
``digits + guard`` decimal digits and round the result to ``digits``.  The
underscored helpers work at whatever precision is current and are what the
other modules call from inside ``ctx.working()``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
from mpmath import mp, mpf

from egfasym.errors import NegativeArgument, NoConvergence, ValidationError

# Beyond this, log_factorial switches from the exact integer to the series.
EXACT_FACTORIAL_LIMIT = 10_000


@dataclass(frozen=True)
class PrecisionContext:
    digits: int = 64
    guard: int = 10

    def __post_init__(self):
        if self.digits < 16:
            raise ValidationError(f"digits must be at least 16, got {self.digits}")
        if self.guard < 0:
            raise ValidationError(f"guard must be nonnegative, got {self.guard}")

    @property
    def working_digits(self) -> int:
        return self.digits + self.guard

    def working(self, extra: int = 0):
        """Context manager setting mpmath to the working precision."""
        return mpmath.workdps(self.working_digits + extra)

    def round(self, x):
        with mpmath.workdps(self.digits):
            return +x

    def with_digits(self, digits: int) -> "PrecisionContext":
        return PrecisionContext(digits, self.guard)


def _halley_w0(x):
    """W0(x) for x >= 0 at the current mpmath precision."""
    if x == 0:
        return mpf(0)
    if x >= mpmath.e:
        lx = mpmath.log(x)
        w = lx - mpmath.log(lx)
    else:
        w = +x
    tol = mpf(2) ** (-mp.prec + 4)
    for _ in range(200):
        ew = mpmath.exp(w)
        f = w * ew - x
        wp1 = w + 1
        step = f / (ew * wp1 - (w + 2) * f / (2 * wp1))
        w -= step
        if abs(step) <= tol * abs(w):
            return w
    raise NoConvergence(f"Lambert W did not converge at x={mpmath.nstr(x, 10)}")


def lambert_w0(x, ctx: PrecisionContext = PrecisionContext()):
    """Principal branch W0(x) for real x >= 0, via Halley iteration."""
    with ctx.working():
        x = mpf(x)
        if x < 0:
            raise NegativeArgument(f"lambert_w0 needs x >= 0, got {x}")
        w = _halley_w0(x)
    return ctx.round(w)


def _stirling(n):
    n = mpf(n)
    return n**n * mpmath.exp(-n) * mpmath.sqrt(2 * mpmath.pi * n)


def stirling_factorial(n: int, ctx: PrecisionContext = PrecisionContext()):
    """n^n * e^-n * sqrt(2*pi*n)."""
    if n < 1:
        raise ValidationError(f"stirling_factorial needs n >= 1, got {n}")
    with ctx.working():
        v = _stirling(n)
    return ctx.round(v)


def _log_stirling(n):
    """ln of Stirling's formula without correction terms."""
    n = mpf(n)
    return n * mpmath.log(n) - n + mpmath.log(2 * mpmath.pi * n) / 2


def _log_factorial(n: int):
    if n <= EXACT_FACTORIAL_LIMIT:
        return mpmath.log(math.factorial(n)) if n > 1 else mpf(0)
    # Stirling series: sum_k B_2k / (2k (2k-1) n^(2k-1)); terms shrink by ~n^-2.
    nf = mpf(n)
    total = _log_stirling(n)
    tol = mpf(2) ** (-mp.prec - 8) * abs(total)
    inv_n2 = 1 / (nf * nf)
    power = 1 / nf
    k = 1
    while True:
        term = mpmath.bernoulli(2 * k) / (2 * k * (2 * k - 1)) * power
        total += term
        if abs(term) < tol:
            return total
        power *= inv_n2
        k += 1


def log_factorial(n: int, ctx: PrecisionContext = PrecisionContext()):
    """ln(n!); exact integer below 10^4, asymptotic series above."""
    if n < 1:
        raise ValidationError(f"log_factorial needs n >= 1, got {n}")
    with ctx.working():
        v = _log_factorial(n)
    return ctx.round(v)


def _rpow(base, exponent):
    """base^exponent for positive real base and rational exponent."""
    return mpmath.exp(mpf(exponent.numerator) / exponent.denominator * mpmath.log(base))


def mpf_rational(q):
    """Fraction -> mpf at the current precision."""
    return mpf(q.numerator) / q.denominator
