"""Saddle point of G(z) = exp(m e^(bz) + r e^(dz) + s) for coefficient n.

The saddle solves a(z) = n with a(z) = z G'(z)/G(z), i.e. the root of

    f(z) = (b m e^(bz) + d r e^(dz)) z - n.

Since b > d the first term dominates, giving the start z0 = W(n/m)/b.  One
Newton step from z0 has a closed form (``saddle_closed_form``);
``saddle_solve`` iterates to convergence instead.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import mpmath
from mpmath import mpf

from egfasym.errors import DerivativeVanishes, NoConvergence, ValidationError
from egfasym.numerics import PrecisionContext, _halley_w0, _rpow, mpf_rational
from egfasym.params import EgfParams


class Method(enum.Enum):
    MAIN_TERM = "main-term"
    NEWTON_ONCE = "newton-once"
    NEWTON_CONVERGED = "newton-converged"


@dataclass(frozen=True)
class SaddlePoint:
    n: object
    z0: mpf
    z: mpf
    residual: mpf
    method: Method
    iterations: int = 0


class _Coeffs:
    """Parameters as mpf at the current precision."""

    def __init__(self, params: EgfParams):
        self.m = mpf_rational(params.m)
        self.b = mpf_rational(params.b)
        self.d = mpf_rational(params.d)
        self.r = mpf_rational(params.r)
        self.s = mpf_rational(params.s)


def _f(c, n, z):
    return (c.b * c.m * mpmath.exp(c.b * z) + c.d * c.r * mpmath.exp(c.d * z)) * z - n


def _fprime_terms(c, z):
    return (
        c.b * c.m * mpmath.exp(c.b * z) * (1 + c.b * z),
        c.d * c.r * mpmath.exp(c.d * z) * (1 + c.d * z),
    )


def hayman_a(params: EgfParams, z):
    """a(z) = z G'(z) / G(z) at the current precision."""
    c = _Coeffs(params)
    return _f(c, 0, z)


def hayman_b(params: EgfParams, z):
    """b(z) = z a'(z) at the current precision."""
    c = _Coeffs(params)
    t1, t2 = _fprime_terms(c, z)
    return z * (t1 + t2)


def _check_n(n):
    if n <= 0:
        raise ValidationError(f"n must be positive, got {n}")


def _main_term(params, n):
    return _halley_w0(mpf(n) / mpf_rational(params.m)) / mpf_rational(params.b)


def _newton_step(c, n, z):
    t1, t2 = _fprime_terms(c, z)
    fp = t1 + t2
    scale = abs(t1) + abs(t2)
    if fp == 0 or abs(fp) <= scale * mpf(2) ** (-mpmath.mp.prec + 8):
        raise DerivativeVanishes(f"f'(z) vanishes at z={mpmath.nstr(z, 15)}")
    return _f(c, n, z) / fp


def saddle_main_term(params: EgfParams, n, ctx: PrecisionContext = PrecisionContext()):
    """z0 = W(n/m) / b."""
    _check_n(n)
    with ctx.working():
        z0 = _main_term(params, n)
    return ctx.round(z0)


def saddle_newton_refine(params: EgfParams, n, z_in, ctx: PrecisionContext = PrecisionContext()):
    """One Newton step z_in - f(z_in)/f'(z_in), without damping."""
    _check_n(n)
    with ctx.working():
        z = mpf(z_in)
        if z <= 0:
            raise ValidationError(f"z_in must be positive, got {z}")
        z -= _newton_step(_Coeffs(params), mpf(n), z)
    return ctx.round(z)


def _closed_form(params: EgfParams, n):
    m, b, d, r = (mpf_rational(q) for q in (params.m, params.b, params.d, params.r))
    q = params.d / params.b
    n = mpf(n)
    w = _halley_w0(n / m)
    big = (
        b**2 * _rpow(m, q) * _rpow(n, 1 - q) * (w + 1) * _rpow(w, q - 2) / (d * r)
    )
    return w / b - 1 / (big + b / w + d)


def saddle_closed_form(params: EgfParams, n, ctx: PrecisionContext = PrecisionContext()):
    """The one-step Newton root written out with e^W = (n/m)/W eliminated:

        z = W/b - 1 / (b^2 m^(d/b) n^(1-d/b) (W+1) W^(d/b-2) / (d r) + b/W + d)

    with W = W(n/m).
    """
    _check_n(n)
    with ctx.working():
        z = _closed_form(params, n)
    return ctx.round(z)


def saddle_solve(
    params: EgfParams,
    n,
    tol=None,
    ctx: PrecisionContext = PrecisionContext(),
    max_iter: int = 50,
) -> SaddlePoint:
    """Newton from z0 until |f(z)| <= tol * n.

    ``tol`` defaults to 10^-(digits/2).  A step that would leave (0, inf) is
    halved until the iterate stays positive.
    """
    _check_n(n)
    with ctx.working():
        tol = mpf(10) ** (-(ctx.digits // 2)) if tol is None else mpf(tol)
        if tol <= 0:
            raise ValidationError("tol must be positive")
        c = _Coeffs(params)
        nn = mpf(n)
        z0 = _main_term(params, n)
        z = z0
        res = _f(c, nn, z)
        for it in range(1, max_iter + 1):
            step = _newton_step(c, nn, z)
            while z - step <= 0:
                step /= 2
            z -= step
            res = _f(c, nn, z)
            if abs(res) <= tol * nn:
                return SaddlePoint(
                    n, ctx.round(z0), ctx.round(z), ctx.round(res), Method.NEWTON_CONVERGED, it
                )
    raise NoConvergence(
        f"saddle_solve: no convergence after {max_iter} iterations, "
        f"residual {mpmath.nstr(res, 5)}",
        residual=res,
    )


def residual(params: EgfParams, n, z, ctx: PrecisionContext = PrecisionContext()):
    """f(z) = a(z) - n."""
    with ctx.working():
        v = _f(_Coeffs(params), mpf(n), mpf(z))
    return ctx.round(v)
