import mpmath
import pytest
from mpmath import mpf

from egfasym.errors import DerivativeVanishes, NoConvergence, ValidationError
from egfasym.numerics import PrecisionContext
from egfasym.params import validate
from egfasym.saddle import (
    Method,
    hayman_a,
    hayman_b,
    residual,
    saddle_closed_form,
    saddle_main_term,
    saddle_newton_refine,
    saddle_solve,
)

CTX = PrecisionContext(64)


def test_main_term_at_e():
    # n/m = e gives W = 1, so z0 = 1/b
    params = validate(1, 2, 1, 1)
    with mpmath.workdps(70):
        z0 = saddle_main_term(params, mpmath.e, CTX)
        assert abs(z0 - mpf(1) / 2) < mpf(10) ** -60
    params = validate(2, 3, 1, 1)
    with mpmath.workdps(70):
        z0 = saddle_main_term(params, 2 * mpmath.e, CTX)
        assert abs(3 * z0 - 1) < mpf(10) ** -60


def test_main_term_back_substitution(a143405):
    z0 = saddle_main_term(a143405, 100, CTX)
    with mpmath.workdps(70):
        assert abs(2 * z0 * mpmath.exp(2 * z0) - 100) < mpf(10) ** -58


def test_newton_fixed_point(a143405):
    with mpmath.workdps(CTX.working_digits):
        z = mpf(1)
        n = hayman_a(a143405, z)
    z1 = saddle_newton_refine(a143405, n, z, CTX)
    with mpmath.workdps(70):
        assert abs(z1 - 1) < mpf(10) ** -60


def test_newton_improves(a143405):
    z0 = saddle_main_term(a143405, 1000, CTX)
    z1 = saddle_newton_refine(a143405, 1000, z0, CTX)
    assert abs(residual(a143405, 1000, z1, CTX)) < abs(residual(a143405, 1000, z0, CTX))


def test_newton_contraction_a002874():
    params = validate("1/3", 3, 1, 1, "-4/3")
    z0 = saddle_main_term(params, 500, CTX)
    z1 = saddle_newton_refine(params, 500, z0, CTX)
    assert abs(residual(params, 500, z0, CTX)) > 10 * abs(residual(params, 500, z1, CTX))


def test_newton_rejects_nonpositive(a143405):
    with pytest.raises(ValidationError):
        saddle_newton_refine(a143405, 10, 0, CTX)


def test_derivative_vanishes():
    # m=1, b=2, d=1, r=-2: f'(0) = b m + d r = 0
    params = validate(1, 2, 1, -2)
    with pytest.raises(DerivativeVanishes):
        saddle_newton_refine(params, 5, mpf("1e-80"), PrecisionContext(30))


@pytest.mark.parametrize("n", [100, 1000])
def test_closed_form_equals_one_newton_step(family, n):
    _, params = family
    ctx = PrecisionContext(60)
    zc = saddle_closed_form(params, n, ctx)
    z1 = saddle_newton_refine(params, n, saddle_main_term(params, n, ctx), ctx)
    with mpmath.workdps(80):
        assert abs(zc - z1) <= mpf(10) ** -(ctx.digits - 8) * z1


def test_closed_form_correction_vanishes(a143405):
    gaps = []
    for n in (10**3, 10**6, 10**9):
        zc = saddle_closed_form(a143405, n, CTX)
        z0 = saddle_main_term(a143405, n, CTX)
        gaps.append(abs(zc - z0))
    assert gaps[0] > gaps[1] > gaps[2]


def test_closed_form_improves_residual(a143405):
    n = 10**6
    zc = saddle_closed_form(a143405, n, CTX)
    z0 = saddle_main_term(a143405, n, CTX)
    assert abs(residual(a143405, n, zc, CTX)) < abs(residual(a143405, n, z0, CTX))


def test_solve_a143405(a143405):
    sp = saddle_solve(a143405, 1000, tol=mpf(10) ** -30, ctx=CTX)
    assert sp.method is Method.NEWTON_CONVERGED
    assert sp.iterations <= 6
    assert abs(sp.residual) <= mpf(10) ** -30 * 1000


def test_solve_planted_root(a143405):
    with mpmath.workdps(CTX.working_digits):
        n = hayman_a(a143405, mpf(1))
    sp = saddle_solve(a143405, n, ctx=CTX)
    with mpmath.workdps(70):
        assert abs(sp.z - 1) < mpf(10) ** -25


def test_solve_a002872():
    params = validate("1/2", 2, 1, 1, "-3/2")
    sp = saddle_solve(params, 2000, tol=mpf(10) ** -30, ctx=CTX)
    assert abs(sp.residual) <= mpf(10) ** -30 * 2000


def test_solve_no_convergence(a143405):
    with pytest.raises(NoConvergence) as info:
        saddle_solve(a143405, 1000, tol=mpf(10) ** -200, ctx=PrecisionContext(20), max_iter=3)
    assert info.value.residual is not None


@pytest.mark.parametrize("n", [100, 1000, 10000])
def test_saddle_centering_and_variance(family, n):
    _, params = family
    sp = saddle_solve(params, n, ctx=CTX)
    with mpmath.workdps(CTX.working_digits):
        assert abs(hayman_a(params, sp.z) - n) <= mpf(10) ** -(CTX.digits // 2) * n
        assert hayman_b(params, sp.z) > 0
    z0 = saddle_main_term(params, n, CTX)
    assert abs(residual(params, n, saddle_newton_refine(params, n, z0, CTX), CTX)) < abs(
        residual(params, n, z0, CTX)
    )
