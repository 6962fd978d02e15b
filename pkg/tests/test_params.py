from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from egfasym.errors import NonPositiveM, OrderViolation, ValidationError, ZeroR
from egfasym.params import Regime, classify_regime, to_rational, validate


def test_paper_families_validate():
    p = validate(1, 2, 1, -1, 0)
    assert (p.m, p.b, p.d, p.r, p.s) == (1, 2, 1, -1, 0)
    q = validate("1/3", 3, 1, 1, "-4/3")
    assert q.m == Fraction(1, 3) and q.s == Fraction(-4, 3)
    assert q.prefactor_exponent == 0


@pytest.mark.parametrize(
    "args, exc",
    [
        ((1, 1, 1, 1, 0), OrderViolation),
        ((1, 2, 3, 1, 0), OrderViolation),
        ((1, "3/2", "1/2", 1, 0), OrderViolation),
        ((0, 2, 1, 1, 0), NonPositiveM),
        ((-1, 2, 1, 1, 0), NonPositiveM),
        ((1, 2, 1, 0, 0), ZeroR),
    ],
)
def test_validate_rejects(args, exc):
    with pytest.raises(exc):
        validate(*args)


@pytest.mark.parametrize(
    "text, expected",
    [("-1.5", Fraction(-3, 2)), ("7/4", Fraction(7, 4)), (" 3 ", Fraction(3)), (0.1, Fraction(1, 10)), (-2, Fraction(-2))],
)
def test_to_rational(text, expected):
    assert to_rational(text) == expected


@pytest.mark.parametrize("bad", ["abc", "1/0", "inf", "nan", float("nan"), True, None])
def test_to_rational_rejects(bad):
    with pytest.raises(ValidationError):
        to_rational(bad)


@pytest.mark.parametrize(
    "b, d, regime",
    [(2, 1, Regime.BOUNDARY), (3, 1, Regime.SUPER), (3, 2, Regime.FULL_ONLY), ("5/2", "5/4", Regime.BOUNDARY)],
)
def test_classify_regime(b, d, regime):
    assert classify_regime(validate(1, b, d, 1, 0)) is regime


rationals = st.fractions(min_value=Fraction(1, 50), max_value=50, max_denominator=50)


@given(d=st.fractions(min_value=1, max_value=20, max_denominator=30), excess=rationals, scale=rationals)
def test_regime_scale_invariant(d, excess, scale):
    b = d + excess
    base = classify_regime(validate(1, b, d, 1))
    if d * scale >= 1:
        assert classify_regime(validate(1, b * scale, d * scale, 1)) is base


@given(m=rationals, d=st.fractions(min_value=1, max_value=10, max_denominator=10), excess=rationals,
       r=rationals, s=st.fractions(max_denominator=20, min_value=-10, max_value=10))
def test_validate_idempotent(m, d, excess, r, s):
    p = validate(m, d + excess, d, -r, s)
    assert validate(p.m, p.b, p.d, p.r, p.s) == p


def test_non_integer_exponents_flagged():
    assert validate(1, "5/2", 1, 1).outside_worked_examples
    assert not validate(1, 2, 1, 1).outside_worked_examples
