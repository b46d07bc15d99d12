from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from univoque.interval import RealInterval, working_precision

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=1000)


@given(fractions, fractions)
def test_arithmetic_encloses_exact(a, b):
    x, y = RealInterval.exact(a), RealInterval.exact(b)
    assert (x + y).contains(a + b)
    assert (x - y).contains(a - b)
    assert (x * y).contains(a * b)
    if b != 0:
        assert (x / y).contains(a / b)


@given(fractions, fractions)
def test_three_valued_order(a, b):
    x, y = RealInterval.exact(a), RealInterval.exact(b)
    if a != b:
        assert x.lt(y) is (a < b)
        assert x.gt(y) is (a > b)


def test_overlap_is_undecided():
    x = RealInterval.from_endpoints(1, 2)
    assert x.lt(Fraction(3, 2)) is None
    assert x.le(3) is True
    assert x.gt(0) is True


def test_from_endpoints():
    x = RealInterval.from_endpoints(Fraction(1, 3), Fraction(1, 2))
    assert x.lo_fraction() <= Fraction(1, 3)
    assert x.hi_fraction() >= Fraction(1, 2)
    with pytest.raises(ValueError):
        RealInterval.from_endpoints(2, 1)


def test_decimal_rounding():
    assert str(RealInterval.exact(Fraction(146557, 100000)).decimal(5)) == "1.46557"
    wide = RealInterval.from_endpoints(Fraction(1, 1), Fraction(11, 10))
    assert wide.decimal(5) is None
    assert str(RealInterval.exact(2).decimal(5)) == "2.00000"


def test_working_precision_restores():
    from flint import ctx
    before = ctx.prec
    with working_precision(500):
        assert ctx.prec == 500
    assert ctx.prec == before


def test_log_and_pow():
    x = RealInterval.exact(2, 128)
    assert (x ** 10).contains(1024)
    assert abs(float(x.log()) - 0.6931471805599453) < 1e-15
