import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unimodal import exact
from unimodal.errors import NonpositiveExponent, UndecidedComparison
from unimodal.exact import Surd


def test_parsing_is_exact():
    assert exact.to_fraction("3/4") == Fraction(3, 4)
    assert exact.to_fraction(0.9) == Fraction(9, 10)
    assert exact.to_fraction("1.5") == Fraction(3, 2)
    with pytest.raises(TypeError):
        exact.to_fraction(True)
    with pytest.raises(ValueError):
        exact.to_fraction(math.inf)


def test_exponent_must_be_positive():
    with pytest.raises(NonpositiveExponent):
        exact.to_exponent(0)
    with pytest.raises(NonpositiveExponent):
        exact.to_exponent("-1/2")


def test_perfect_powers_stay_rational():
    assert exact.power(4, Fraction(1, 2)) == 2
    assert isinstance(exact.power(Fraction(9, 4), Fraction(1, 2)), Fraction)
    assert exact.power(Fraction(8, 27), Fraction(2, 3)) == Fraction(4, 9)
    assert exact.power(0, Fraction(1, 3)) == 0


def test_square_roots_are_canonical():
    r5 = exact.power(5, Fraction(1, 2))
    assert isinstance(r5, Surd)
    assert r5 * r5 == 5
    assert exact.power(8, Fraction(1, 2)) == exact.power(2, Fraction(1, 2)) * 2
    half_r2 = exact.power(Fraction(1, 2), Fraction(1, 2))
    assert half_r2 == exact.power(2, Fraction(1, 2)) / 2


def test_surd_ordering():
    r2, r3 = (exact.power(n, Fraction(1, 2)) for n in (2, 3))
    r10 = exact.power(10, Fraction(1, 2))
    # 3.146... < 3.162...
    assert r2 + r3 < r10
    assert r2 < Fraction(3, 2) < r3
    assert r3 - r2 > 0
    assert not (r2 + r3 == r10)


@given(st.integers(1, 400), st.integers(1, 400))
def test_sqrt_order_matches_integer_order(a, b):
    ra, rb = (exact.power(n, Fraction(1, 2)) for n in (a, b))
    assert (ra < rb) == (a < b)
    assert (ra == rb) == (a == b)


@given(st.integers(1, 60), st.integers(1, 60), st.integers(1, 60))
def test_sum_of_roots_against_squared_comparison(a, b, c):
    # sqrt(a) + sqrt(b) <= sqrt(c)  iff  a + b + 2 sqrt(ab) <= c
    lhs = exact.power(a, Fraction(1, 2)) + exact.power(b, Fraction(1, 2))
    rc = exact.power(c, Fraction(1, 2))
    want = c - a - b >= 0 and 4 * a * b <= (c - a - b) ** 2
    assert (lhs <= rc) == want


def _pell(n):
    p, q = 1, 1
    for _ in range(n):
        p, q = p + 2 * q, p + q
    return Fraction(p, q)


def test_precision_cap_is_honoured(monkeypatch):
    r2 = exact.power(2, Fraction(1, 2))
    close = _pell(200)  # |sqrt(2) - p/q| is far below 2**-256
    monkeypatch.setenv("UCAT_PRECISION_BITS", "128")
    with pytest.raises(UndecidedComparison):
        _ = r2 > close
    monkeypatch.setenv("UCAT_PRECISION_BITS", "2048")
    assert (r2 > close) == (close * close < 2)


def test_precision_cap_rejects_tiny_budgets(monkeypatch):
    monkeypatch.setenv("UCAT_PRECISION_BITS", "8")
    with pytest.raises(ValueError):
        exact.precision_cap()
