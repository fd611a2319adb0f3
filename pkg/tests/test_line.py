from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from unimodal import exact
from unimodal.errors import (EmptyInterval, NegativeValue,
                             NonMonotoneBreakpoints, NonpositiveExponent,
                             OutOfDomain, SupportViolation)
from unimodal.line import (CLOSED_INTERVAL, Interval, evaluate, extend_hat,
                           local_extrema, make_pl, power, variation)

from conftest import W_SHAPE, line_functions, tent


def test_make_pl_validates():
    f = make_pl([0, 1, 2], [0, 1, 0])
    assert f.breakpoints == (0, 1, 2)
    with pytest.raises(SupportViolation):
        make_pl([0, 1], [1, 0])
    with pytest.raises(NonMonotoneBreakpoints):
        make_pl([0, 2, 1], [0, 1, 0])
    with pytest.raises(NegativeValue):
        make_pl([0, 1, 2], [0, -1, 0])


def test_collinear_breakpoints_are_kept():
    f = make_pl([0, 1, 2, 3], [0, 1, 2, 0])
    assert len(f) == 4


def test_lifted_circle_slice_validates():
    xs = [Fraction(j, 8) for j in range(9)]
    vals = [4, 3, Fraction(7, 2), 3, 4, 1, 3, 1, 4]
    f = make_pl(xs, vals, "interval")
    assert f.domain == CLOSED_INTERVAL and evaluate(f, 1) == 4


def test_evaluate():
    f = tent()
    assert evaluate(f, Fraction(1, 2)) == Fraction(1, 2)
    assert evaluate(f, 5) == 0
    g = make_pl([0, 1], [0, 1], "interval")
    with pytest.raises(OutOfDomain):
        evaluate(g, 2)


def test_power_evaluates_to_roots():
    f = make_pl([2, 3, 4], [0, 5, 0])
    assert evaluate(power(f, Fraction(1, 2)), 3) == exact.power(5, Fraction(1, 2))
    assert power(f, 1) is f
    g = power(tent(4), Fraction(1, 2))
    assert evaluate(g, 1) == 2
    with pytest.raises(NonpositiveExponent):
        power(f, 0)


def test_graph_one_values_under_square_root():
    roots = {v: exact.power(v, Fraction(1, 2)) for v in (5, 2, 1)}
    assert roots[1] == 1
    assert roots[2] * roots[2] == 2 and roots[5] * roots[5] == 5


def test_variation_examples():
    f = tent()
    assert variation(f, "negative", Interval.closed(0, 2)) == 1
    assert variation(f, "total") == 2
    with pytest.raises(EmptyInterval):
        variation(f, "total", Interval.open(1, 1))


def test_extend_hat():
    const = make_pl([0, 1], [1, 1], "interval")
    hat = extend_hat(const)
    assert hat.breakpoints == (-1, 0, 1, 2) and hat.values == (0, 1, 1, 0)
    ramp = make_pl([0, 1], [0, 1], "interval")
    h = extend_hat(ramp)
    assert h.breakpoints == (0, 1, 2) and h.values == (0, 1, 0)
    zero_ends = make_pl([3, 4, 5], [0, 2, 0], "interval")
    assert extend_hat(zero_ends).values == (0, 2, 0)


def test_local_extrema():
    (m,) = local_extrema(tent())
    assert m.kind == "max" and m.position == 1
    kinds = [(e.kind, e.position) for e in local_extrema(make_pl(*W_SHAPE))]
    assert kinds == [("max", 1), ("min", 2), ("max", 3)]
    plateau = make_pl([0, 1, 2, 3], [0, 2, 2, 0])
    (p,) = local_extrema(plateau)
    assert p.position == (1, 2)


def _variation_on_grid(f, lo, hi, kind, steps=7):
    # independent: breakpoints plus extra interior points of every segment
    grid = {Fraction(lo), Fraction(hi)}
    xs = [lo] + [x for x in f.breakpoints if lo < x < hi] + [hi]
    for a, b in zip(xs, xs[1:]):
        grid.update(a + (b - a) * Fraction(i, steps) for i in range(steps))
    vals = [evaluate(f, x) for x in sorted(grid)]
    diffs = [b - a for a, b in zip(vals, vals[1:])]
    if kind == "positive":
        return sum((d for d in diffs if d > 0), Fraction(0))
    return sum((-d for d in diffs if d < 0), Fraction(0))


@given(line_functions(), st.data())
def test_variation_identities(f, data):
    a = data.draw(st.integers(-25, 45))
    b = data.draw(st.integers(-25, 45))
    assume(a < b)
    J = Interval.closed(a, b)
    pos, neg = variation(f, "positive", J), variation(f, "negative", J)
    assert pos - neg == evaluate(f, b) - evaluate(f, a)
    assert pos + neg == variation(f, "total", J)
    assert variation(f, "total", Interval.open(a, b)) == pos + neg
    assert pos == _variation_on_grid(f, a, b, "positive")


@given(line_functions(), st.data())
def test_variation_is_additive(f, data):
    m = data.draw(st.sampled_from(f.breakpoints))
    for kind in ("positive", "negative", "total"):
        left = variation(f, kind, Interval.closed(-100, m))
        right = variation(f, kind, Interval.closed(m, 100))
        assert left + right == variation(f, kind)


@given(line_functions())
def test_monotone_piece_has_no_negative_variation(f):
    xs = f.breakpoints
    for a, b in zip(xs, xs[1:]):
        if evaluate(f, a) <= evaluate(f, b):
            J = Interval.closed(a, b)
            assert variation(f, "negative", J) == 0
            assert variation(f, "total", J) == evaluate(f, b) - evaluate(f, a)


@given(line_functions(), st.sampled_from([Fraction(1, 2), 2, 3]),
       st.sampled_from([Fraction(1, 3), 2]))
def test_powers_keep_extrema(f, p, q):
    e1 = local_extrema(power(power(f, p), q))
    e2 = local_extrema(power(f, p * q))
    assert [(e.kind, e.position) for e in e1] == [(e.kind, e.position) for e in e2]
    assert [(e.kind, e.position) for e in e1] == \
        [(e.kind, e.position) for e in local_extrema(f)]
