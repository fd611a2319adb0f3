import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unimodal.circle import (decompose_circle, evaluate_circle,
                             is_unimodal_circle, m_a_plus, make_circle,
                             monotonicity_scan_circle, random_circle, reflect,
                             rotate, slice_at, ucat_circle,
                             verify_circle_decomposition)
from unimodal.errors import HasZeros
from unimodal.line import Interval, evaluate, extend_hat, variation
from unimodal.sweep import ucat_line

EIGHT = ([Fraction(j, 8) for j in range(8)],
         [4, 3, Fraction(7, 2), 3, 4, 1, 3, 1])


def eight():
    return make_circle(*EIGHT)


@st.composite
def circles(draw, positive=True):
    k = draw(st.integers(1, 7))
    cuts = sorted(draw(st.sets(st.integers(1, 47), min_size=k - 1, max_size=k - 1)))
    angles = [Fraction(0)] + [Fraction(c, 48) for c in cuts]
    lo = 1 if positive else 0
    vals = draw(st.lists(st.integers(lo, 8), min_size=k, max_size=k))
    return make_circle(angles, [Fraction(v) for v in vals])


def restricted_M(f, a):
    """Disjoint forced-max intervals of the hat extension that end by 1,
    by enumeration over breakpoints and midpoints."""
    hat = extend_hat(slice_at(f, a))
    xs = [x for x in hat.breakpoints if x <= 1]
    cands = [None] + sorted(set(xs) | {(p + q) / 2 for p, q in zip(xs, xs[1:])})

    def forced(lo, hi):
        J = Interval.open(Interval().lo if lo is None else lo, hi)
        left = Fraction(0) if lo is None else evaluate(hat, lo)
        return variation(hat, "negative", J) > left

    count, start = 0, 0
    while True:
        best = None
        for i in range(start, len(cands)):
            for j in range(max(i + 1, 1), len(cands) if best is None else best):
                if forced(cands[i], cands[j]):
                    best = j
                    break
        if best is None:
            return count
        count += 1
        start = best


def test_slice_examples():
    s = slice_at(make_circle([0, Fraction(1, 2)], [3, 3]), Fraction(1, 5))
    assert set(s.values) == {3}
    s = slice_at(eight(), 0)
    assert list(s.values) == [4, 3, Fraction(7, 2), 3, 4, 1, 3, 1, 4]
    assert s.breakpoints == tuple(Fraction(j, 8) for j in range(9))


@given(circles(), st.integers(0, 95))
def test_slice_and_reflection_agree(f, k):
    a = Fraction(k, 96)
    s = slice_at(f, a)
    r = slice_at(reflect(f), -a)
    for j in range(25):
        x = Fraction(j, 24)
        assert evaluate(s, x) == evaluate(r, 1 - x)


def test_eight_point_pattern():
    f = eight()
    low = [(Fraction(1, 8), Fraction(2, 8)), (Fraction(5, 8), Fraction(6, 8))]
    for j in range(32):
        a = Fraction(j, 32)
        want = 2 if any(lo <= a <= hi for lo, hi in low) else 3
        assert m_a_plus(f, a) == want, a
    assert ucat_circle(f) == 2
    assert [ucat_circle(f, p) for p in (Fraction(1, 2), 1, 2)] == [2, 2, 3]


def test_constant_and_zero_cases():
    const = make_circle([0], [5])
    assert ucat_circle(const) == 2
    # the sweep of the flat hat never stops before 1
    assert m_a_plus(const, Fraction(1, 3)) == 0
    bump = make_circle([0, Fraction(1, 4), Fraction(1, 2)], [0, 2, 0])
    assert ucat_circle(bump) == 1
    assert is_unimodal_circle(bump)
    with pytest.raises(HasZeros):
        m_a_plus(bump, 0)


def test_stated_decomposition_of_eight():
    f = eight()
    u1 = make_circle(EIGHT[0], [3, 3, Fraction(7, 2), 3, 3, 0, 0, 0])
    u2 = make_circle(EIGHT[0], [1, 0, 0, 0, 1, 1, 3, 1])
    assert verify_circle_decomposition((u1, u2), f)
    d = decompose_circle(f)
    assert len(d.summands) == 2 and verify_circle_decomposition(d.summands, f)


@given(circles())
def test_m_a_plus_matches_enumeration(f):
    for a in f.angles:
        assert m_a_plus(f, a) == restricted_M(f, a)


@given(circles(), st.integers(0, 63))
def test_rotation_invariance(f, k):
    assert ucat_circle(rotate(f, Fraction(k, 64))) == ucat_circle(f)


@given(circles())
def test_reflection_invariance(f):
    mplus = min(m_a_plus(f, a) for a in f.angles)
    mminus = min(m_a_plus(reflect(f), a) for a in reflect(f).angles)
    assert max(2, mplus) == max(2, mminus)


def test_breakpoints_suffice():
    rng = random.Random(11)
    for _ in range(40):
        f = random_circle(rng)
        best = min(m_a_plus(f, a) for a in f.angles)
        for _ in range(50):
            a = Fraction(rng.randrange(1, 997), 997)
            if a not in f.angles:
                assert m_a_plus(f, a) >= best


@given(circles(positive=False))
def test_zero_cut_matches_line(f):
    zeros = [t for t, v in zip(f.angles, f.values) if v == 0]
    if not zeros:
        return
    ucats = set()
    for z in zeros:
        s = slice_at(f, z)
        from unimodal.line import make_pl
        ucats.add(ucat_line(make_pl(s.breakpoints, s.values)))
    assert ucats == {ucat_circle(f)}


@given(circles())
def test_constructed_decompositions_are_minimal(f):
    d = decompose_circle(f)
    assert d is not None
    assert len(d.summands) == ucat_circle(f)
    assert verify_circle_decomposition(d.summands, f)
    angles = sorted(set(f.angles).union(*(u.angles for u in d.summands)))
    for t in angles:
        assert sum((evaluate_circle(u, t) for u in d.summands), Fraction(0)) \
            == evaluate_circle(f, t)


def test_monotonicity_scan():
    r = monotonicity_scan_circle(150, ["1/2", "1", "2"], seed=5)
    assert r["violations"] == 0 and r["trials"] == 150
    single = monotonicity_scan_circle(1, ["1/2", "2"], seed=0)
    assert single["violations"] == 0
