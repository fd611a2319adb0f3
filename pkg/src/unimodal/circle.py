"""Unimodal category of PL functions on the circle, parametrized by [0, 1)."""

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Optional

from . import exact
from .errors import HasZeros, NegativeValue, NonMonotoneBreakpoints
from .line import (CLOSED_INTERVAL, PLFunction, evaluate, extend_hat,
                   is_unimodal_line, make_pl)
from .sweep import (decompose_interval, normalize_last_two, sweep,
                    ucat_interval)


@dataclass(frozen=True, eq=False)
class CirclePL:
    """Values at increasing angles in [0, 1); linear in between, wrapping."""

    angles: tuple
    values: tuple
    exponent: Fraction = Fraction(1)

    @cached_property
    def levels(self):
        if self.exponent == 1:
            return self.values
        return tuple(exact.power(v, self.exponent) for v in self.values)

    def __repr__(self):
        pts = ", ".join(f"({t}, {v})" for t, v in zip(self.angles, self.values))
        tail = "" if self.exponent == 1 else f", exponent={self.exponent}"
        return f"CirclePL([{pts}]{tail})"


class CircleUcat(NamedTuple):
    n: int
    slice_point: Optional[Fraction]
    m_a_plus: Optional[int]
    zero_cut: Optional[Fraction]


def make_circle(angles, values, exponent=1):
    ts = tuple(exact.to_fraction(t) for t in angles)
    vs = tuple(v if isinstance(v, exact.Surd) else exact.to_fraction(v)
               for v in values)
    if len(ts) != len(vs) or not ts:
        raise ValueError("angles and values must have equal nonzero length")
    if ts[0] < 0 or ts[-1] >= 1:
        raise NonMonotoneBreakpoints("angles must lie in [0, 1)")
    for a, b in zip(ts, ts[1:]):
        if not a < b:
            raise NonMonotoneBreakpoints(f"angles not increasing at {a}, {b}")
    for v in vs:
        if v < 0:
            raise NegativeValue(f"negative value {v}")
    return CirclePL(ts, vs, exact.to_exponent(exponent))


def power(f, p):
    p = exact.to_exponent(p)
    if p == 1:
        return f
    return CirclePL(f.angles, f.values, f.exponent * p)


def _frac(t):
    return t - (t.numerator // t.denominator)


def evaluate_circle(f, t):
    t = _frac(exact.to_fraction(t))
    ts, ls = f.angles, f.levels
    n = len(ts)
    if n == 1:
        return ls[0]
    for i in range(n):
        a = ts[i]
        b = ts[i + 1] if i + 1 < n else ts[0] + 1
        tt = t if t >= a else t + 1
        if a <= tt <= b:
            if tt == a:
                return ls[i]
            s = (tt - a) / (b - a)
            return ls[i] + (ls[(i + 1) % n] - ls[i]) * s
    raise AssertionError("angle not located")


def slice_at(f, a):
    """Cut the circle at angle ``a``: a function on [0, 1] with equal ends."""
    a = _frac(exact.to_fraction(a))
    knots = sorted(_frac(t - a) for t in f.angles)
    knots = [k for k in knots if k != 0]
    xs = [Fraction(0)] + knots + [Fraction(1)]
    if a in f.angles:
        base = {_frac(t - a): v for t, v in zip(f.angles, f.values)}
        vs = [base[Fraction(0)]] + [base[k] for k in knots] + [base[Fraction(0)]]
        return PLFunction(tuple(xs), tuple(vs), CLOSED_INTERVAL, f.exponent)
    vs = [evaluate_circle(f, a + x) for x in xs]
    return PLFunction(tuple(xs), tuple(vs), CLOSED_INTERVAL, Fraction(1))


def rotate(f, theta):
    theta = exact.to_fraction(theta)
    pairs = sorted((_frac(t + theta), v) for t, v in zip(f.angles, f.values))
    return CirclePL(tuple(t for t, _ in pairs), tuple(v for _, v in pairs),
                    f.exponent)


def reflect(f):
    """``t -> -t``."""
    pairs = sorted((_frac(-t), v) for t, v in zip(f.angles, f.values))
    return CirclePL(tuple(t for t, _ in pairs), tuple(v for _, v in pairs),
                    f.exponent)


def m_a_plus(f, a):
    """Sweep points of the hat extension of the slice at ``a`` that lie
    strictly before 1."""
    if any(v == 0 for v in f.levels):
        raise HasZeros("m_a_plus needs a function without zeros")
    hat = extend_hat(slice_at(f, a))
    return len(sweep(hat, stop_index=hat.breakpoints.index(Fraction(1))))


def ucat_circle_detail(f, p=1):
    g = power(f, p)
    zeros = [t for t, v in zip(g.angles, g.levels) if v == 0]
    if zeros:
        z = zeros[0]
        return CircleUcat(ucat_interval(slice_at(g, z)).n, None, None, z)
    best = None
    for a in g.angles:
        m = m_a_plus(g, a)
        if best is None or m < best[1]:
            best = (a, m)
    return CircleUcat(max(2, best[1]), best[0], best[1], None)


def ucat_circle(f, p=1):
    """``max(2, min_a M_a^+)`` over breakpoints, or the line answer after
    cutting at the first zero."""
    return ucat_circle_detail(f, p).n


def is_unimodal_circle(f):
    """Has a zero and a single cyclic maximal plateau."""
    ls = list(f.levels)
    if 0 not in ls:
        return False
    z = ls.index(0)
    seq = ls[z:] + ls[:z] + [ls[z]]
    return is_unimodal_line(make_pl(range(len(seq)), seq))


def _to_circle(u, a):
    """A function on [0, 1] with equal ends, wrapped back onto the circle."""
    pairs = sorted((_frac(a + x), v)
                   for x, v in zip(u.breakpoints, u.levels) if x < 1)
    return CirclePL(tuple(t for t, _ in pairs), tuple(v for _, v in pairs))


def _pl(xs, vs):
    return PLFunction(tuple(xs), tuple(vs), CLOSED_INTERVAL, Fraction(1))


def _two_from_slice(fa, d):
    u1, u2 = d.summands
    x1, x2 = d.mode_points
    f0 = evaluate(fa, 0)
    base = sorted(set(u1.breakpoints) | set(u2.breakpoints) | set(fa.breakpoints))
    if x1 > 0:
        eps = min(x1, min(x for x in base if x > 0))
        grid = sorted(set(base) | {eps})

        def v(x):
            return max(Fraction(0), (1 - x / eps) * f0)
        w1 = [evaluate(u1, x) - v(x) for x in grid]
    elif x2 < 1:
        eps = min(1 - x2, 1 - max(x for x in base if x < 1))
        grid = sorted(set(base) | {1 - eps})

        def w(x):
            return max(Fraction(0), (x - 1 + eps) / eps * f0)
        w1 = [evaluate(u1, x) + w(x) for x in grid]
    else:
        diff = [(x, evaluate(u1, x) - evaluate(u2, x)) for x in base]
        x0 = None
        for (a, da), (b, db) in zip(diff, diff[1:]):
            if da == 0:
                x0 = a
                break
            if da > 0 > db:
                x0 = a + da / (da - db) * (b - a)
                break
        if x0 is None:
            return None
        grid = sorted(set(base) | {x0})
        w1 = [2 * evaluate(u2, x) if x <= x0 else 2 * evaluate(u1, x)
              for x in grid]
    w2 = [evaluate(fa, x) - y for x, y in zip(grid, w1)]
    return _pl(grid, w1), _pl(grid, w2)


@dataclass(frozen=True)
class CircleDecomposition:
    summands: tuple
    slice_point: Fraction


def verify_circle_decomposition(parts, f):
    if not all(is_unimodal_circle(u) for u in parts):
        return False
    angles = set(f.angles)
    for u in parts:
        angles.update(u.angles)
    return all(sum((evaluate_circle(u, t) for u in parts), Fraction(0))
               == evaluate_circle(f, t) for t in angles)


def _two_summand_pair(f, a, d):
    fa = slice_at(f, a)
    pair = _two_from_slice(fa, normalize_last_two(d))
    if pair is None:
        return None
    return tuple(_to_circle(u, a) for u in pair)


def _glued(f, a, d):
    """Glue the first summand to a rising last summand across the cut."""
    d = normalize_last_two(d)
    first, *middle, last = d.summands
    grid = sorted(set(first.breakpoints) | set(last.breakpoints))
    glued = _pl(grid, [evaluate(first, x) + evaluate(last, x) for x in grid])
    return tuple(_to_circle(u, a) for u in [glued] + middle)


def decompose_circle(f):
    """Explicit minimal unimodal decomposition of a zero-free circle function.

    Cuts at breakpoints in order of increasing ``M_a^+``.  With two sweep
    summands the mass near the cut is redistributed; when the last sweep
    summand rises to the right end it is glued to the first one across the
    cut.  Returns None when no breakpoint gives a verified decomposition of
    the optimal length.
    """
    if f.exponent != 1 or not all(exact.is_exact_rational(v) for v in f.levels):
        return None
    if any(v == 0 for v in f.levels):
        return None
    target = ucat_circle(f)
    if len(set(f.levels)) == 1:
        c = f.levels[0]
        half = Fraction(1, 2)
        parts = (CirclePL((Fraction(0), half), (c, Fraction(0))),
                 CirclePL((Fraction(0), half), (Fraction(0), c)))
        return CircleDecomposition(parts, Fraction(0))
    order = sorted(f.angles, key=lambda a: m_a_plus(f, a))
    for a in order:
        fa = slice_at(f, a)
        d = decompose_interval(fa)
        k = len(d.summands)
        parts = None
        if k == 2:
            parts = _two_summand_pair(f, a, d)
        elif k - 1 == target and ucat_interval(fa).last_increasing:
            parts = _glued(f, a, d)
        if parts is None or len(parts) != target:
            continue
        if all(v >= 0 for u in parts for v in u.levels) \
                and verify_circle_decomposition(parts, f):
            return CircleDecomposition(parts, a)
    return None


def random_circle(rng, max_points=8, positive=True):
    k = rng.randint(1, max_points)
    cuts = sorted(rng.sample(range(1, 64), k - 1)) if k > 1 else []
    angles = [Fraction(0)] + [Fraction(c, 64) for c in cuts]
    low = 1 if positive else 0
    values = [Fraction(rng.randint(2 * low, 12), 2) for _ in angles]
    return make_circle(angles, values)


def monotonicity_scan_circle(trials, p_list, seed=0):
    """Random zero-free circle functions; ucat must not decrease in p."""
    ps = sorted(exact.to_exponent(p) for p in p_list)
    rng = random.Random(seed)
    violations = []
    for trial in range(trials):
        f = random_circle(rng)
        seq = [ucat_circle(f, p) for p in ps]
        if any(a > b for a, b in zip(seq, seq[1:])):
            violations.append({"trial": trial,
                               "angles": [str(t) for t in f.angles],
                               "values": [str(v) for v in f.values],
                               "ucat": dict(zip(map(str, ps), seq))})
    return {"kind": "circle", "trials": trials,
            "p_list": [str(p) for p in ps],
            "violations": len(violations), "counterexamples": violations}
