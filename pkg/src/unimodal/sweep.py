"""Forced-max intervals and the sweep that yields minimal unimodal
decompositions on the line and on intervals."""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from . import exact
from .errors import EmptyInterval, NotASweepOutput, UnsupportedExponent
from .line import (CLOSED_INTERVAL, NEG_INF, POS_INF, WHOLE_LINE, Interval,
                   PLFunction, evaluate, extend_hat, is_unimodal_line, power,
                   reparametrize, restrict, variation)


@dataclass(frozen=True)
class SweepPoint:
    """A sweep point inside segment ``[t_j, t_{j+1})``, located by its value.

    ``position`` is exact when the levels are rational and a float otherwise.
    """

    segment: int
    value: object
    position: object
    at_breakpoint: bool


@dataclass(frozen=True)
class ForcedMaxCertificate:
    intervals: tuple
    witnesses: tuple
    almost: tuple = ()

    def to_json(self):
        def end(x):
            return str(x) if not isinstance(x, float) else ("-inf" if x < 0 else "inf")
        return [{"interval": [end(a), end(b)],
                 "negative_variation": exact.to_json_scalar(w[0]),
                 "left_value": exact.to_json_scalar(w[1])}
                for (a, b), w in zip(self.intervals, self.witnesses)]


@dataclass(frozen=True)
class UnimodalDecomposition:
    summands: tuple
    rule: str = "sum"
    p: Optional[Fraction] = None
    mode_points: Optional[tuple] = None


class IntervalUcat(NamedTuple):
    n: int
    last_increasing: bool
    plateau: bool
    restricted_count: int


def _segment_point(xs, ls, j, v):
    if v == ls[j]:
        return xs[j]
    a, b = ls[j], ls[j + 1]
    if exact.is_exact_rational(a) and exact.is_exact_rational(b) \
            and exact.is_exact_rational(v):
        return xs[j] + (a - v) / (a - b) * (xs[j + 1] - xs[j])
    s = (float(a) - float(v)) / (float(a) - float(b))
    return float(xs[j]) + s * float(xs[j + 1] - xs[j])


def sweep(f, stop_index=None):
    """Sweep points of a whole-line function.

    Starting from ``x_0 = -inf`` each ``x_i`` is the infimum of the ``x`` for
    which the negative variation over ``(x_{i-1}, x)`` exceeds ``f(x_{i-1})``.
    The walk only adds and compares levels, so it works for irrational levels.
    With ``stop_index`` the sweep stops before the first point at or beyond
    breakpoint ``stop_index``.
    """
    if f.domain != WHOLE_LINE:
        raise ValueError("sweep needs a whole-line function")
    xs, ls = f.breakpoints, f.levels
    k = len(xs) - 1
    out = []
    seg, start, need = 0, ls[0], Fraction(0)
    while True:
        acc = Fraction(0)
        hit = None
        j, cur = seg, start
        while j < k:
            nxt = ls[j + 1]
            if nxt < cur:
                drop = cur - nxt
                if acc + drop > need:
                    hit = (j, cur - (need - acc))
                    break
                acc = acc + drop
            j += 1
            cur = nxt
        if hit is None:
            return out
        j, v = hit
        if stop_index is not None and j >= stop_index:
            return out
        at_bp = v == ls[j]
        out.append(SweepPoint(j, v, _segment_point(xs, ls, j, v), at_bp))
        seg, start, need = j, v, v


def sweep_points(f):
    """Positions ``x_1 < ... < x_n`` of the sweep (``n = ucat(f)``)."""
    return [p.position for p in sweep(f)]


def _left_value(f, lo):
    if isinstance(lo, float) and math.isinf(lo):
        return Fraction(0)
    return evaluate(f, lo)


def is_forced_max(f, J, mode="strict"):
    """Whether the open interval ``J`` is forced-max, with its witness pair.

    ``almost`` asks whether every right extension ``(lo, hi + d)`` inside the
    domain is forced-max; decided from the slope just right of ``hi``.
    """
    if not isinstance(J, Interval):
        J = Interval.open(*J)
    if not J.lo < J.hi:
        raise EmptyInterval(f"({J.lo}, {J.hi})")
    neg = variation(f, "negative", J)
    left = _left_value(f, J.lo)
    witness = (neg, left)
    if neg > left:
        return True, witness
    if mode == "strict" or neg < left:
        return False, witness
    if mode != "almost":
        raise ValueError(f"unknown mode {mode!r}")
    hi = J.hi
    if isinstance(hi, float) or hi >= f.hi:
        return False, witness
    xs, ls = f.breakpoints, f.levels
    if hi < xs[0]:
        return False, witness
    j = max(i for i, x in enumerate(xs) if x <= hi)
    return ls[j + 1] < evaluate(f, hi), witness


def forced_max_certificate(f, points=None):
    """Disjoint forced-max intervals, one per sweep point.

    The interval for ``x_i`` runs from the breakpoint ending the descent at
    ``x_{i-1}`` to the breakpoint ending the descent at ``x_i``.
    """
    points = sweep(f) if points is None else points
    xs = f.breakpoints
    ends = [NEG_INF] + [xs[p.segment + 1] for p in points]
    intervals, witnesses = [], []
    for a, b in zip(ends, ends[1:]):
        ok, w = is_forced_max(f, Interval.open(a, b))
        if not ok:
            raise AssertionError(f"certificate interval ({a}, {b}) not forced-max")
        intervals.append((a, b))
        witnesses.append(w)
    return ForcedMaxCertificate(tuple(intervals), tuple(witnesses))


def oracle_M(f):
    """Maximum number of disjoint forced-max intervals, by enumeration.

    Candidate endpoints are the breakpoints, the midpoints between them and
    +-inf; the largest disjoint family comes from earliest-right-end greedy.
    """
    xs, ls = list(f.breakpoints), list(f.levels)
    pts, vals = [], []
    for i, (x, v) in enumerate(zip(xs, ls)):
        pts.append(x)
        vals.append(v)
        if i + 1 < len(xs):
            pts.append((x + xs[i + 1]) / 2)
            vals.append((v + ls[i + 1]) / 2)
    drops = [Fraction(0)]
    for a, b in zip(vals, vals[1:]):
        drops.append(drops[-1] + (a - b if b < a else 0))
    # index 0 is -inf, index len+1 is +inf
    H = [Fraction(0)] + drops + [drops[-1]]
    V = [Fraction(0)] + vals + [Fraction(0)]
    m = len(H)
    count, left = 0, 0
    while True:
        best = None
        for a in range(left, m):
            for b in range(a + 1, m if best is None else best):
                if H[b] - H[a] > V[a]:
                    best = b
                    break
        if best is None:
            return count
        count += 1
        left = best


def decompose_line(f):
    """Minimal unimodal sum decomposition of a whole-line function.

    With ``g``, ``h`` the cumulative positive and negative variation,
    ``u_i = g(x) - g(x_{i-1})`` on ``[x_{i-1}, x_i]`` and
    ``u_i = h(x_{i+1}) - h(x)`` on ``[x_i, x_{i+1}]``.
    """
    if not f.is_rational:
        raise UnsupportedExponent("explicit decompositions need rational levels")
    pts = [p.position for p in sweep(f)]
    if not pts:
        return UnimodalDecomposition((), "sum", None, ())
    g, h, grid = cumulative_variations(f, pts)
    lo, hi = grid[0], grid[-1]
    marks = [lo] + pts + [hi]
    summands = []
    for i in range(1, len(marks) - 1):
        a, m, b = marks[i - 1], marks[i], marks[i + 1]
        xs = [x for x in grid if a <= x <= b]
        vs = [g[x] - g[a] if x <= m else h[b] - h[x] for x in xs]
        summands.append(PLFunction(tuple(xs), tuple(vs), WHOLE_LINE, Fraction(1)))
    return UnimodalDecomposition(tuple(summands), "sum", None, tuple(pts))


def cumulative_variations(f, extra=()):
    """Cumulative positive/negative variation from the left end, as dicts
    over the breakpoints merged with ``extra``."""
    grid = sorted(set(f.breakpoints).union(extra))
    g, h = {}, {}
    pos = neg = Fraction(0)
    prev = None
    for x in grid:
        v = evaluate(f, x)
        if prev is not None:
            d = v - prev
            if d > 0:
                pos += d
            else:
                neg -= d
        g[x], h[x] = pos, neg
        prev = v
    return g, h, grid


def verify_line_decomposition(d, f):
    """Summands are unimodal and their sum agrees with ``f`` everywhere."""
    from .line import combine, agree_on_refinement
    if not d.summands:
        return all(v == 0 for v in f.levels)
    if not all(is_unimodal_line(u) for u in d.summands):
        return False
    total = combine(list(d.summands), "sum", domain=f.domain)
    return agree_on_refinement(total, f)


def ucat_line(f, p=1):
    """Unimodal category of ``f ** p`` on the line (or on its interval)."""
    if isinstance(p, str) and p.strip().lower() in ("inf", "infinity", "oo"):
        raise UnsupportedExponent("p = infinity is not supported on the line")
    if isinstance(p, float) and math.isinf(p):
        raise UnsupportedExponent("p = infinity is not supported on the line")
    g = power(f, p)
    if g.domain == CLOSED_INTERVAL:
        return ucat_interval(g).n
    return len(sweep(g))


def _hat_index_of_one(hat):
    return hat.breakpoints.index(Fraction(1))


def ucat_interval(f):
    """Unimodal category of an interval function via its hat extension.

    Also reports whether the last summand rises all the way to the right
    end (``restricted_count == n - 1``) and whether it is a flat plateau.
    """
    hat = extend_hat(f)
    pts = sweep(hat)
    n = len(pts)
    one = _hat_index_of_one(hat)
    restricted = sum(1 for p in pts if p.segment < one)
    plateau = n == 1 and len(set(f.levels)) == 1
    rising = n > 0 and restricted == n - 1 and not plateau
    return IntervalUcat(n, rising, plateau, restricted)


def decompose_interval(f):
    """Sweep decomposition of an interval function, on its own domain."""
    hat = extend_hat(f)
    d = decompose_line(hat)
    lo, hi = f.lo, f.hi
    summands, modes = [], []
    for u, m in zip(d.summands, d.mode_points):
        piece = restrict(u, 0, 1)
        summands.append(reparametrize(piece, lo, hi))
        m = min(max(m, Fraction(0)), Fraction(1))
        modes.append(lo + m * (hi - lo))
    return UnimodalDecomposition(tuple(summands), "sum", None, tuple(modes))


def normalize_last_two(d):
    """Rework the last two summands on ``[0, 1]`` so ``u_{n-1}(1) = 0``.

    With ``a`` the mode of ``u_{n-1}``, ``m = u_{n-1}(a)`` and
    ``c = u_{n-1}(1)``, on ``[a, 1]`` set ``u_{n-1}' = m (u_{n-1} - c)/(m - c)``
    and ``u_n' = u_n + c (m - u_{n-1})/(m - c)``.  When ``u_{n-1}`` is flat on
    ``[a, 1]`` (``m = c``) the excess is moved by a linear ramp instead.
    """
    if d.mode_points is None:
        raise NotASweepOutput("decomposition carries no mode points")
    if len(d.summands) < 2:
        return d
    u, w = d.summands[-2], d.summands[-1]
    one = u.hi
    c = evaluate(u, one)
    if c == 0:
        return d
    a = d.mode_points[-2]
    m = evaluate(u, a)
    grid = sorted(set(u.breakpoints) | set(w.breakpoints) | {a})
    nu, nw = [], []
    for x in grid:
        ux, wx = evaluate(u, x), evaluate(w, x)
        if x <= a:
            nu.append(ux)
            nw.append(wx)
            continue
        if m != c:
            new = m * (ux - c) / (m - c)
        else:
            new = ux - c * (x - a) / (one - a)
        nu.append(new)
        nw.append(wx + ux - new)
    u2 = PLFunction(tuple(grid), tuple(nu), u.domain, Fraction(1))
    w2 = PLFunction(tuple(grid), tuple(nw), w.domain, Fraction(1))
    return UnimodalDecomposition(d.summands[:-2] + (u2, w2), d.rule, d.p,
                                 d.mode_points)
