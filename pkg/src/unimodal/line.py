"""Piecewise-linear functions on the real line and on closed intervals."""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import exact
from .errors import (EmptyInterval, NegativeValue, NonMonotoneBreakpoints,
                     OutOfDomain, SupportViolation, UnsupportedExponent)

WHOLE_LINE = "whole_line"
CLOSED_INTERVAL = "closed_interval"

NEG_INF = -math.inf
POS_INF = math.inf


@dataclass(frozen=True, eq=False)
class PLFunction:
    """PL function given by values at strictly increasing breakpoints.

    ``values`` are bases; the function takes ``values[i] ** exponent`` at
    ``breakpoints[i]`` and interpolates those levels linearly in between.
    A whole-line function vanishes outside ``[breakpoints[0], breakpoints[-1]]``.
    """

    breakpoints: tuple
    values: tuple
    domain: str = WHOLE_LINE
    exponent: Fraction = Fraction(1)

    @cached_property
    def levels(self):
        if self.exponent == 1:
            return self.values
        return tuple(exact.power(v, self.exponent) for v in self.values)

    @property
    def lo(self):
        return self.breakpoints[0]

    @property
    def hi(self):
        return self.breakpoints[-1]

    @property
    def is_rational(self):
        return all(exact.is_exact_rational(v) for v in self.levels)

    def __len__(self):
        return len(self.breakpoints)

    def __repr__(self):
        pts = ", ".join(f"({x}, {v})" for x, v in zip(self.breakpoints, self.values))
        tail = "" if self.exponent == 1 else f", exponent={self.exponent}"
        return f"PLFunction([{pts}], {self.domain}{tail})"


@dataclass(frozen=True)
class Interval:
    lo: object = NEG_INF
    hi: object = POS_INF
    lo_closed: bool = False
    hi_closed: bool = False

    @classmethod
    def open(cls, lo, hi):
        return cls(lo, hi, False, False)

    @classmethod
    def closed(cls, lo, hi):
        return cls(lo, hi, True, True)

    def is_empty(self):
        if self.lo > self.hi:
            return True
        return self.lo == self.hi and not (self.lo_closed and self.hi_closed)


def _scalar(v):
    if isinstance(v, exact.Surd):
        return v
    return exact.to_fraction(v)


def make_pl(breakpoints, values, domain=WHOLE_LINE, exponent=1):
    """Validate and build a :class:`PLFunction`.

    Collinear interior breakpoints are kept as given.
    """
    if domain in ("line", WHOLE_LINE):
        domain = WHOLE_LINE
    elif domain in ("interval", CLOSED_INTERVAL):
        domain = CLOSED_INTERVAL
    else:
        raise ValueError(f"unknown domain kind {domain!r}")
    xs = tuple(exact.to_fraction(x) for x in breakpoints)
    vs = tuple(_scalar(v) for v in values)
    if len(xs) != len(vs) or not xs:
        raise ValueError("breakpoints and values must have equal nonzero length")
    for a, b in zip(xs, xs[1:]):
        if not a < b:
            raise NonMonotoneBreakpoints(f"breakpoints not increasing at {a}, {b}")
    for v in vs:
        if v < 0:
            raise NegativeValue(f"negative value {v}")
    p = exact.to_exponent(exponent)
    if p != 1 and not all(exact.is_exact_rational(v) for v in vs):
        raise UnsupportedExponent("exponents apply to rational values only")
    if domain == WHOLE_LINE and (vs[0] != 0 or vs[-1] != 0):
        raise SupportViolation("whole-line function must vanish at both ends")
    return PLFunction(xs, vs, domain, p)


def zero_function():
    return PLFunction((Fraction(0),), (Fraction(0),), WHOLE_LINE, Fraction(1))


def _locate(xs, x):
    """Index j with xs[j] <= x <= xs[j+1] (clamped)."""
    lo, hi = 0, len(xs) - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if xs[mid] <= x:
            lo = mid
        else:
            hi = mid
    return lo


def evaluate(f, x):
    """Exact value of ``f`` at ``x`` (a Fraction or a Surd)."""
    if isinstance(x, float) and math.isinf(x):
        if f.domain == CLOSED_INTERVAL:
            raise OutOfDomain(f"{x} outside [{f.lo}, {f.hi}]")
        return Fraction(0)
    x = exact.to_fraction(x)
    xs, ls = f.breakpoints, f.levels
    if x < xs[0] or x > xs[-1]:
        if f.domain == CLOSED_INTERVAL:
            raise OutOfDomain(f"{x} outside [{f.lo}, {f.hi}]")
        return Fraction(0)
    if len(xs) == 1:
        return ls[0]
    j = _locate(xs, x)
    if x == xs[j]:
        return ls[j]
    if x == xs[j + 1]:
        return ls[j + 1]
    s = (x - xs[j]) / (xs[j + 1] - xs[j])
    return ls[j] + (ls[j + 1] - ls[j]) * s


def _clip(f, J):
    if J.is_empty():
        raise EmptyInterval(f"empty interval {J}")
    lo, hi = J.lo, J.hi
    if f.domain == CLOSED_INTERVAL:
        if hi < f.lo or lo > f.hi:
            raise EmptyInterval(f"{J} misses [{f.lo}, {f.hi}]")
    lo = max(lo, f.lo)
    hi = min(hi, f.hi)
    return lo, hi


def _profile(f, lo, hi):
    """Levels at lo, every breakpoint strictly inside, and hi."""
    if lo >= hi:
        return [evaluate(f, lo)] if lo == hi else []
    pts = [evaluate(f, lo)]
    pts.extend(v for x, v in zip(f.breakpoints, f.levels) if lo < x < hi)
    pts.append(evaluate(f, hi))
    return pts


def variation(f, kind="total", J=None):
    """Total, positive or negative variation of ``f`` over ``J``.

    Open and closed ends give the same answer by continuity.
    """
    J = J or Interval()
    lo, hi = _clip(f, J)
    pos = neg = Fraction(0)
    prof = _profile(f, lo, hi)
    for a, b in zip(prof, prof[1:]):
        d = b - a
        if d > 0:
            pos = pos + d
        elif d < 0:
            neg = neg - d
    if kind == "positive":
        return pos
    if kind == "negative":
        return neg
    if kind == "total":
        return pos + neg
    raise ValueError(f"unknown variation kind {kind!r}")


def power(f, p):
    """``f ** p``: same breakpoints, exponent multiplied by ``p``."""
    p = exact.to_exponent(p)
    if p == 1:
        return f
    if not all(exact.is_exact_rational(v) for v in f.values):
        raise UnsupportedExponent("cannot raise irrational levels to a power")
    return PLFunction(f.breakpoints, f.values, f.domain, f.exponent * p)


def as_levels(f):
    """The same function with its levels stored directly (exponent 1)."""
    if f.exponent == 1:
        return f
    return PLFunction(f.breakpoints, f.levels, f.domain, Fraction(1))


def reparametrize(f, lo, hi):
    """Affinely move the domain of ``f`` onto ``[lo, hi]``."""
    a, b = f.lo, f.hi
    scale = (Fraction(hi) - Fraction(lo)) / (b - a)
    xs = tuple(Fraction(lo) + (x - a) * scale for x in f.breakpoints)
    return PLFunction(xs, f.values, f.domain, f.exponent)


def extend_hat(f):
    """Whole-line extension of an interval function moved onto ``[0, 1]``.

    Rises linearly from 0 at -1 to ``f(0)``, follows ``f`` on ``[0, 1]`` and
    falls back to 0 at 2.  Ramps are dropped when the end value is already 0.
    """
    if f.domain != CLOSED_INTERVAL:
        raise ValueError("extend_hat needs an interval-domain function")
    if len(f.breakpoints) < 2:
        raise ValueError("interval domain must have positive length")
    g = reparametrize(f, 0, 1)
    xs = list(g.breakpoints)
    vs = list(g.values)
    if vs[0] != 0:
        xs.insert(0, Fraction(-1))
        vs.insert(0, Fraction(0))
    if vs[-1] != 0:
        xs.append(Fraction(2))
        vs.append(Fraction(0))
    return PLFunction(tuple(xs), tuple(vs), WHOLE_LINE, g.exponent)


def restrict(f, lo, hi):
    """Closed-interval piece of ``f`` on ``[lo, hi]``."""
    lo, hi = exact.to_fraction(lo), exact.to_fraction(hi)
    if not lo < hi:
        raise EmptyInterval(f"[{lo}, {hi}]")
    g = as_levels(f)
    xs = [lo] + [x for x in g.breakpoints if lo < x < hi] + [hi]
    return PLFunction(tuple(xs), tuple(evaluate(g, x) for x in xs),
                      CLOSED_INTERVAL, Fraction(1))


@dataclass(frozen=True)
class Extremum:
    lo: Fraction
    hi: Fraction
    value: object
    kind: str

    @property
    def position(self):
        return self.lo if self.lo == self.hi else (self.lo, self.hi)


def local_extrema(f):
    """Alternating local extrema, plateaus merged into closed ranges.

    The zero runs at the ends of a whole-line function belong to the
    surrounding zero region and are not reported.
    """
    xs, ls = f.breakpoints, f.levels
    runs = []
    for x, v in zip(xs, ls):
        if runs and runs[-1][2] == v:
            runs[-1][1] = x
        else:
            runs.append([x, x, v])
    whole = f.domain == WHOLE_LINE
    if whole:
        runs = runs[1:-1] if len(runs) > 1 else []
    out = []
    for i, (a, b, v) in enumerate(runs):
        if whole:
            left = runs[i - 1][2] if i > 0 else Fraction(0)
            right = runs[i + 1][2] if i + 1 < len(runs) else Fraction(0)
        else:
            left = runs[i - 1][2] if i > 0 else None
            right = runs[i + 1][2] if i + 1 < len(runs) else None
        if left is None and right is None:
            out.append(Extremum(a, b, v, "max"))
            continue
        below = [n for n in (left, right) if n is not None]
        if all(n < v for n in below):
            out.append(Extremum(a, b, v, "max"))
        elif all(n > v for n in below):
            out.append(Extremum(a, b, v, "min"))
    return out


def is_unimodal_line(f):
    """Exactly one maximal plateau after merging (a flat top is fine)."""
    return sum(1 for e in local_extrema(f) if e.kind == "max") == 1


def refinement(*fs, extra=()):
    pts = set(extra)
    for f in fs:
        pts.update(f.breakpoints)
    return sorted(pts)


def combine(fs, rule="sum", p=None, domain=None):
    """Pointwise sum, max or p-sum of PL functions, as levels on the common
    refinement.  The p-sum raises the levels to ``p`` and sums them; its
    breakpoints are only those of the inputs."""
    if not fs:
        return zero_function()
    xs = refinement(*fs)
    vals = []
    for x in xs:
        col = [evaluate(f, x) for f in fs]
        if rule == "sum":
            vals.append(sum(col, Fraction(0)))
        elif rule == "max":
            vals.append(max(col))
        else:
            raise ValueError(f"unknown rule {rule!r}")
    kind = domain or (WHOLE_LINE if all(f.domain == WHOLE_LINE for f in fs)
                      else CLOSED_INTERVAL)
    return PLFunction(tuple(xs), tuple(vals), kind, Fraction(1))


def agree_on_refinement(f, g, extra=()):
    """True when f and g take equal levels at every breakpoint of either."""
    return all(evaluate(f, x) == evaluate(g, x)
               for x in refinement(f, g, extra=extra))
