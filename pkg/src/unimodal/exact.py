"""Exact scalars.

Values are either :class:`fractions.Fraction` or :class:`Surd`, a finite sum
``sum(c_r * r**(1/k))`` with rational ``c_r`` and distinct ``k``-th-power-free
positive integers ``r``.  Real ``k``-th roots of distinct ``k``-free integers are
linearly independent over the rationals, so a canonical Surd is zero exactly
when it has no terms.  Signs of nonzero Surds are found with a float filter and,
failing that, with integer root brackets refined up to ``precision_cap()`` bits.
"""

import math
import os
from fractions import Fraction
from functools import lru_cache

from sympy import factorint, integer_nthroot

from .errors import NonpositiveExponent, UndecidedComparison

DEFAULT_PRECISION_BITS = 256


def precision_cap():
    """Bit budget for deciding signs, overridable with UCAT_PRECISION_BITS."""
    raw = os.environ.get("UCAT_PRECISION_BITS")
    if not raw:
        return DEFAULT_PRECISION_BITS
    bits = int(raw)
    if bits < 16:
        raise ValueError("UCAT_PRECISION_BITS must be at least 16")
    return bits


def to_fraction(x):
    """Parse an int, Fraction, float or ``"p/q"``/decimal string exactly.

    Floats go through their shortest repr, so ``0.9`` becomes ``9/10``.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"not a finite number: {x!r}")
        return Fraction(repr(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def to_exponent(p):
    p = to_fraction(p)
    if p <= 0:
        raise NonpositiveExponent(f"exponent must be positive, got {p}")
    return p


def format_fraction(q):
    return str(q)


@lru_cache(maxsize=4096)
def _factor(n):
    return tuple(sorted(factorint(n).items())) if n > 1 else ()


def _split_power(factors, k):
    """Split prod p**e into s**k * r with r k-free; returns (s, r)."""
    s = r = 1
    for p, e in factors:
        q, rem = divmod(e, k)
        s *= p ** q
        r *= p ** rem
    return s, r


@lru_cache(maxsize=8192)
def _rational_root(num, den, m, k):
    # (num/den)**(m/k) = (num**m * den**(m*(k-1)))**(1/k) / den**m
    top = [(p, e * m) for p, e in _factor(num)]
    bottom = dict((p, e * m * (k - 1)) for p, e in _factor(den))
    merged = dict(top)
    for p, e in bottom.items():
        merged[p] = merged.get(p, 0) + e
    s, r = _split_power(sorted(merged.items()), k)
    return Fraction(s, den ** m), r


def power(q, p):
    """Exact ``q**p`` for a rational ``q >= 0`` and rational ``p > 0``."""
    q = to_fraction(q)
    p = to_exponent(p)
    if q < 0:
        raise ValueError("power of a negative base")
    if q == 0 or q == 1:
        return q
    if p.denominator == 1:
        return q ** p.numerator
    coef, radicand = _rational_root(q.numerator, q.denominator,
                                    p.numerator, p.denominator)
    if radicand == 1:
        return coef
    return Surd({radicand: coef}, p.denominator)


def _lift(terms, k, target):
    if k == target:
        return terms
    m = target // k
    return {r ** m: c for r, c in terms.items()}


class Surd:
    """Sum of rational multiples of k-th roots of k-free integers."""

    __slots__ = ("terms", "index")

    def __init__(self, terms, index):
        self.terms = {r: c for r, c in terms.items() if c}
        self.index = index

    @staticmethod
    def _simplify(terms, index):
        terms = {r: c for r, c in terms.items() if c}
        if not terms:
            return Fraction(0)
        if len(terms) == 1 and 1 in terms:
            return terms[1]
        return Surd(terms, index)

    def _coerce(self, other):
        if isinstance(other, Surd):
            k = math.lcm(self.index, other.index)
            return (_lift(self.terms, self.index, k),
                    _lift(other.terms, other.index, k), k)
        if isinstance(other, (int, Fraction)):
            return self.terms, {1: Fraction(other)}, self.index
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b, k = c
        out = dict(a)
        for r, v in b.items():
            out[r] = out.get(r, 0) + v
        return Surd._simplify(out, k)

    __radd__ = __add__

    def __neg__(self):
        return Surd({r: -c for r, c in self.terms.items()}, self.index)

    def __pos__(self):
        return self

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Surd._simplify({r: c * other for r, c in self.terms.items()},
                                  self.index)
        if not isinstance(other, Surd):
            return NotImplemented
        a, b, k = self._coerce(other)
        out = {}
        for r1, c1 in a.items():
            for r2, c2 in b.items():
                s, r = _split_power(_factor(r1 * r2), k)
                out[r] = out.get(r, 0) + c1 * c2 * s
        return Surd._simplify(out, k)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __float__(self):
        k = self.index
        return math.fsum(float(c) * (r ** (1.0 / k) if r != 1 else 1.0)
                         for r, c in self.terms.items())

    def sign(self):
        return surd_sign(self)

    def _cmp(self, other):
        d = self - other
        return d.sign() if isinstance(d, Surd) else (d > 0) - (d < 0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Surd)):
            d = self - other
            return d == 0 if not isinstance(d, Surd) else False
        return NotImplemented

    def __hash__(self):
        return hash((self.index, frozenset(self.terms.items())))

    def __lt__(self, other):
        if not isinstance(other, (int, Fraction, Surd)):
            return NotImplemented
        return self._cmp(other) < 0

    def __le__(self, other):
        if not isinstance(other, (int, Fraction, Surd)):
            return NotImplemented
        return self._cmp(other) <= 0

    def __gt__(self, other):
        if not isinstance(other, (int, Fraction, Surd)):
            return NotImplemented
        return self._cmp(other) > 0

    def __ge__(self, other):
        if not isinstance(other, (int, Fraction, Surd)):
            return NotImplemented
        return self._cmp(other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __repr__(self):
        parts = []
        for r, c in sorted(self.terms.items()):
            parts.append(str(c) if r == 1 else f"{c}*{r}^(1/{self.index})")
        return "Surd(" + " + ".join(parts) + ")"

    def to_json(self):
        return {"index": self.index,
                "terms": [[str(c), str(r)] for r, c in sorted(self.terms.items())],
                "approx": repr(float(self))}


def surd_sign(s):
    """Sign of a canonical nonzero Surd, decided exactly."""
    terms = s.terms
    if not terms:
        return 0
    k = s.index
    approx = []
    for r, c in terms.items():
        approx.append(float(c) * (r ** (1.0 / k) if r != 1 else 1.0))
    total = math.fsum(approx)
    slack = 1e-12 * math.fsum(abs(a) for a in approx) + 1e-300
    if abs(total) > slack:
        return 1 if total > 0 else -1
    cap = precision_cap()
    bits = 64
    while True:
        scale = 1 << bits
        lo = hi = Fraction(0)
        for r, c in terms.items():
            if r == 1:
                lo += c
                hi += c
                continue
            root, exact = integer_nthroot(r << (bits * k), k)
            a = Fraction(int(root), scale)
            b = a if exact else Fraction(int(root) + 1, scale)
            if c > 0:
                lo += c * a
                hi += c * b
            else:
                lo += c * b
                hi += c * a
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        if bits >= cap:
            raise UndecidedComparison(
                f"sign of {s!r} undecided at {bits} bits")
        bits = min(bits * 2, cap)


def sign(x):
    if isinstance(x, Surd):
        return x.sign()
    return (x > 0) - (x < 0)


def is_exact_rational(x):
    return isinstance(x, (int, Fraction))


def to_json_scalar(x):
    if isinstance(x, Surd):
        return x.to_json()
    return str(Fraction(x))


def approx(x):
    return float(x)
