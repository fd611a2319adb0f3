"""Up-down sequences, majorization and the power inequalities behind
monotonicity on the line."""

import random
from dataclasses import dataclass
from fractions import Fraction

from . import exact
from .errors import LengthMismatch, NotSorted, PreconditionViolated
from .line import Interval, make_pl, power
from .sweep import is_forced_max


@dataclass(frozen=True)
class UpDownSeq:
    """``a_0 <= a_1 >= a_2 <= ... >= a_2k``."""

    entries: tuple

    def __post_init__(self):
        a = self.entries
        if len(a) % 2 != 1:
            raise ValueError("an up-down sequence has odd length")
        for x in a:
            if x < 0:
                raise ValueError("entries must be nonnegative")
        for i in range(len(a) - 1):
            ok = a[i] <= a[i + 1] if i % 2 == 0 else a[i] >= a[i + 1]
            if not ok:
                raise ValueError(f"alternation broken at position {i}")

    @property
    def k(self):
        return len(self.entries) // 2


def updown(entries):
    vals = tuple(e if isinstance(e, exact.Surd) else exact.to_fraction(e)
                 for e in entries)
    return UpDownSeq(vals)


def neg_variation_seq(a):
    """Sum of the ``k`` drops ``a_{2i-1} - a_{2i}``."""
    e = a.entries
    return sum((e[2 * i - 1] - e[2 * i] for i in range(1, a.k + 1)), Fraction(0))


def seq_power(a, q):
    q = exact.to_exponent(q)
    if q == 1:
        return a
    return UpDownSeq(tuple(exact.power(x, q) for x in a.entries))


def majorizes(a, b):
    """Prefix sums of ``a`` dominate those of ``b``, with equal totals."""
    if len(a) != len(b):
        raise LengthMismatch(f"lengths {len(a)} and {len(b)} differ")
    for s in (a, b):
        if any(x < y for x, y in zip(s, s[1:])):
            raise NotSorted("sequences must be nonincreasing")
    sa = sb = Fraction(0)
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            return False
    return sa == sb


def karamata_check(a, b, q):
    """For ``a`` majorizing ``b``: ``sum a^q >= sum b^q`` when ``q >= 1``,
    reversed when ``q < 1``.  Decided exactly."""
    a = [exact.to_fraction(x) for x in a]
    b = [exact.to_fraction(x) for x in b]
    if not majorizes(a, b):
        raise PreconditionViolated("a does not majorize b")
    q = exact.to_exponent(q)
    sa = sum((exact.power(x, q) for x in a), Fraction(0))
    sb = sum((exact.power(x, q) for x in b), Fraction(0))
    return sa >= sb if q >= 1 else sa <= sb


def lemma_updown_check(a, q):
    """``V-(a) <= a_0`` implies ``V-(a^q) <= a_0^q`` for ``0 < q < 1``."""
    q = exact.to_exponent(q)
    if not q < 1:
        raise ValueError("q must lie in (0, 1)")
    if neg_variation_seq(a) > a.entries[0]:
        raise PreconditionViolated("negative variation exceeds a_0")
    return neg_variation_seq(seq_power(a, q)) <= exact.power(a.entries[0], q)


def random_updown(rng, max_k=4, denominator=12):
    """Random sequence with ``V-(a) <= a_0``.

    Drops are drawn first and scaled to a share of ``a_0``; about a third
    of the draws are tight, ``V-(a) = a_0``.
    """
    k = rng.randint(0, max_k)
    a0 = Fraction(rng.randint(1, 6 * denominator), denominator)
    raw = [Fraction(rng.randint(1, 20)) for _ in range(k)]
    share = Fraction(1) if rng.random() < 1 / 3 else \
        Fraction(rng.randint(0, denominator), denominator)
    total = sum(raw, Fraction(0))
    drops = [d * a0 * share / total for d in raw] if k else []
    out = [a0]
    for d in drops:
        low = out[-1]
        rise = Fraction(rng.randint(0, 3 * denominator), denominator)
        peak = max(low + rise, d)
        out.append(peak)
        out.append(peak - d)
    return UpDownSeq(tuple(out))


def random_majorizing_pair(rng, n=None, denominator=6):
    """``b`` sorted, ``a`` obtained by Robin Hood transfers run backwards."""
    n = n or rng.randint(1, 6)
    b = sorted((Fraction(rng.randint(0, 10 * denominator), denominator)
                for _ in range(n)), reverse=True)
    a = list(b)
    for _ in range(rng.randint(0, 4)):
        if n < 2:
            break
        i, j = sorted(rng.sample(range(n), 2))
        move = Fraction(rng.randint(0, denominator), denominator) * a[j]
        a[i] += move
        a[j] -= move
    a.sort(reverse=True)
    return a, b


def updown_scan(trials, q_list=(Fraction(1, 3), Fraction(1, 2), Fraction(9, 10)),
                seed=0):
    rng = random.Random(seed)
    qs = [exact.to_exponent(q) for q in q_list]
    bad = []
    for trial in range(trials):
        a = random_updown(rng)
        for q in qs:
            if not lemma_updown_check(a, q):
                bad.append({"trial": trial, "q": str(q),
                            "sequence": [str(x) for x in a.entries]})
    return {"kind": "updown", "trials": trials, "q_list": [str(q) for q in qs],
            "violations": len(bad), "counterexamples": bad}


def karamata_scan(trials, q_list=(Fraction(1, 2), 2, 3), seed=0):
    rng = random.Random(seed)
    qs = [exact.to_exponent(q) for q in q_list]
    bad = []
    for trial in range(trials):
        a, b = random_majorizing_pair(rng)
        for q in qs:
            if not karamata_check(a, b, q):
                bad.append({"trial": trial, "q": str(q),
                            "a": [str(x) for x in a], "b": [str(x) for x in b]})
    return {"kind": "karamata", "trials": trials, "q_list": [str(q) for q in qs],
            "violations": len(bad), "counterexamples": bad}


def forced_max_persists(f, lo, hi, p):
    """A forced-max interval of ``f`` stays forced-max for ``f ** p``,
    ``p > 1``; returns True when the premise fails."""
    J = Interval.open(exact.to_fraction(lo), exact.to_fraction(hi))
    if not is_forced_max(f, J)[0]:
        return True
    return is_forced_max(power(f, p), J)[0]


def random_line_function(rng, max_breakpoints=14, top=8, denominator=2):
    """Random whole-line PL function with small rational values."""
    k = rng.randint(2, max_breakpoints)
    xs = sorted(rng.sample(range(0, 4 * max_breakpoints), k))
    vals = [Fraction(0)]
    vals += [Fraction(rng.randint(0, top * denominator), denominator)
             for _ in range(k - 2)]
    vals.append(Fraction(0))
    return make_pl(xs, vals)
