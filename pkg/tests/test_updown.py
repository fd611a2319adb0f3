import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unimodal.errors import LengthMismatch, NotSorted, PreconditionViolated
from unimodal.exact import power
from unimodal.updown import (forced_max_persists, karamata_check, karamata_scan,
                             lemma_updown_check, majorizes, neg_variation_seq,
                             random_line_function, random_updown, seq_power,
                             updown, updown_scan)

F = Fraction
HALF = F(1, 2)


def test_neg_variation_examples():
    assert neg_variation_seq(updown([1])) == 0
    assert neg_variation_seq(updown([0, 2, 1])) == 1
    assert neg_variation_seq(updown([1, 3, 0, 2, 1])) == 4


def test_updown_rejects_bad_shapes():
    for bad in ([1, 2], [2, 1, 3], [0, 1, 2], [-1, 0, 0]):
        with pytest.raises(ValueError):
            updown(bad)


def test_seq_power_examples():
    a = updown([1, 3, 0, 2, 1])
    assert seq_power(a, 1) is a
    assert seq_power(updown([0, 4, 1]), HALF).entries == (0, 2, 1)
    assert seq_power(a, 2).entries == (1, 9, 0, 4, 1)


def test_majorizes_examples():
    assert majorizes([2, 0], [1, 1])
    assert not majorizes([1, 1], [2, 0])
    x, y, z = 3, 4, 2
    assert majorizes([y, x - y + z], [max(x, z), min(x, z)])
    assert not majorizes([3, 0], [1, 1])
    with pytest.raises(LengthMismatch):
        majorizes([1], [1, 0])
    with pytest.raises(NotSorted):
        majorizes([0, 2], [1, 1])


def test_karamata_examples():
    assert karamata_check([4, 1], [3, 2], HALF)
    assert karamata_check([4, 1], [3, 2], 1)
    assert karamata_check([2, 0], [1, 1], 2)
    assert karamata_check([1, 1], [1, 1], 2)
    assert karamata_check([1, 1], [1, 1], HALF)
    with pytest.raises(PreconditionViolated):
        karamata_check([1, 1], [2, 0], 2)


def test_lemma_examples():
    assert lemma_updown_check(updown([1, 1, 1]), F(1, 3))
    with pytest.raises(PreconditionViolated):
        lemma_updown_check(updown([4, 9, 0, 4, 3]), HALF)
    a = updown([4, 6, 3, 5, 4])
    assert neg_variation_seq(a) == 4
    assert lemma_updown_check(a, HALF)
    v = neg_variation_seq(seq_power(a, HALF))
    assert abs(float(v) - 0.9530) < 1e-3
    with pytest.raises(ValueError):
        lemma_updown_check(a, 2)


@st.composite
def updown_seqs(draw):
    return random_updown(random.Random(draw(st.integers(0, 10**9))))


@given(updown_seqs(), st.sampled_from([F(1, 3), HALF, F(9, 10)]))
def test_lemma_on_random_sequences(a, q):
    assert neg_variation_seq(a) <= a.entries[0]
    assert lemma_updown_check(a, q)


@given(updown_seqs(), st.sampled_from([2, 3]))
def test_seq_power_keeps_the_pattern(a, q):
    b = seq_power(a, q)
    assert len(b.entries) == len(a.entries)
    assert b.entries[0] == power(a.entries[0], q)


def test_scans_are_clean_and_reproducible():
    r = updown_scan(1500, seed=3)
    assert r["violations"] == 0
    assert r == updown_scan(1500, seed=3)
    k = karamata_scan(800, seed=4)
    assert k["violations"] == 0


def test_forced_max_persists_under_powers():
    rng = random.Random(6)
    checked = 0
    for _ in range(60):
        f = random_line_function(rng, 8)
        xs = f.breakpoints
        for i in range(len(xs)):
            for j in range(i + 1, len(xs)):
                for p in (F(3, 2), 2, 3):
                    assert forced_max_persists(f, xs[i], xs[j], p)
                checked += 1
    assert checked > 100
