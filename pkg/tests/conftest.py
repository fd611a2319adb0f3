import sys
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from unimodal.datasets import build
from unimodal.line import make_pl

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def line_functions(draw, max_breakpoints=12, top=8):
    """Whole-line PL functions with small half-integer values."""
    k = draw(st.integers(2, max_breakpoints))
    xs = sorted(draw(st.sets(st.integers(-20, 40), min_size=k, max_size=k)))
    inner = draw(st.lists(st.integers(0, 2 * top), min_size=k - 2, max_size=k - 2))
    vals = [Fraction(0)] + [Fraction(v, 2) for v in inner] + [Fraction(0)]
    return make_pl(xs, vals)


@st.composite
def interval_functions(draw, max_breakpoints=8):
    k = draw(st.integers(2, max_breakpoints))
    xs = sorted(draw(st.sets(st.integers(0, 30), min_size=k, max_size=k)))
    vals = draw(st.lists(st.integers(0, 12), min_size=k, max_size=k))
    return make_pl(xs, [Fraction(v, 2) for v in vals], "interval")


def tent(height=1, lo=0, mid=1, hi=2):
    return make_pl([lo, mid, hi], [0, height, 0])


W_SHAPE = ([0, 1, 2, 3, 4], [0, 2, 1, 2, 0])


@pytest.fixture(scope="session")
def plane1():
    return build("plane_example_1")


@pytest.fixture(scope="session")
def plane2():
    return build("plane_example_2")


@pytest.fixture(scope="session")
def graph1():
    return build("graph_example_1")


@pytest.fixture(scope="session")
def graph2():
    return build("graph_example_2")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
