"""Randomized property scans, reported as plain dicts ready for JSON."""

import random

from . import exact
from .circle import monotonicity_scan_circle
from .graph import tree_monotonicity_scan
from .sweep import oracle_M, sweep, ucat_line
from .updown import random_line_function, updown_scan


def _describe(f):
    return {"breakpoints": [str(x) for x in f.breakpoints],
            "values": [str(v) for v in f.values]}


def monotonicity_scan_line(trials, p_list, seed=0, max_breakpoints=14):
    """``ucat(f ** p)`` must not decrease as ``p`` grows."""
    ps = sorted(exact.to_exponent(p) for p in p_list)
    rng = random.Random(seed)
    bad = []
    for trial in range(trials):
        f = random_line_function(rng, max_breakpoints)
        seq = [ucat_line(f, p) for p in ps]
        if any(a > b for a, b in zip(seq, seq[1:])):
            bad.append({"trial": trial, **_describe(f),
                        "ucat": dict(zip(map(str, ps), seq))})
    return {"kind": "line", "trials": trials, "p_list": [str(p) for p in ps],
            "violations": len(bad), "counterexamples": bad}


def oracle_scan(trials, seed=0, max_breakpoints=14):
    """Sweep count against the brute-force interval packing."""
    rng = random.Random(seed)
    bad = []
    for trial in range(trials):
        f = random_line_function(rng, max_breakpoints)
        n, m = len(sweep(f)), oracle_M(f)
        if n != m:
            bad.append({"trial": trial, **_describe(f), "sweep": n, "oracle": m})
    return {"kind": "oracle", "trials": trials, "violations": len(bad),
            "counterexamples": bad}


def run_scan(kind, trials, p_list=None, seed=0):
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if kind == "line":
        return monotonicity_scan_line(trials, p_list or ["1", "3/2", "2", "3"], seed)
    if kind == "circle":
        return monotonicity_scan_circle(trials, p_list or ["1/2", "1", "2"], seed)
    if kind == "tree":
        return tree_monotonicity_scan(trials, p_list or ["1", "2", "3"], seed)
    if kind == "updown":
        return updown_scan(trials, p_list or ["1/3", "1/2", "9/10"], seed)
    if kind == "oracle":
        return oracle_scan(trials, seed)
    raise ValueError(f"unknown scan kind {kind!r}")
