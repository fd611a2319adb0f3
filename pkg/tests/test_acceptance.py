"""End-to-end criteria, one PASS/FAIL line each (shown in the terminal
summary)."""

import random
import time
from fractions import Fraction

from unimodal.circle import m_a_plus, ucat_circle
from unimodal.datasets import build, cantor_function, verify
from unimodal.exact import power
from unimodal.graph import make_tree, min_tree_cover, tree_monotonicity_scan
from unimodal.line import Interval, variation
from unimodal.plane import evaluate_plane, point_probe
from unimodal.scans import monotonicity_scan_line, oracle_scan
from unimodal.sweep import sweep_points, ucat_line
from unimodal.updown import updown_scan

F = Fraction
LINES = []


def report(number, ok, seconds, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({seconds:.2f} s) {detail}"
    LINES.append(line)
    print(line)
    return ok


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_criterion_1_circle_pattern():
    f = build("circle_8pt").target_function
    a = [F(j, 8) for j in range(9)]

    def expected(t):
        low = a[1] <= t <= a[2] or a[5] <= t <= a[6]
        return 2 if low else 3

    def run():
        pts = [F(j, 32) for j in range(32)]
        wrong = [t for t in pts if m_a_plus(f, t) != expected(t)]
        return ucat_circle(f), wrong, len(pts)
    (n, wrong, count), dt = timed(run)
    ok = n == 2 and not wrong and dt < 1
    assert report(1, ok, dt, f"ucat={n}, {count} angles, mismatches={wrong}")


def test_criterion_2_cantor_truncation():
    lines, ok, slowest = [], True, 0.0
    for n in range(1, 7):
        def run():
            f = cantor_function(n)
            return (sweep_points(f), ucat_line(f),
                    variation(f, "negative", Interval.open(0, 1)))
        (pts, u, drop), dt = timed(run)
        partial = sum((F(2 ** (k - 1), 6 * 3 ** (k - 1)) for k in range(1, n + 1)), F(0))
        good = pts == [0, 1] and u == 2 and drop == partial and dt < 1
        ok = ok and good
        slowest = max(slowest, dt)
        lines.append(f"depth {n}: sweep={[str(x) for x in pts]} ucat={u} "
                     f"V-={drop} (partial sum {partial})")
    report(2, ok, slowest, "; ".join(lines))
    assert ok, "sweep points of the truncations are not [0, 1]"


def test_criterion_3_oracle_equivalence():
    r, dt = timed(lambda: oracle_scan(1000, seed=2024))
    ok = r["violations"] == 0 and dt < 30
    assert report(3, ok, dt, f"1000 functions, {r['violations']} disagreements")


def test_criterion_4_line_monotonicity():
    r, dt = timed(lambda: monotonicity_scan_line(1000, ["1", "3/2", "2", "3"], seed=2024))
    ok = r["violations"] == 0 and dt < 60
    assert report(4, ok, dt, f"1000 functions, p in {r['p_list']}, "
                             f"{r['violations']} violations")


def test_criterion_5_updown_lemma():
    r, dt = timed(lambda: updown_scan(10_000, seed=2024))
    ok = r["violations"] == 0 and dt < 30
    assert report(5, ok, dt, f"10000 sequences, q in {r['q_list']}, "
                             f"{r['violations']} violations")


WANTED = {
    "graph_example_1": ["u_unimodal", "sum", "v_unimodal", "sqrt_sum"],
    "graph_example_2": ["u_unimodal", "max", "s_unimodal", "sum3"],
    "plane_example_1": ["u_unimodal", "sum", "F_not_unimodal"],
    "plane_example_2": ["u_unimodal", "max", "s_unimodal", "sum3", "f_not_unimodal"],
}


def test_criterion_6_upper_bounds():
    def run():
        bad = []
        for name, ids in WANTED.items():
            results = {r.id: r for r in verify(name)}
            for i in ids:
                want = "fail (expected)" if i.endswith("not_unimodal") else "pass"
                if results[i].status != want:
                    bad.append(f"{name}:{i}={results[i].status}")
        return bad
    bad, dt = timed(run)
    ok = not bad and dt < 120
    assert report(6, ok, dt, f"{sum(map(len, WANTED.values()))} claims, failures={bad}")


def outside_ab(p):
    x, y = p

    def in_box(u, v):
        return F(11, 5) <= u <= F(19, 5) and F(1, 5) <= v <= F(9, 5)
    return not in_box(x, y) and not in_box(y, x)


def test_criterion_7_plane_probes():
    ds = build("plane_example_1")
    f = ds.target_function

    def run():
        bad = []
        named = next(c for c in ds.claims if c["id"] == "values")["points"]
        got = point_probe(f, [(q["label"], tuple(F(c) for c in q["at"])) for q in named])
        root5 = power(5, F(1, 2))
        for k, want in (("z0", 0), ("w0", 0), ("a", root5), ("b", root5)):
            if got[k]["value"] != want:
                bad.append(k)
        for k in ("a", "b"):
            if got[k]["base"] != 5 or got[k]["exponent"] != F(1, 2):
                bad.append(k + " storage")
        boundary = next(c for c in ds.claims if c["id"] == "boundary_values")["points"]
        rng = random.Random(7)
        picked = rng.sample(boundary, 20)
        for q in picked:
            if evaluate_plane(f, tuple(F(c) for c in q["at"])) != 1:
                bad.append(q["label"])
        root2 = power(2, F(1, 2))
        outside = 0
        while outside < 50:
            p = (F(rng.randint(-48, 48), 8), F(rng.randint(-48, 48), 8))
            if not outside_ab(p):
                continue
            outside += 1
            if not evaluate_plane(f, p) <= root2:
                bad.append(str(p))
        return bad
    bad, dt = timed(run)
    assert report(7, not bad, dt, f"4 named points, 20 boundary points, "
                                   f"50 points outside A and B, failures={bad}")


def test_criterion_8_trees():
    def run():
        t = make_tree({"l": 5, "m": 2, "r": 5}, [("l", "m", 4), ("m", "r", 4)],
                      check_saddles=False)
        n = min_tree_cover(t)[0]
        return n, tree_monotonicity_scan(200, ["1", "2", "3"], seed=2024)
    (n, r), dt = timed(run)
    ok = n == 2 and r["violations"] == 0 and dt < 60
    assert report(8, ok, dt, f"path tree cover={n}, 200 trees, "
                             f"{r['violations']} violations")


def test_criterion_9_external_labels():
    names = ("plane_example_1", "plane_example_2", "graph_example_1", "graph_example_2")

    def run():
        seen, bad = [], []
        for name in names:
            ds = build(name)
            external = {c["id"] for c in ds.claims if c["kind"] == "external"}
            for r in verify(ds):
                if r.id in external:
                    seen.append(f"{name}:{r.id}")
                    if r.status != "externally proved" or r.checkable:
                        bad.append(f"{name}:{r.id}={r.status}")
        return seen, bad
    (seen, bad), dt = timed(run)
    ok = not bad and {s.split(":")[0] for s in seen} == set(names)
    assert report(9, ok, dt, f"labeled {seen}, problems={bad}")
