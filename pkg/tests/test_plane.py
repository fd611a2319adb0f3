import random
from fractions import Fraction

import pytest

from unimodal.datasets import load_raw
from unimodal.errors import (BadTiling, NegativeValue, NonplanarFaceValues,
                             OutOfSupport, RefinementMismatch)
from unimodal.exact import power
from unimodal.plane import (combine_linear, evaluate_plane, is_unimodal_plane,
                            make_plane_pl, overlay, plane_power, point_probe,
                            pyramid, superlevel_area, superlevel_stats,
                            verify_combination_plane)

F = Fraction
ROOT5 = power(5, F(1, 2))


def box_dist(p, box):
    (x0, y0), (x1, y1) = box
    x, y = p
    return max(0, x0 - x, x - x1, y0 - y, y - y1)


def dist(p, boxes):
    return min(box_dist(p, b) for b in boxes)


def pt(x, y):
    return ((F(x), F(y)), (F(x), F(y)))


K1 = [((-1, -1), (1, 1)), ((-3, 1), (3, 1)), ((1, -1), (3, -1)),
      ((-3, 1), (-3, 3)), ((3, -3), (3, -1))]
K2 = [((-4, 0), (4, 0)), ((-6, -6), (-6, 6)), ((0, -6), (0, 6)),
      ((-6, -6), (0, -6)), ((-6, 6), (0, 6)), ((-2, -4), (-2, 4)),
      ((2, -4), (2, 4)), ((-2, -4), (2, -4)), ((-2, 4), (2, 4))]


def u1_formula(p):
    return max(F(0), 1 - dist(p, K1), 5 - 5 * dist(p, [pt(3, 1)]))


def u2_formula(p):
    return u1_formula((p[1], p[0]))


def f2_formula(p):
    return max(F(0), 1 - dist(p, K2), 3 - 3 * dist(p, [pt(-4, 0)]),
               3 - 3 * dist(p, [pt(4, 0)]))


def samples(seed, n, half_width):
    rng = random.Random(seed)
    for _ in range(n):
        yield (F(rng.randint(-8 * half_width, 8 * half_width), 8),
               F(rng.randint(-8 * half_width, 8 * half_width), 8))


def test_first_mesh_matches_distance_formula(plane1):
    fs = plane1.functions
    for p in samples(1, 600, 5):
        a, b = u1_formula(p), u2_formula(p)
        assert evaluate_plane(fs["u1"], p) == a, p
        assert evaluate_plane(fs["u2"], p) == b, p
        assert evaluate_plane(fs["F"], p) == a + b


def test_second_mesh_matches_distance_formula(plane2):
    f = plane2.functions["f"]
    for p in samples(2, 600, 8):
        assert evaluate_plane(f, p) == f2_formula(p), p


def test_square_root_values(plane1):
    f = plane1.functions["f"]
    assert evaluate_plane(f, (3, 1)) == ROOT5
    assert evaluate_plane(f, (0, 0)) == power(2, F(1, 2))
    assert evaluate_plane(f, (10, 10)) == 0


def test_make_plane_examples():
    sq = {"a": (0, 0), "b": (1, 0), "c": (1, 1), "d": (0, 1)}
    z = make_plane_pl(sq, [("a", "b", "c", "d")], {})
    assert len(z.triangles) == 2 and z.support_area == 1
    with pytest.raises(NonplanarFaceValues):
        make_plane_pl(sq, [("a", "b", "c", "d")], {"c": 1}, check_boundary=False)
    with pytest.raises(BadTiling):
        make_plane_pl(sq, [("a", "b", "c", "d")], {"a": 1, "b": 1, "c": 1, "d": 1})
    with pytest.raises(NegativeValue):
        make_plane_pl(sq, [("a", "b", "c", "d")], {"a": -1})
    with pytest.raises(BadTiling):
        make_plane_pl(sq, [("a", "b", "z")], {})
    with pytest.raises(BadTiling):
        make_plane_pl({**sq, "e": (0, 0)}, [("a", "b", "c")], {})
    with pytest.raises(BadTiling):
        make_plane_pl(sq, [("a", "b", "c"), ("a", "b", "c")], {})


def test_pyramid():
    p = pyramid((0, 0), (2, 4), 3)
    assert evaluate_plane(p, (1, 2)) == 3
    assert evaluate_plane(p, (F(1, 2), 2)) == F(3, 2)
    assert evaluate_plane(p, (0, 1)) == 0
    assert is_unimodal_plane(p)
    s = superlevel_stats(p, F(3, 2))
    assert s.contractible and s.area == 2


def test_superlevel_examples(plane1, plane2):
    q1 = superlevel_stats(plane1.functions["F"], 1)
    assert (q1.components, q1.euler_characteristic, q1.area) == (1, -1, F(931, 50))
    assert q1.holes == 2
    assert superlevel_stats(plane1.functions["f"], 1) == q1
    q2 = superlevel_stats(plane2.functions["f"], 1)
    assert (q2.components, q2.euler_characteristic, q2.area) == (1, -4, F(32, 9))
    top = superlevel_stats(plane2.functions["f"], 3)
    assert top.components == 2 and top.area == 0
    assert not superlevel_stats(plane2.functions["f"], 4).nonempty


def test_superlevel_area_decreases_and_holes_nonnegative(plane1):
    F1 = plane1.functions["F"]
    levels = [F(k, 4) for k in range(1, 24)]
    areas = [superlevel_area(F1, c) for c in levels]
    assert all(a >= b for a, b in zip(areas, areas[1:]))
    for c in levels:
        assert superlevel_stats(F1, c, with_area=False).holes >= 0


def test_triangulation_does_not_matter():
    raw = load_raw("plane_example_1")
    mesh = raw["meshes"]["base"]
    vals = {k: F(v) for k, v in raw["functions"]["u1"]["values"].items()}
    verts = {k: tuple(v) for k, v in mesh["vertices"].items()}
    a = make_plane_pl(verts, mesh["faces"], vals)
    b = make_plane_pl(verts, mesh["faces"], vals, start=2)
    for c in (F(1, 2), 1, 2, F(9, 2)):
        assert superlevel_stats(a, c) == superlevel_stats(b, c)
    for p in samples(5, 100, 4):
        assert evaluate_plane(a, p) == evaluate_plane(b, p)


def test_unimodal_examples(plane1, plane2):
    assert is_unimodal_plane(plane1.functions["u1"])
    assert not is_unimodal_plane(plane1.functions["F"])
    assert not is_unimodal_plane(plane2.functions["f"])
    assert not is_unimodal_plane(plane2.functions["f"], "pi0")
    for k in ("u1", "u2", "s1", "s2", "s3"):
        assert is_unimodal_plane(plane2.functions[k])


def test_verify_combination_rules(plane1, plane2):
    f1 = plane1.functions
    assert verify_combination_plane([f1["u1"], f1["u2"]], "sum", f1["F"])
    assert verify_combination_plane([f1["sqrt_u1"], f1["sqrt_u2"]], "p_power",
                                    f1["f"], 2)
    assert not verify_combination_plane([f1["u1"]], "sum", f1["F"])
    f2 = plane2.functions
    assert verify_combination_plane([f2["u1"], f2["u2"]], "max", f2["f"])
    assert verify_combination_plane([f2["s1"], f2["s2"], f2["s3"]], "sum", f2["f"])
    assert not verify_combination_plane([f2["u1"]], "max", f2["f"])
    with pytest.raises(ValueError):
        verify_combination_plane([f1["u1"]], "min", f1["F"])


def test_overlay_and_refinement_mismatch():
    a = pyramid((0, 0), (2, 2))
    b = pyramid((1, 1), (3, 3))
    with pytest.raises(RefinementMismatch):
        verify_combination_plane([b], "sum", a)
    with pytest.raises(RefinementMismatch):
        combine_linear([(1, a), (1, b)])
    cells = overlay([a, pyramid((0, 0), (1, 1))])
    from unimodal.geometry import area
    assert sum((area(c.polygon) for c in cells), F(0)) == 4


def test_combine_linear():
    big = pyramid((0, 0), (4, 4), 4)
    small = pyramid((1, 1), (3, 3), 1)
    d = combine_linear([(1, big), (-1, small)])
    for p in [(2, 2), (1, 1), (F(3, 2), 2), (F(1, 2), 3), (5, 5)]:
        assert evaluate_plane(d, p) == evaluate_plane(big, p) - evaluate_plane(small, p)


def test_point_probe(plane1):
    f = plane1.functions["f"]
    out = point_probe(f, [("a", (3, 1)), ("o", (0, 0))])
    assert out["a"]["base"] == 5 and out["a"]["value"] == ROOT5
    assert out["o"]["base"] == 2 and out["o"]["exponent"] == F(1, 2)
    with pytest.raises(OutOfSupport):
        point_probe(f, [("far", (20, 0))])


def test_power_keeps_superlevel_topology(plane2):
    f = plane2.functions["f"]
    g = plane_power(f, 2)
    for c in (F(1, 2), 1, 2):
        a = superlevel_stats(f, c, with_area=False)
        b = superlevel_stats(g, c * c, with_area=False)
        assert (a.components, a.euler_characteristic) == \
            (b.components, b.euler_characteristic)
