"""Regenerate the JSON datasets under src/unimodal/data.

Run from the repository root: ``python3 tools/make_datasets.py``.
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from unimodal.datasets import DATA_DIR, cantor_dataset  # noqa: E402
from unimodal.serialize import dump_text  # noqa: E402

STATED = "stated"
CONSTRUCTED = "constructed"


def xs(*idx):
    return [f"x{i}" for i in idx]


def ones(idx, big=None, big_value="1"):
    out = {f"x{i}": "1" for i in idx}
    for i in big or ():
        out[f"x{i}"] = big_value
    return dict(sorted(out.items(), key=lambda kv: int(kv[0][1:])))


def polyline(text):
    return [p.split() for p in text.split(";")]


def mesh(points, faces):
    verts = {f"x{i + 1}": p for i, p in enumerate(polyline(points))}
    return {"vertices": verts,
            "faces": [xs(*map(int, f.split())) for f in faces.split(";")]}


def surd(coef, radicand):
    return {"coef": coef, "radicand": radicand, "index": 2}


def circle_8pt():
    angles = [f"{j}/8" if j else "0" for j in range(8)]
    f = {"domain": "circle", "angles": angles,
         "values": ["4", "3", "7/2", "3", "4", "1", "3", "1"]}
    u1 = dict(f, values=["3", "3", "7/2", "3", "3", "0", "0", "0"])
    u2 = dict(f, values=["1", "0", "0", "0", "1", "1", "3", "1"])
    return {
        "name": "circle_8pt",
        "carrier": "circle",
        "description": "Eight values on the circle; the slice pattern of M_a^+ "
                       "and an explicit two-summand decomposition.",
        "functions": {"f": f, "u1": u1, "u2": u2},
        "target": "f",
        "claims": [
            {"id": "ucat", "kind": "ucat", "function": "f", "p": "1",
             "relation": "=", "value": 2, "provenance": STATED},
            {"id": "m_a_plus", "kind": "m_a_plus", "function": "f",
             "angles": angles, "expect": [3, 2, 2, 3, 3, 2, 2, 3],
             "provenance": STATED},
            {"id": "u_unimodal", "kind": "unimodal", "functions": ["u1", "u2"],
             "expect": True, "provenance": STATED},
            {"id": "sum", "kind": "combination", "rule": "sum",
             "summands": ["u1", "u2"], "target": "f", "provenance": STATED},
            {"id": "sweep_decomposition", "kind": "circle_decomposition",
             "function": "f", "length": 2, "provenance": CONSTRUCTED},
            {"id": "ucat_p", "kind": "ucat_sequence", "function": "f",
             "p_list": ["1/2", "1", "2"], "expect": [2, 2, 3],
             "provenance": CONSTRUCTED},
        ],
    }


G1_COORDS = {"a1": ["2", "0"], "a2": ["1", "0"], "b1": ["0", "2"],
             "b2": ["0", "1"], "c": ["0", "0"], "d1": ["-1", "0"],
             "d2": ["-2", "0"], "d3": ["-2", "-1"], "e1": ["0", "-1"],
             "e2": ["0", "-2"], "e3": ["-1", "-2"], "q": ["-2", "-2"]}


def _graph(coords, edges):
    return {"vertices": [{"id": k, "x": x, "y": y} for k, (x, y) in coords.items()],
            "edges": [e.split("-") for e in edges.split()]}


def _graph_claims(sqrt_note):
    return [
        {"id": "u_unimodal", "kind": "unimodal", "functions": ["u1", "u2"],
         "expect": True, "provenance": STATED},
        {"id": "f_not_unimodal", "kind": "unimodal", "functions": ["f"],
         "expect": False, "provenance": STATED},
        {"id": "sum", "kind": "combination", "rule": "sum",
         "summands": ["u1", "u2"], "target": "f", "provenance": STATED},
        {"id": "v_unimodal", "kind": "unimodal", "functions": ["v1", "v2", "v3"],
         "expect": True, "provenance": sqrt_note},
        {"id": "sqrt_sum", "kind": "combination", "rule": "sum",
         "summands": ["v1", "v2", "v3"], "target": "sqrt_f",
         "provenance": sqrt_note},
        {"id": "ucat_upper", "kind": "ucat_bound", "function": "f", "p": "1",
         "relation": "<=", "value": 2, "via": ["u_unimodal", "sum"],
         "provenance": STATED},
        {"id": "ucat_lower", "kind": "ucat_bound", "function": "f", "p": "1",
         "relation": ">=", "value": 2, "via": ["f_not_unimodal"],
         "provenance": STATED},
        {"id": "half_upper", "kind": "ucat_bound", "function": "f", "p": "1/2",
         "relation": "<=", "value": 3, "via": ["v_unimodal", "sqrt_sum"],
         "provenance": sqrt_note},
        {"id": "half_lower", "kind": "external", "function": "f", "p": "1/2",
         "text": "ucat^(1/2)(f) >= 3: no decomposition of sqrt(f) into two "
                 "unimodal summands", "provenance": STATED},
    ]


def graph_example_1():
    g = _graph(G1_COORDS, "a1-a2 a2-c b1-b2 b2-c c-d1 c-e1 d1-d2 d2-d3 d3-q "
                          "e1-e2 e2-e3 e3-q")
    fn = {
        "u1": {"a1": "5", "a2": "1", "c": "1", "d1": "1", "d2": "1", "d3": "1",
               "q": "1"},
        "u2": {"b1": "5", "b2": "1", "c": "1", "e1": "1", "e2": "1", "e3": "1",
               "q": "1"},
        "f": {"a1": "5", "b1": "5", "c": "2", "q": "2", "a2": "1", "b2": "1",
              "d1": "1", "d2": "1", "d3": "1", "e1": "1", "e2": "1", "e3": "1"},
        "v1": {"a1": surd("1", "5"), "a2": "1", "c": surd("1/2", "2")},
        "v2": {"b1": surd("1", "5"), "b2": "1", "c": surd("1/2", "2")},
        "v3": {"q": surd("1", "2"), "d1": "1", "d2": "1", "d3": "1",
               "e1": "1", "e2": "1", "e3": "1"},
    }
    funcs = {k: {"graph": "G", "values": v} for k, v in fn.items()}
    funcs["sqrt_f"] = {"graph": "G", "values": fn["f"], "exponent": "1/2"}
    claims = _graph_claims(STATED)
    claims.append({"id": "pv", "kind": "path_value", "function": "f",
                   "from": "a1", "to": "b1", "expect": "1",
                   "provenance": CONSTRUCTED})
    return {
        "name": "graph_example_1",
        "carrier": "graph",
        "description": "Two heavy ends joined through a valence-4 vertex on a "
                       "cycle; the square root needs three summands.",
        "graphs": {"G": g},
        "functions": funcs,
        "target": "f",
        "claims": claims,
    }


def graph_example_1_variant():
    coords = dict(G1_COORDS)
    del coords["c"]
    coords["c1"] = ["1/2", "0"]
    coords["c2"] = ["0", "1/2"]
    g = _graph(coords, "a1-a2 a2-c1 c1-c2 b1-b2 b2-c2 c1-d1 c2-e1 d1-d2 d2-d3 "
                       "d3-q e1-e2 e2-e3 e3-q")
    half = surd("1/2", "2")
    fn = {
        "u1": {"a1": "5", "a2": "1", "c1": "1", "c2": "1", "d1": "1", "d2": "1",
               "d3": "1", "q": "1"},
        "u2": {"b1": "5", "b2": "1", "c1": "1", "c2": "1", "e1": "1", "e2": "1",
               "e3": "1", "q": "1"},
        "f": {"a1": "5", "b1": "5", "c1": "2", "c2": "2", "q": "2", "a2": "1",
              "b2": "1", "d1": "1", "d2": "1", "d3": "1", "e1": "1", "e2": "1",
              "e3": "1"},
        "v1": {"a1": surd("1", "5"), "a2": "1", "c1": half, "c2": half},
        "v2": {"b1": surd("1", "5"), "b2": "1", "c1": half, "c2": half},
        "v3": {"q": surd("1", "2"), "d1": "1", "d2": "1", "d3": "1",
               "e1": "1", "e2": "1", "e3": "1"},
    }
    funcs = {k: {"graph": "G", "values": v} for k, v in fn.items()}
    funcs["sqrt_f"] = {"graph": "G", "values": fn["f"], "exponent": "1/2"}
    return {
        "name": "graph_example_1_variant",
        "carrier": "graph",
        "description": "The valence-4 vertex split into two valence-3 vertices "
                       "c1, c2. Coordinates are illustrative only.",
        "graphs": {"G": g},
        "functions": funcs,
        "target": "f",
        "claims": [c if c["kind"] == "external" else dict(c, provenance=CONSTRUCTED)
                   for c in _graph_claims(CONSTRUCTED)],
    }


def graph_example_2():
    coords = {"a": ["0", "2"], "b": ["0", "0"], "c": ["0", "-2"],
              "d": ["-3", "0"], "e": ["3", "0"]}
    g = _graph(coords, "a-b a-c a-d a-e b-c b-d b-e c-d c-e")
    sub_coords = dict(coords)
    chains = {"a-b": ["i", "j", "k"], "b-c": ["p", "q", "r"],
              "c-a": ["x", "y", "z"]}
    sub_edges = ["a-d", "a-e", "b-d", "b-e", "c-d", "c-e"]
    for ends, names in chains.items():
        s, t = ends.split("-")
        (x0, y0), (x1, y1) = coords[s], coords[t]
        for n, name in enumerate(names, 1):
            fx = _lerp(x0, x1, n, 4)
            fy = _lerp(y0, y1, n, 4)
            sub_coords[name] = [fx, fy]
        path = [s, *names, t]
        sub_edges.extend(f"{u}-{v}" for u, v in zip(path, path[1:]))
    g_sub = _graph(sub_coords, " ".join(sub_edges))
    fvals = {"d": "3", "e": "3", "a": "1", "b": "1", "c": "1"}
    sub_f = dict(fvals, **{n: "1" for names in chains.values() for n in names})
    u1 = {"d": "3", **{n: "1" for n in "a b c j k q r y z".split()}}
    u2 = {"e": "3", **{n: "1" for n in "a b c i j p q x y".split()}}
    funcs = {
        "f": {"graph": "G", "values": fvals},
        "f_sub": {"graph": "G_sub", "values": sub_f},
        "u1": {"graph": "G_sub", "values": u1},
        "u2": {"graph": "G_sub", "values": u2},
        "s1": {"graph": "G", "values": {"d": "3", "a": "1"}},
        "s2": {"graph": "G", "values": {"e": "3", "b": "1"}},
        "s3": {"graph": "G", "values": {"c": "1"}},
    }
    return {
        "name": "graph_example_2",
        "carrier": "graph",
        "description": "Bipyramid 1-skeleton with two heavy apexes. Coordinates "
                       "are illustrative only.",
        "graphs": {"G": g, "G_sub": g_sub},
        "functions": funcs,
        "target": "f",
        "claims": [
            {"id": "f_not_unimodal", "kind": "unimodal", "functions": ["f"],
             "expect": False, "provenance": STATED},
            {"id": "refines", "kind": "subdivision", "fine": "f_sub",
             "coarse": "f",
             "chains": [[e.split("-")[0], *names, e.split("-")[1]]
                        for e, names in chains.items()],
             "provenance": CONSTRUCTED},
            {"id": "u_unimodal", "kind": "unimodal", "functions": ["u1", "u2"],
             "expect": True, "provenance": STATED},
            {"id": "max", "kind": "combination", "rule": "max",
             "summands": ["u1", "u2"], "target": "f_sub", "provenance": STATED},
            {"id": "s_unimodal", "kind": "unimodal",
             "functions": ["s1", "s2", "s3"], "expect": True,
             "provenance": CONSTRUCTED},
            {"id": "sum3", "kind": "combination", "rule": "sum",
             "summands": ["s1", "s2", "s3"], "target": "f",
             "provenance": CONSTRUCTED},
            {"id": "pv_bound_de", "kind": "lower_bound_check", "function": "f",
             "points": ["d", "e"], "expect": True, "provenance": CONSTRUCTED},
            {"id": "pv_bound_d", "kind": "lower_bound_check", "function": "f",
             "points": ["d"], "expect": False, "provenance": CONSTRUCTED},
            {"id": "inf_upper", "kind": "ucat_bound", "function": "f", "p": "inf",
             "relation": "<=", "value": 2, "via": ["refines", "u_unimodal", "max"],
             "provenance": STATED},
            {"id": "inf_lower", "kind": "ucat_bound", "function": "f", "p": "inf",
             "relation": ">=", "value": 2, "via": ["f_not_unimodal"],
             "provenance": STATED},
            {"id": "ucat_upper", "kind": "ucat_bound", "function": "f", "p": "1",
             "relation": "<=", "value": 3, "via": ["s_unimodal", "sum3"],
             "provenance": CONSTRUCTED},
            {"id": "ucat_lower", "kind": "external", "function": "f", "p": "1",
             "text": "ucat(f) >= 3: no sum of two unimodal functions equals f",
             "provenance": STATED},
        ],
    }


def _lerp(a, b, n, k):
    from fractions import Fraction
    v = Fraction(a) + (Fraction(b) - Fraction(a)) * Fraction(n, k)
    return str(v)


PLANE1_POINTS = (
    "-4 0;-4 2;-4 4;-3 1;-3 2;-3 3;-2 -2;-2 0;-2 1;-2 2;-2 3;-2 4;-1 -1;-1 1;"
    "-1 2;-1 3;0 -4;0 -2;0 2;0 4;1 -3;1 -2;1 -1;1 1;1 2;1 11/5;1 3;2 -4;2 -3;"
    "2 -2;2 -1;2 0;2 1;2 2;2 4;11/5 1;3 -3;3 -2;3 -1;3 1;4 -4;4 -2;4 0;4 2")
PLANE1_FACES = (
    "1 4 5 2;1 8 9 4;2 6 3;2 5 6;3 6 12;4 10 5;4 9 10;5 10 11 6;6 11 12;"
    "7 13 14 8;7 18 23 13;8 14 9;9 14 15 10;10 16 11;10 15 16;11 16 20 12;"
    "13 23 24 14;14 19 15;14 24 19;15 19 20 16;17 21 22 18;17 28 29 21;"
    "18 22 23;19 27 20;19 24 25;19 25 26;19 26 34 27;20 27 35;21 30 22;"
    "21 29 30;22 30 31 23;23 32 24;23 31 32;24 33 34 25;24 32 33;25 34 26;"
    "27 34 35;28 37 29;28 41 37;29 37 38 30;30 39 31;30 38 39;31 39 43 32;"
    "32 36 33;32 40 34 36;32 43 40;33 36 34;34 40 44;37 42 38;37 41 42;"
    "38 42 43 39;40 43 44")


def _q_boundary_points():
    """Named points on the boundary of {F >= 1}; mirrors swap coordinates."""
    pts = {
        "a1": ["11/5", "1/5"], "a2": ["19/5", "1/5"], "a3": ["19/5", "9/5"],
        "a4": ["11/5", "9/5"], "a5": ["11/5", "1"],
        "c1": ["2", "1"], "c2": ["3/2", "1/2"], "c3": ["3/2", "-1/2"],
        "c4": ["2", "-1"], "c5": ["1", "-2"], "c6": ["1/2", "-3/2"],
        "c7": ["-3/2", "-3/2"],
        "d1": ["2", "-3"], "d2": ["5/2", "-7/2"], "d3": ["7/2", "-7/2"],
        "d4": ["7/2", "-5/2"], "d5": ["3", "-2"],
        "z1": ["3", "-1"], "z2": ["1", "-3"],
    }
    mirror = {f"a{i}": f"b{i}" for i in range(1, 6)}
    mirror.update({f"c{i}": f"c{14 - i}" for i in range(1, 7)})
    mirror.update({f"d{i}": f"e{i}" for i in range(1, 6)})
    mirror.update({"z1": "w1", "z2": "w2"})
    for k, m in mirror.items():
        x, y = pts[k]
        pts[m] = [y, x]
    return pts


def plane_example_1():
    funcs = {
        "u1": {"mesh": "base",
               "values": ones([4, 5, 6, 9, 13, 14, 23, 24, 31, 33, 36, 37, 38, 39],
                              [40], "5")},
        "u2": {"mesh": "base",
               "values": ones([6, 11, 13, 14, 15, 16, 21, 22, 23, 24, 25, 26, 29, 37],
                              [27], "5")},
        "F": {"mesh": "base",
              "values": dict(sorted(
                  {**ones([4, 5, 9, 11, 15, 16, 21, 22, 25, 26, 29, 31, 33, 36,
                           38, 39]),
                   **{f"x{i}": "2" for i in (6, 13, 14, 23, 24, 37)},
                   **{f"x{i}": "5" for i in (27, 40)}}.items(),
                  key=lambda kv: int(kv[0][1:])))},
        "f": {"of": "F", "exponent": "1/2"},
        "sqrt_u1": {"of": "u1", "exponent": "1/2"},
        "sqrt_u2": {"of": "u2", "exponent": "1/2"},
    }
    boundary = _q_boundary_points()
    return {
        "name": "plane_example_1",
        "carrier": "plane",
        "description": "Compactly supported plane function F = u1 + u2 whose "
                       "square root needs three unimodal summands.",
        "meshes": {"base": mesh(PLANE1_POINTS, PLANE1_FACES)},
        "functions": funcs,
        "target": "f",
        "claims": [
            {"id": "u_unimodal", "kind": "unimodal", "functions": ["u1", "u2"],
             "expect": True, "provenance": STATED},
            {"id": "F_not_unimodal", "kind": "unimodal", "functions": ["F"],
             "expect": False, "provenance": STATED},
            {"id": "sum", "kind": "combination", "rule": "sum",
             "summands": ["u1", "u2"], "target": "F", "provenance": STATED},
            {"id": "sqrt_unimodal", "kind": "unimodal",
             "functions": ["sqrt_u1", "sqrt_u2"], "expect": True,
             "provenance": STATED},
            {"id": "l2", "kind": "combination", "rule": "p_power", "p": "2",
             "summands": ["sqrt_u1", "sqrt_u2"], "target": "f",
             "provenance": STATED},
            {"id": "values", "kind": "probe", "function": "f",
             "points": [
                 {"label": "z0", "at": ["2", "-2"], "expect": "0"},
                 {"label": "w0", "at": ["-2", "2"], "expect": "0"},
                 {"label": "a", "at": ["3", "1"], "expect": surd("1", "5")},
                 {"label": "b", "at": ["1", "3"], "expect": surd("1", "5")},
             ], "provenance": STATED},
            {"id": "boundary_values", "kind": "probe", "function": "f",
             "points": [{"label": k, "at": v, "expect": "1"}
                        for k, v in boundary.items()],
             "provenance": STATED},
            {"id": "Q", "kind": "superlevel", "function": "F", "level": "1",
             "expect": {"components": 1, "euler_characteristic": -1,
                        "area": "931/50"},
             "provenance": CONSTRUCTED},
            {"id": "square_upper", "kind": "ucat_bound", "function": "f", "p": "2",
             "relation": "<=", "value": 2, "via": ["sqrt_unimodal", "l2"],
             "provenance": STATED},
            {"id": "square_lower", "kind": "ucat_bound", "function": "f", "p": "2",
             "relation": ">=", "value": 2, "via": ["F_not_unimodal"],
             "provenance": STATED},
            {"id": "ucat_lower", "kind": "external", "function": "f", "p": "1",
             "text": "ucat(f) >= 3: f is not a sum of two unimodal functions",
             "provenance": STATED},
        ],
    }


PLANE2_POINTS = (
    "-7 -7;-7 7;-6 -6;-6 6;-5 -5;-5 -1;-5 1;-5 5;-4 0;-10/3 0;-3 -5;-3 -1;"
    "-3 1;-3 5;-2 -4;-2 0;-2 4;-1 -5;-1 -3;-1 -1;-1 1;-1 3;-1 5;0 -6;0 -4;"
    "0 0;0 4;0 6;1 -7;1 -5;1 -3;1 -1;1 1;1 3;1 5;1 7;2 -4;2 0;2 4;3 -5;3 -1;"
    "3 1;3 5;10/3 0;4 0;5 -1;5 1")
PLANE2_FACES = (
    "1 3 4 2;1 29 24 3;2 4 28 36;3 5 8 4;3 24 18 5;4 8 23 28;6 9 7;6 12 9;"
    "7 9 13;9 12 10 13;10 12 16;10 16 13;11 15 16 12;11 18 25 15;13 16 17 14;"
    "14 17 27 23;15 19 20 16;15 25 19;16 21 22 17;16 20 26;16 26 21;17 22 27;"
    "18 24 25;19 25 26 20;21 26 27 22;23 27 28;24 29 30 25;25 31 32 26;"
    "25 30 40 37;25 37 31;26 33 34 27;26 32 38;26 38 33;27 35 36 28;27 34 39;"
    "27 39 43 35;31 37 38 32;33 38 39 34;37 40 41 38;38 41 44;38 42 43 39;"
    "38 44 42;41 45 42 44;41 46 45;42 45 47;45 46 47")


def _pyr(lo, hi):
    return {"pyramid": {"lo": lo, "hi": hi, "height": "1"}}


def plane_example_2():
    max_cuts = [xs(15, 18), xs(17, 23), xs(30, 37), xs(35, 39)]
    sum_cuts = [xs(1, 4), xs(4, 5), xs(15, 18), xs(20, 25), xs(21, 27),
                xs(25, 32), xs(27, 33), xs(35, 39)]
    funcs = {
        "f": {"mesh": "base",
              "values": ones([3, 4, 10, 15, 16, 17, 24, 25, 26, 27, 28, 37, 38,
                              39, 44], [9, 45], "3")},
        "v1": {"mesh": "base", "add_edges": max_cuts,
               "values": ones([3, 4, 10, 15, 16, 17, 24, 25, 26, 27, 28], [9], "3")},
        "v2": {"mesh": "base", "add_edges": max_cuts,
               "values": ones([3, 4, 24, 25, 26, 27, 28, 37, 38, 39, 44], [45], "3")},
        "phi_R1": _pyr(["-1", "2"], ["1", "3"]),
        "phi_R2": _pyr(["-1", "-2"], ["1", "-1"]),
        "phi_R3": _pyr(["-7", "-2"], ["-5", "-1"]),
        "phi_R4": _pyr(["-1", "1"], ["1", "2"]),
        "phi_R5": _pyr(["-1", "-3"], ["1", "-2"]),
        "phi_R6": _pyr(["-7", "1"], ["-5", "2"]),
        "u1": {"combine": [["1", "v1"], ["-1", "phi_R1"], ["-1", "phi_R2"],
                           ["-1", "phi_R3"]]},
        "u2": {"combine": [["1", "v2"], ["-1", "phi_R4"], ["-1", "phi_R5"],
                           ["-1", "phi_R6"]]},
        "s1": {"mesh": "base", "add_edges": sum_cuts,
               "values": ones([4, 10, 15, 16, 17, 27, 28], [9], "3")},
        "s2": {"mesh": "base", "add_edges": sum_cuts,
               "values": ones([3, 24, 25, 37, 38, 39, 44], [45], "3")},
        "s3": {"mesh": "base", "add_edges": sum_cuts, "values": ones([26])},
    }
    return {
        "name": "plane_example_2",
        "carrier": "plane",
        "description": "Compactly supported plane function with two peaks on a "
                       "thickened odd cycle; max of two unimodal functions, "
                       "sum of three.",
        "meshes": {"base": mesh(PLANE2_POINTS, PLANE2_FACES)},
        "functions": funcs,
        "target": "f",
        "claims": [
            {"id": "f_not_unimodal", "kind": "unimodal", "functions": ["f"],
             "expect": False, "provenance": STATED},
            {"id": "v_max", "kind": "combination", "rule": "max",
             "summands": ["v1", "v2"], "target": "f", "provenance": STATED},
            {"id": "v_not_unimodal", "kind": "unimodal", "functions": ["v1", "v2"],
             "expect": False, "provenance": STATED},
            {"id": "u_unimodal", "kind": "unimodal", "functions": ["u1", "u2"],
             "expect": True, "provenance": STATED},
            {"id": "max", "kind": "combination", "rule": "max",
             "summands": ["u1", "u2"], "target": "f", "provenance": STATED},
            {"id": "s_unimodal", "kind": "unimodal",
             "functions": ["s1", "s2", "s3"], "expect": True,
             "provenance": STATED},
            {"id": "sum3", "kind": "combination", "rule": "sum",
             "summands": ["s1", "s2", "s3"], "target": "f", "provenance": STATED},
            {"id": "Q", "kind": "superlevel", "function": "f", "level": "1",
             "expect": {"components": 1, "euler_characteristic": -4,
                        "area": "32/9"},
             "provenance": CONSTRUCTED},
            {"id": "inf_upper", "kind": "ucat_bound", "function": "f", "p": "inf",
             "relation": "<=", "value": 2, "via": ["u_unimodal", "max"],
             "provenance": STATED},
            {"id": "inf_lower", "kind": "ucat_bound", "function": "f", "p": "inf",
             "relation": ">=", "value": 2, "via": ["f_not_unimodal"],
             "provenance": STATED},
            {"id": "ucat_upper", "kind": "ucat_bound", "function": "f", "p": "1",
             "relation": "<=", "value": 3, "via": ["s_unimodal", "sum3"],
             "provenance": STATED},
            {"id": "ucat_lower", "kind": "external", "function": "f", "p": "1",
             "text": "ucat(f) >= 3: f is not a sum of two unimodal functions",
             "provenance": STATED},
        ],
    }


BUILDERS = [circle_8pt, graph_example_1, graph_example_1_variant,
            graph_example_2, plane_example_1, plane_example_2,
            lambda: cantor_dataset(2)]


def main():
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    for build in BUILDERS:
        raw = build()
        path = DATA_DIR / f"{raw['name']}.json"
        path.write_text(dump_text(raw), encoding="utf-8")
        print(path.relative_to(ROOT))


if __name__ == "__main__":
    main()
