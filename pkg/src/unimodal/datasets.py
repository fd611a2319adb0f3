"""Shipped example functions and the claims made about them.

Each dataset is a JSON file under ``data/``.  :func:`build` turns one into
validated function objects; :func:`verify` checks every claim and
:func:`verify_all` does so for the whole collection.
"""

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import exact
from .circle import (CirclePL, decompose_circle, evaluate_circle,
                     is_unimodal_circle, m_a_plus, ucat_circle)
from .errors import UnimodalError, UnknownDataset
from .graph import (GraphPL, edge_point, is_unimodal_graph, lower_bound_check,
                    make_graph_pl, path_value, subdivide, superlevel,
                    verify_combination)
from .line import Interval, PLFunction, is_unimodal_line, make_pl, variation
from .plane import (PlanePL, combine_linear, is_unimodal_plane, make_plane_pl,
                    plane_power, point_probe, pyramid, split_faces,
                    superlevel_stats, verify_combination_plane)
from .serialize import parse_function, parse_graph, parse_scalar, scalar_json
from .sweep import decompose_line, sweep_points, ucat_line

DATA_DIR = Path(__file__).resolve().parent / "data"

NAMES = ("cantor_truncated", "circle_8pt", "graph_example_1",
         "graph_example_1_variant", "graph_example_2", "plane_example_1",
         "plane_example_2")

STATED = "stated"
CONSTRUCTED = "constructed"
EXTERNAL = "externally proved"


@dataclass
class Dataset:
    name: str
    carrier: str
    target: str
    functions: dict
    claims: list
    description: str = ""
    raw: dict = field(default_factory=dict, repr=False)

    @property
    def target_function(self):
        return self.functions[self.target]


@dataclass
class ClaimResult:
    id: str
    label: str
    status: str
    provenance: str
    detail: object = None

    @property
    def checkable(self):
        return self.status != EXTERNAL

    @property
    def ok(self):
        return self.status in ("pass", "fail (expected)", EXTERNAL)

    def to_json(self):
        out = {"id": self.id, "claim": self.label, "status": self.status,
               "provenance": self.provenance}
        if self.detail is not None:
            out["detail"] = self.detail
        return out


# cantor truncation -----------------------------------------------------------

def cantor_intervals(depth):
    ivs = [(Fraction(0), Fraction(1))]
    for _ in range(depth):
        nxt = []
        for a, b in ivs:
            t = (b - a) / 3
            nxt += [(a, a + t), (b - t, b)]
        ivs = nxt
    return ivs


def cantor_function(depth):
    """``max(0, 1/2 - dist(x, C_n))`` for the depth-``n`` Cantor intervals."""
    half = Fraction(1, 2)
    ivs = cantor_intervals(depth)
    xs, vs = [-half], [Fraction(0)]
    for k, (a, b) in enumerate(ivs):
        if k:
            gap_lo = ivs[k - 1][1]
            xs.append((gap_lo + a) / 2)
            vs.append(half - (a - gap_lo) / 2)
        xs += [a, b]
        vs += [half, half]
    xs.append(Fraction(3, 2))
    vs.append(Fraction(0))
    return make_pl(xs, vs)


def cantor_dataset(depth):
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    f = cantor_function(depth)
    drop = Fraction(1, 2) * (1 - Fraction(2, 3) ** depth)
    first = Fraction(1, 3 ** depth)
    last = 1 + Fraction(2, 3) ** depth / 2
    return {
        "name": f"cantor_truncated_{depth}",
        "carrier": "line",
        "description": f"Distance-to-Cantor-set tent at depth {depth}: height "
                       "1/2 on the Cantor intervals, dipping over every gap.",
        "depth": depth,
        "functions": {"f": {"domain": "line",
                            "breakpoints": [str(x) for x in f.breakpoints],
                            "values": [str(v) for v in f.values]}},
        "target": "f",
        "claims": [
            {"id": "ucat", "kind": "ucat", "function": "f", "p": "1",
             "relation": "=", "value": 2, "provenance": STATED},
            {"id": "drop", "kind": "variation", "function": "f",
             "variation": "negative", "interval": ["0", "1"],
             "expect": str(drop), "provenance": CONSTRUCTED},
            {"id": "sweep", "kind": "sweep_points", "function": "f",
             "expect": [str(first), str(last)], "provenance": CONSTRUCTED},
            {"id": "decomposition", "kind": "line_decomposition",
             "function": "f", "length": 2, "provenance": CONSTRUCTED},
            {"id": "limit", "kind": "external", "function": "f", "p": "1",
             "text": "as the depth grows: negative variation over (0, 1) "
                     "tends to 1/2 and the sweep points to 0 and 1",
             "provenance": STATED},
        ],
    }


# loading ----------------------------------------------------------------------

def dataset_path(name):
    return DATA_DIR / f"{name}.json"


def _resolve(name, depth):
    if name == "cantor_truncated" or name.startswith("cantor_truncated_"):
        if name != "cantor_truncated":
            try:
                depth = int(name.rsplit("_", 1)[1])
            except ValueError:
                raise UnknownDataset(f"unknown dataset {name!r}") from None
        return "cantor_truncated", 2 if depth is None else depth
    if name not in NAMES:
        raise UnknownDataset(f"unknown dataset {name!r}; "
                             f"choose from {', '.join(NAMES)}")
    return name, None


def load_raw(name, depth=None):
    """The JSON document of a dataset (generated for cantor depths other
    than the shipped one)."""
    base, depth = _resolve(name, depth)
    if base == "cantor_truncated":
        path = dataset_path(f"cantor_truncated_{depth}")
        if path.exists():
            return json.loads(path.read_text(encoding="utf-8"))
        return cantor_dataset(depth)
    return json.loads(dataset_path(base).read_text(encoding="utf-8"))


def _graphs(raw):
    return {k: parse_graph(v) for k, v in raw.get("graphs", {}).items()}


def _meshes(raw):
    return raw.get("meshes", {})


def _values(d):
    return {k: parse_scalar(v) for k, v in d.items()}


def _build_plane(name, spec, meshes, done, specs):
    if name in done:
        return done[name]
    if "mesh" in spec:
        m = meshes[spec["mesh"]]
        faces = m["faces"]
        if spec.get("add_edges"):
            faces = split_faces(faces, spec["add_edges"])
        g = make_plane_pl({k: tuple(v) for k, v in m["vertices"].items()},
                          faces, _values(spec.get("values", {})),
                          spec.get("exponent", "1"))
    elif "pyramid" in spec:
        p = spec["pyramid"]
        g = pyramid(p["lo"], p["hi"], p.get("height", "1"))
    elif "combine" in spec:
        terms = [(c, _build_plane(n, specs[n], meshes, done, specs))
                 for c, n in spec["combine"]]
        g = combine_linear(terms)
    elif "of" in spec:
        g = plane_power(_build_plane(spec["of"], specs[spec["of"]], meshes,
                                     done, specs), spec["exponent"])
    else:
        raise ValueError(f"cannot build plane function {name!r}")
    done[name] = g
    return g


def _build_functions(raw):
    specs = raw["functions"]
    graphs = _graphs(raw)
    meshes = _meshes(raw)
    out = {}
    for name, spec in specs.items():
        if "domain" in spec:
            out[name] = parse_function(spec)
        elif "graph" in spec:
            out[name] = make_graph_pl(graphs[spec["graph"]], _values(spec["values"]),
                                      spec.get("exponent", "1"))
        else:
            _build_plane(name, spec, meshes, out, specs)
    return out


def build(name, depth=None):
    """Validated functions and claims of a shipped dataset.

    ``cantor_truncated`` takes a ``depth`` (default 2); the name
    ``cantor_truncated_<n>`` works as well.
    """
    raw = load_raw(name, depth)
    return Dataset(raw["name"], raw["carrier"], raw["target"],
                   _build_functions(raw), raw["claims"],
                   raw.get("description", ""), raw)


# checking ---------------------------------------------------------------------

def _is_unimodal(f):
    if isinstance(f, PLFunction):
        return is_unimodal_line(f)
    if isinstance(f, CirclePL):
        return is_unimodal_circle(f)
    if isinstance(f, GraphPL):
        return is_unimodal_graph(f, "contractible")
    if isinstance(f, PlanePL):
        return is_unimodal_plane(f, "contractible")
    raise TypeError(type(f).__name__)


def _combination(summands, rule, target, p):
    t = target
    if isinstance(t, GraphPL):
        if rule == "p_power":
            from .graph import power_graph
            return verify_combination([power_graph(u, p) for u in summands],
                                      "sum", power_graph(t, p))
        return verify_combination(summands, rule, t)
    if isinstance(t, PlanePL):
        return verify_combination_plane(summands, rule, t, p)
    if isinstance(t, CirclePL):
        if rule != "sum":
            raise ValueError("circle combinations are sums")
        angles = set(t.angles)
        for u in summands:
            angles.update(u.angles)
        return all(sum((evaluate_circle(u, a) for u in summands), Fraction(0))
                   == evaluate_circle(t, a) for a in angles)
    if isinstance(t, PLFunction):
        from .line import agree_on_refinement, combine
        return agree_on_refinement(combine(list(summands), rule, p,
                                           domain=t.domain), t)
    raise TypeError(type(t).__name__)


def _pstr(p):
    return "inf" if str(p) == "inf" else str(exact.to_exponent(p))


def _ucat_symbol(c):
    p = _pstr(c["p"])
    if p == "1":
        return "ucat"
    return f"ucat^({p})" if "/" in p else f"ucat^{p}"


def _check(claim, ds, results):
    kind = claim["kind"]
    fn = ds.functions
    if kind == "unimodal":
        got = [_is_unimodal(fn[n]) for n in claim["functions"]]
        expect = claim["expect"]
        names = ", ".join(claim["functions"])
        label = f"{names} unimodal"
        if all(g == expect for g in got):
            return label, "pass" if expect else "fail (expected)", None
        return label, "fail", {"unimodal": dict(zip(claim["functions"], got))}
    if kind == "combination":
        rule = claim["rule"]
        us = claim["summands"]
        if rule == "sum":
            label = f"{' + '.join(us)} = {claim['target']}"
        elif rule == "max":
            label = f"max{{{', '.join(us)}}} = {claim['target']}"
        else:
            p = claim["p"]
            label = f"({' + '.join(f'{u}^{p}' for u in us)})^(1/{p}) = {claim['target']}"
        ok = _combination([fn[u] for u in us], rule, fn[claim["target"]],
                          claim.get("p"))
        return label, "pass" if ok else "fail", None
    if kind == "probe":
        f = fn[claim["function"]]
        bad = {}
        for pt in claim["points"]:
            want = parse_scalar(pt["expect"])
            got = _probe(f, pt["at"])
            if got != want:
                bad[pt["label"]] = {"expected": scalar_json(want),
                                    "got": scalar_json(got)}
        labels = [pt["label"] for pt in claim["points"]]
        shown = ", ".join(labels) if len(labels) <= 6 else f"{len(labels)} points"
        return (f"{claim['function']} at {shown}", "fail" if bad else "pass",
                bad or None)
    if kind == "ucat":
        f = fn[claim["function"]]
        n = _exact_ucat(f, claim["p"])
        label = f"{_ucat_symbol(claim)}({claim['function']}) = {claim['value']}"
        return label, "pass" if n == claim["value"] else "fail", {"ucat": n}
    if kind == "ucat_sequence":
        f = fn[claim["function"]]
        got = [_exact_ucat(f, p) for p in claim["p_list"]]
        label = (f"ucat^p({claim['function']}) for p = "
                 f"{', '.join(claim['p_list'])} is {claim['expect']}")
        return label, "pass" if got == claim["expect"] else "fail", {"ucat": got}
    if kind == "m_a_plus":
        f = fn[claim["function"]]
        got = [m_a_plus(f, exact.to_fraction(a)) for a in claim["angles"]]
        label = f"M_a^+({claim['function']}) at the breakpoints"
        return label, "pass" if got == claim["expect"] else "fail", {"M": got}
    if kind == "variation":
        f = fn[claim["function"]]
        lo, hi = (exact.to_fraction(x) for x in claim["interval"])
        got = variation(f, claim["variation"], Interval.open(lo, hi))
        want = parse_scalar(claim["expect"])
        label = (f"V{'-' if claim['variation'] == 'negative' else '+'}"
                 f"({claim['function']}; ({lo}, {hi})) = {want}")
        return label, "pass" if got == want else "fail", {"got": str(got)}
    if kind == "sweep_points":
        f = fn[claim["function"]]
        got = [str(x) for x in sweep_points(f)]
        label = f"sweep points of {claim['function']} are {', '.join(claim['expect'])}"
        return label, "pass" if got == claim["expect"] else "fail", {"got": got}
    if kind == "line_decomposition":
        from .sweep import verify_line_decomposition
        d = decompose_line(fn[claim["function"]])
        ok = len(d.summands) == claim["length"] and \
            verify_line_decomposition(d, fn[claim["function"]])
        label = f"sweep gives {claim['length']} unimodal summands of {claim['function']}"
        return label, "pass" if ok else "fail", None
    if kind == "circle_decomposition":
        d = decompose_circle(fn[claim["function"]])
        ok = d is not None and len(d.summands) == claim["length"]
        label = (f"constructed decomposition of {claim['function']} has "
                 f"{claim['length']} unimodal summands")
        return label, "pass" if ok else "fail", None
    if kind == "ucat_bound":
        label = (f"{_ucat_symbol(claim)}({claim['function']}) "
                 f"{claim['relation']} {claim['value']} via {', '.join(claim['via'])}")
        ok = all(results[v].ok and results[v].checkable for v in claim["via"])
        return label, "pass" if ok else "fail", None
    if kind == "external":
        return claim["text"], EXTERNAL, None
    if kind == "lower_bound_check":
        f = fn[claim["function"]]
        ok, witness = lower_bound_check(f, claim["points"])
        label = f"path values from {', '.join(claim['points'])} bound {claim['function']}"
        if ok == claim["expect"]:
            return label, "pass" if ok else "fail (expected)", None
        return label, "fail", {"witness": repr(witness)}
    if kind == "path_value":
        f = fn[claim["function"]]
        got = path_value(f, claim["from"], claim["to"])
        want = parse_scalar(claim["expect"])
        label = f"pv({claim['from']}, {claim['to']}) = {want}"
        return label, "pass" if got == want else "fail", {"got": scalar_json(got)}
    if kind == "superlevel":
        f = fn[claim["function"]]
        c = parse_scalar(claim["level"])
        exp = claim["expect"]
        if isinstance(f, PlanePL):
            s = superlevel_stats(f, c)
            got = {"components": s.components,
                   "euler_characteristic": s.euler_characteristic,
                   "area": str(s.area)}
        else:
            s = superlevel(f, c)
            got = {"components": s.components(),
                   "euler_characteristic": s.euler_characteristic()}
        ok = all(str(got.get(k)) == str(v) for k, v in exp.items())
        label = (f"{{{claim['function']} >= {c}}}: "
                 + ", ".join(f"{k} {v}" for k, v in exp.items()))
        return label, "pass" if ok else "fail", None if ok else {"got": got}
    if kind == "subdivision":
        fine, coarse = fn[claim["fine"]], fn[claim["coarse"]]
        g = coarse
        for chain in claim["chains"]:
            g = subdivide(g, chain[0], chain[-1], chain[1:-1])
        ok = g.graph.same_as(fine.graph) and all(
            g.values[v] == fine.values[v] for v in fine.graph.vertices)
        label = f"{claim['fine']} is {claim['coarse']} on a subdivision"
        return label, "pass" if ok else "fail", None
    raise ValueError(f"unknown claim kind {kind!r}")


def _probe(f, at):
    if isinstance(f, PlanePL):
        return point_probe(f, [("p", at)])["p"]["value"]
    if isinstance(f, GraphPL):
        if isinstance(at, str):
            return f.levels[at]
        (u, v), t = edge_point(at[0], at[1], at[2])
        ls = f.levels
        return ls[u] + (ls[v] - ls[u]) * t
    raise TypeError(type(f).__name__)


def _exact_ucat(f, p):
    if isinstance(f, CirclePL):
        return ucat_circle(f, p)
    if isinstance(f, PLFunction):
        return ucat_line(f, p)
    raise UnimodalError("exact ucat is only computed on the line and circle")


def verify(ds):
    """Check every claim of a dataset, in file order."""
    if isinstance(ds, str):
        ds = build(ds)
    results = {}
    for claim in ds.claims:
        try:
            label, status, detail = _check(claim, ds, results)
        except UnimodalError as e:
            label, status, detail = claim["id"], "fail", {"error": str(e)}
        results[claim["id"]] = ClaimResult(claim["id"], label, status,
                                           claim["provenance"], detail)
    return list(results.values())


def verify_all(names=None):
    """Build and check every dataset.

    Returns a report dict; ``report["ok"]`` is False iff some machine-
    checkable claim failed or a dataset did not build.
    """
    names = list(names or NAMES)
    report = {"datasets": [], "ok": True}
    for name in names:
        t0 = time.perf_counter()
        entry = {"name": name}
        try:
            ds = build(name)
            entry["name"] = ds.name
            entry["carrier"] = ds.carrier
            entry["claims"] = [r.to_json() for r in verify(ds)]
            entry["ok"] = all(c["status"] in ("pass", "fail (expected)", EXTERNAL)
                              for c in entry["claims"])
        except (UnimodalError, OSError, KeyError, ValueError) as e:
            entry["error"] = f"{type(e).__name__}: {e}"
            entry["ok"] = False
        entry["seconds"] = round(time.perf_counter() - t0, 3)
        report["datasets"].append(entry)
        report["ok"] = report["ok"] and entry["ok"]
    return report


def report_text(report):
    lines = []
    for d in report["datasets"]:
        lines.append(f"{d['name']} ({d.get('carrier', '?')})")
        if "error" in d:
            lines.append(f"  build failed: {d['error']}")
            continue
        for c in d["claims"]:
            lines.append(f"  {c['claim']}: {c['status']}  [{c['provenance']}]")
    lines.append("all checks passed" if report["ok"] else "some checks FAILED")
    return "\n".join(lines)
