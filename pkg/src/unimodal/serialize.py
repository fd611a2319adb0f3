"""JSON literals for functions and exact scalars."""

import json
from fractions import Fraction

from . import exact
from .circle import CirclePL, make_circle
from .graph import GraphPL, make_graph, make_graph_pl
from .line import CLOSED_INTERVAL, PLFunction, make_pl
from .plane import make_plane_pl


def parse_scalar(obj):
    """``"p/q"`` strings (or ints), or ``{"coef", "radicand", "index"}``
    for ``coef * radicand ** (1/index)``."""
    if isinstance(obj, dict):
        coef = exact.to_fraction(obj.get("coef", "1"))
        root = exact.power(obj["radicand"], Fraction(1, int(obj.get("index", 2))))
        return root * coef
    if isinstance(obj, float):
        raise ValueError(f"write {obj!r} as a rational string to keep it exact")
    return exact.to_fraction(obj)


def scalar_json(x):
    """Rationals as strings, Surds as ``{"coef", "radicand", "index"}`` when
    they have one term, otherwise the full term list."""
    if isinstance(x, exact.Surd):
        if len(x.terms) == 1:
            (r, c), = x.terms.items()
            return {"coef": str(c), "radicand": str(r), "index": x.index}
        return x.to_json()
    return str(Fraction(x))


def exponent_json(p):
    return str(Fraction(p))


def parse_function(obj):
    """A self-contained function literal, dispatched on ``domain``."""
    if not isinstance(obj, dict) or "domain" not in obj:
        raise ValueError("function literal needs a 'domain' key")
    dom = obj["domain"]
    p = obj.get("exponent", "1")
    if dom in ("line", "interval"):
        return make_pl([exact.to_fraction(x) for x in obj["breakpoints"]],
                       [parse_scalar(v) for v in obj["values"]], dom, p)
    if dom == "circle":
        return make_circle([exact.to_fraction(t) for t in obj["angles"]],
                           [parse_scalar(v) for v in obj["values"]], p)
    if dom == "graph":
        g = parse_graph(obj)
        return make_graph_pl(g, {k: parse_scalar(v)
                                 for k, v in obj.get("values", {}).items()}, p)
    if dom == "plane":
        return make_plane_pl({k: tuple(v) for k, v in obj["vertices"].items()},
                             obj["faces"],
                             {k: parse_scalar(v) for k, v in obj["values"].items()},
                             p)
    raise ValueError(f"unknown domain {dom!r}")


def parse_graph(obj):
    ids, coords = [], {}
    for v in obj["vertices"]:
        if isinstance(v, dict):
            ids.append(v["id"])
            if "x" in v and "y" in v:
                coords[v["id"]] = (v["x"], v["y"])
        else:
            ids.append(v)
    return make_graph(ids, [tuple(e) for e in obj["edges"]], coords)


def function_json(f):
    if isinstance(f, PLFunction):
        out = {"domain": "interval" if f.domain == CLOSED_INTERVAL else "line",
               "breakpoints": [str(x) for x in f.breakpoints],
               "values": [scalar_json(v) for v in f.values]}
    elif isinstance(f, CirclePL):
        out = {"domain": "circle", "angles": [str(t) for t in f.angles],
               "values": [scalar_json(v) for v in f.values]}
    elif isinstance(f, GraphPL):
        g = f.graph
        verts = []
        for v in g.vertices:
            item = {"id": v}
            if v in g.coords:
                item["x"], item["y"] = (str(c) for c in g.coords[v])
            verts.append(item)
        out = {"domain": "graph", "vertices": verts,
               "edges": [list(e) for e in g.edges],
               "values": {k: scalar_json(v) for k, v in f.values.items() if v != 0}}
    else:
        raise TypeError(f"no literal form for {type(f).__name__}")
    if f.exponent != 1:
        out["exponent"] = exponent_json(f.exponent)
    return out


def _is_flat(x):
    return not isinstance(x, (list, dict))


def dumps(obj, indent=0):
    """Stable JSON: dicts one key per line, flat lists on one line."""
    pad = " " * indent
    inner = " " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        if all(_is_flat(v) for v in obj.values()) and len(obj) <= 4:
            return json.dumps(obj, ensure_ascii=False)
        items = [f"{inner}{json.dumps(k, ensure_ascii=False)}: {dumps(v, indent + 1)}"
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if all(_is_flat(v) for v in obj):
            return json.dumps(obj, ensure_ascii=False)
        items = [inner + dumps(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj, ensure_ascii=False)


def dump_text(obj):
    return dumps(obj) + "\n"
