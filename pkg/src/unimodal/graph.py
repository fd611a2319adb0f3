"""PL functions on geometric graphs, path values and Morse-Smale trees."""

import heapq
import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import exact
from .errors import (GraphMismatch, NegativeValue, NoPath, NotATree,
                     TooLarge, UnimodalError)


@dataclass(frozen=True, eq=False)
class GeometricGraph:
    """Simple graph; ``coords`` maps ids to optional plane positions."""

    vertices: tuple
    edges: tuple
    coords: dict = field(default_factory=dict)

    @cached_property
    def adjacency(self):
        adj = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    @cached_property
    def edge_set(self):
        return frozenset(frozenset(e) for e in self.edges)

    def same_as(self, other):
        return (set(self.vertices) == set(other.vertices)
                and self.edge_set == other.edge_set)


@dataclass(frozen=True, eq=False)
class GraphPL:
    """Values at vertices, linear along each edge."""

    graph: GeometricGraph
    values: dict
    exponent: Fraction = Fraction(1)

    @cached_property
    def levels(self):
        if self.exponent == 1:
            return dict(self.values)
        return {v: exact.power(x, self.exponent) for v, x in self.values.items()}


@dataclass(frozen=True)
class SubLevelGraph:
    """Part of a graph where ``f >= c``.

    ``segments`` maps each edge ``(u, v)`` to the retained parameter ranges,
    with ``t = 0`` at ``u``.
    """

    level: object
    vertices: frozenset
    segments: dict

    @cached_property
    def full_edges(self):
        return [e for e, segs in self.segments.items() if segs == [(0, 1)]]

    def components(self):
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x
        for u, v in self.full_edges:
            parent[find(u)] = find(v)
        return len({find(v) for v in self.vertices})

    def euler_characteristic(self):
        # stubs hanging off a retained vertex contract onto it
        return len(self.vertices) - len(self.full_edges)

    def is_empty(self):
        return not self.vertices


def make_graph(vertices, edges, coords=None):
    ids = tuple(vertices)
    if len(set(ids)) != len(ids):
        raise GraphMismatch("duplicate vertex ids")
    known = set(ids)
    seen = set()
    out = []
    for u, v in edges:
        if u not in known or v not in known:
            raise GraphMismatch(f"edge {u}-{v} uses an unknown vertex")
        if u == v:
            raise GraphMismatch(f"self-loop at {u}")
        key = frozenset((u, v))
        if key in seen:
            raise GraphMismatch(f"duplicate edge {u}-{v}")
        seen.add(key)
        out.append((u, v))
    cs = {}
    for k, xy in (coords or {}).items():
        cs[k] = tuple(exact.to_fraction(t) for t in xy)
    return GeometricGraph(ids, tuple(out), cs)


def _scalar(v):
    return v if isinstance(v, exact.Surd) else exact.to_fraction(v)


def make_graph_pl(graph, values, exponent=1):
    """Vertices missing from ``values`` get 0."""
    unknown = set(values) - set(graph.vertices)
    if unknown:
        raise GraphMismatch(f"values for unknown vertices {sorted(unknown)}")
    vals = {v: _scalar(values.get(v, 0)) for v in graph.vertices}
    for v, x in vals.items():
        if x < 0:
            raise NegativeValue(f"negative value at {v}")
    return GraphPL(graph, vals, exact.to_exponent(exponent))


def power_graph(gf, p):
    p = exact.to_exponent(p)
    if not all(exact.is_exact_rational(x) for x in gf.values.values()):
        raise UnimodalError("powers apply to rational vertex values only")
    return GraphPL(gf.graph, gf.values, gf.exponent * p)


def scale_graph(gf, lam):
    lam = exact.to_fraction(lam)
    return GraphPL(gf.graph, {v: x * lam for v, x in gf.values.items()},
                   gf.exponent)


def superlevel(gf, c):
    """Exact clipped structure ``{f >= c}``."""
    ls = gf.levels
    keep = frozenset(v for v in gf.graph.vertices if ls[v] >= c)
    segs = {}
    for u, v in gf.graph.edges:
        a, b = ls[u], ls[v]
        if a >= c and b >= c:
            segs[(u, v)] = [(0, 1)]
        elif a >= c > b or b >= c > a:
            t = _crossing(a, b, c)
            segs[(u, v)] = [(0, t)] if a >= c else [(t, 1)]
        else:
            segs[(u, v)] = []
    return SubLevelGraph(c, keep, segs)


def _crossing(a, b, c):
    if all(exact.is_exact_rational(x) for x in (a, b, c)):
        return (a - c) / (a - b)
    return (float(a) - float(c)) / (float(a) - float(b))


def critical_levels(values):
    """Distinct positive values and the midpoints below each of them."""
    vals = sorted(set(values) | {Fraction(0)})
    out = []
    for lo, hi in zip(vals, vals[1:]):
        out.append((lo + hi) / 2)
        out.append(hi)
    return out


def is_unimodal_graph(gf, mode="contractible"):
    """Every superlevel set at a positive level up to the maximum is a
    nonempty tree (``contractible``) or nonempty and connected (``pi0``).

    Superlevel topology only changes at vertex values, so the values and
    the midpoints between them are enough; powers do not move it.
    """
    if mode not in ("contractible", "pi0"):
        raise ValueError(f"unknown mode {mode!r}")
    levels = critical_levels(gf.values.values())
    if not levels:
        return False
    base = GraphPL(gf.graph, gf.values)
    for c in levels:
        s = superlevel(base, c)
        if s.is_empty() or s.components() != 1:
            return False
        if mode == "contractible" and s.euler_characteristic() != 1:
            return False
    return True


def verify_combination(summands, rule, target):
    """Sum: vertex-wise equality.  Max: on every edge some summand matches
    the target at both ends and none exceeds it."""
    for u in summands:
        if not u.graph.same_as(target.graph):
            raise GraphMismatch("summands live on a different graph")
    tl = target.levels
    cols = [u.levels for u in summands]
    if rule == "sum":
        return all(sum((c[v] for c in cols), Fraction(0)) == tl[v]
                   for v in target.graph.vertices)
    if rule != "max":
        raise ValueError(f"unknown rule {rule!r}")
    for v in target.graph.vertices:
        if any(c[v] > tl[v] for c in cols):
            return False
        if not any(c[v] == tl[v] for c in cols):
            return False
    for u, v in target.graph.edges:
        if not any(c[u] == tl[u] and c[v] == tl[v] for c in cols):
            return False
    return True


def edge_point(u, v, t):
    """A point on edge ``u``-``v`` at parameter ``t`` from ``u``."""
    return ((u, v), exact.to_fraction(t))


def _point_value(gf, x):
    ls = gf.levels
    if isinstance(x, tuple):
        (u, v), t = x
        return ls[u] + (ls[v] - ls[u]) * t
    return ls[x]


def _bottlenecks(gf, s):
    """Best path bottleneck from ``s`` to every reachable vertex."""
    ls = gf.levels
    adj = gf.graph.adjacency
    best = {}
    counter = itertools.count()
    start = _point_value(gf, s)
    heap = []
    if isinstance(s, tuple):
        (u, v), _ = s
        for w in (u, v):
            heap.append((_Key(min(start, ls[w])), next(counter), w))
    else:
        heap.append((_Key(start), next(counter), s))
    heapq.heapify(heap)
    while heap:
        k, _, w = heapq.heappop(heap)
        if w in best:
            continue
        best[w] = k.value
        for n in adj[w]:
            if n not in best:
                heapq.heappush(heap, (_Key(min(k.value, ls[n])), next(counter), n))
    return best


class _Key:
    """Max-heap ordering on exact scalars."""

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value

    def __lt__(self, other):
        return self.value > other.value


def path_value(gf, s, t):
    """``sup`` over paths of ``min f``: the widest-path bottleneck.

    Points are vertex ids or :func:`edge_point` tuples.
    """
    if s == t:
        return _point_value(gf, s)
    best = _bottlenecks(gf, s)
    ft = _point_value(gf, t)
    cands = []
    if isinstance(t, tuple):
        (u, v), _ = t
        cands.extend(min(best[w], ft) for w in (u, v) if w in best)
        if isinstance(s, tuple) and frozenset(s[0]) == frozenset(t[0]):
            cands.append(min(_point_value(gf, s), ft))
    elif t in best:
        cands.append(best[t])
    if not cands:
        raise NoPath(f"no path from {s} to {t}")
    return max(cands)


def path_values_from(gf, s):
    return _bottlenecks(gf, s)


def lower_bound_check(gf, points):
    """Whether ``sum_i pv(x_i, x) >= f(x)`` everywhere, with the first
    violation (a vertex, or an edge and a level along it).

    Along an edge ``pv(x_i, .) = min(M_i, f)`` with ``M_i`` the larger
    endpoint path value, so the slack is concave in ``f`` there; it is
    checked at the endpoint levels and at every ``M_i`` in between.
    """
    if not points:
        raise ValueError("points must be nonempty")
    ls = gf.levels
    tables = [_bottlenecks(gf, x) for x in points]
    zero = Fraction(0)
    for v in gf.graph.vertices:
        total = sum((t.get(v, zero) for t in tables), zero)
        if total < ls[v]:
            return False, v
    for u, v in gf.graph.edges:
        ms = [max(t.get(u, zero), t.get(v, zero)) for t in tables]
        lo, hi = min(ls[u], ls[v]), max(ls[u], ls[v])
        for phi in [lo, hi] + [m for m in ms if lo < m < hi]:
            total = sum((min(m, phi) for m in ms), zero)
            if total < phi:
                return False, ((u, v), phi)
    return True, None


@dataclass(frozen=True, eq=False)
class MorseSmaleTree:
    """Maxima with weights joined by saddle edges ``(u, v, weight)``."""

    weights: dict
    edges: tuple
    exponent: Fraction = Fraction(1)

    @cached_property
    def levels(self):
        if self.exponent == 1:
            return dict(self.weights)
        return {k: exact.power(w, self.exponent) for k, w in self.weights.items()}

    @cached_property
    def saddle_levels(self):
        out = {}
        for u, v, w in self.edges:
            lv = w if self.exponent == 1 else exact.power(w, self.exponent)
            out[frozenset((u, v))] = lv
        return out

    @cached_property
    def adjacency(self):
        adj = {k: [] for k in self.weights}
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    @property
    def maxima(self):
        return tuple(self.weights)


def make_tree(weights, edges, check_saddles=True):
    ws = {k: exact.to_fraction(w) for k, w in weights.items()}
    es = tuple((u, v, exact.to_fraction(w)) for u, v, w in edges)
    if not ws:
        raise NotATree("a tree needs at least one maximum")
    if len(es) != len(ws) - 1:
        raise NotATree(f"{len(ws)} maxima need {len(ws) - 1} edges, got {len(es)}")
    parent = {k: k for k in ws}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x
    for u, v, w in es:
        if u not in ws or v not in ws:
            raise NotATree(f"edge {u}-{v} uses an unknown maximum")
        ru, rv = find(u), find(v)
        if ru == rv:
            raise NotATree("edges contain a cycle")
        parent[ru] = rv
        if check_saddles and not (w < ws[u] and w < ws[v]):
            raise NotATree(f"saddle {w} on {u}-{v} is not below both maxima")
        if w < 0:
            raise NegativeValue(f"negative saddle weight {w}")
    return MorseSmaleTree(ws, es)


def power_tree(t, p):
    return MorseSmaleTree(t.weights, t.edges, t.exponent * exact.to_exponent(p))


def tree_path_value(t, a, b):
    """Smallest weight met on the unique path, the two ends included."""
    ls, sl = t.levels, t.saddle_levels
    if a == b:
        return ls[a]
    stack = [(a, None, ls[a])]
    while stack:
        node, prev, low = stack.pop()
        for n in t.adjacency[node]:
            if n == prev:
                continue
            m = min(low, sl[frozenset((node, n))], ls[n])
            if n == b:
                return m
            stack.append((n, node, m))
    raise NotATree(f"{a} and {b} are not connected")


def _pv_table(t):
    keys = t.maxima
    return {(a, b): tree_path_value(t, a, b) for a in keys for b in keys}


def tree_criterion(t, points, _table=None):
    """``sum_i pv(x_i, x) > f(x)`` at every maximum not among the points."""
    for x in points:
        if x not in t.weights:
            raise NotATree(f"{x} is not a maximum of the tree")
    table = _table or _pv_table(t)
    chosen = set(points)
    for x in t.maxima:
        if x in chosen:
            continue
        total = sum((table[(p, x)] for p in points), Fraction(0))
        if not total > t.levels[x]:
            return False
    return True


MAX_TREE_SIZE = 20


def min_tree_cover(t, allow_repeats=True):
    """Smallest multiset of maxima passing :func:`tree_criterion`.

    Sets of distinct maxima are tried first at each size, then multisets.
    The full set of maxima always passes, so the answer is at most the
    number of maxima.
    """
    keys = t.maxima
    if len(keys) > MAX_TREE_SIZE:
        raise TooLarge(f"{len(keys)} maxima exceed the cap of {MAX_TREE_SIZE}")
    table = _pv_table(t)
    for n in range(1, len(keys) + 1):
        for pts in itertools.combinations(keys, n):
            if tree_criterion(t, pts, table):
                return n, pts
        if allow_repeats:
            for pts in itertools.combinations_with_replacement(keys, n):
                if len(set(pts)) < n and tree_criterion(t, pts, table):
                    return n, pts
    raise AssertionError("the full set of maxima must pass")


def random_tree(rng, max_maxima=7):
    """Random tree with pairwise distinct weights, each saddle below both
    of its maxima."""
    k = rng.randint(1, max_maxima)
    while True:
        pool = rng.sample(range(2, 10 * k + 20), k)
        names = [f"m{i}" for i in range(k)]
        weights = dict(zip(names, pool))
        used = set(pool)
        edges = []
        ok = True
        for i in range(1, k):
            j = rng.randrange(i)
            cap = min(pool[i], pool[j])
            free = [s for s in range(1, cap) if s not in used]
            if not free:
                ok = False
                break
            s = rng.choice(free)
            used.add(s)
            edges.append((names[j], names[i], s))
        if ok:
            return make_tree(weights, edges)


def is_nonresonant(t):
    vals = list(t.weights.values()) + [w for _, _, w in t.edges]
    return len(set(vals)) == len(vals)


def tree_monotonicity_scan(trials, p_list, seed=0, max_maxima=7):
    """Random nonresonant trees; the minimal cover must not shrink as the
    exponent grows."""
    ps = sorted(exact.to_exponent(p) for p in p_list)
    rng = random.Random(seed)
    violations = []
    for trial in range(trials):
        t = random_tree(rng, max_maxima)
        if not is_nonresonant(t):
            raise AssertionError("generator produced a resonant tree")
        seq = [min_tree_cover(power_tree(t, p))[0] for p in ps]
        if any(a > b for a, b in zip(seq, seq[1:])):
            violations.append({"trial": trial,
                               "weights": {k: str(w) for k, w in t.weights.items()},
                               "edges": [[u, v, str(w)] for u, v, w in t.edges],
                               "covers": dict(zip(map(str, ps), seq))})
    return {"kind": "tree", "trials": trials, "p_list": [str(p) for p in ps],
            "violations": len(violations), "counterexamples": violations}


def subdivide(gf, u, v, names):
    """Split edge ``u``-``v`` by equally spaced new vertices ``names``."""
    g = gf.graph
    if frozenset((u, v)) not in g.edge_set:
        raise GraphMismatch(f"no edge {u}-{v}")
    key = frozenset((u, v))
    edges = [e for e in g.edges if frozenset(e) != key]
    chain = [u, *names, v]
    edges.extend(zip(chain, chain[1:]))
    k = len(chain) - 1
    vals = dict(gf.values)
    a, b = gf.values[u], gf.values[v]
    for i, n in enumerate(names, 1):
        vals[n] = a + (b - a) * Fraction(i, k)
    graph = make_graph(list(g.vertices) + list(names), edges, g.coords)
    return GraphPL(graph, vals, gf.exponent)
