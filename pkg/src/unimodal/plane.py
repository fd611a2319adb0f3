"""Compactly supported PL functions on the plane and the topology of their
superlevel sets."""

import bisect
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import exact
from .errors import (BadTiling, NegativeValue, NonplanarFaceValues,
                     OutOfSupport, RefinementMismatch)
from .geometry import (area, barycentric, bbox, boxes_overlap, ccw, cross,
                       ear_clip, in_triangle, intersect_convex,
                       signed_area, strictly_inside_segment, subtract_convex)
from .graph import critical_levels


@dataclass(frozen=True, eq=False)
class PlanePL:
    """Base values at vertices, linear on each triangle; the function is
    ``base ** exponent``.  ``faces`` keep the polygons as listed, with
    vertices lying on their sides inserted."""

    ids: tuple
    points: tuple
    faces: tuple
    triangles: tuple
    values: tuple
    exponent: Fraction = Fraction(1)

    @cached_property
    def index(self):
        return {k: i for i, k in enumerate(self.ids)}

    @cached_property
    def tri_boxes(self):
        return [bbox([self.points[i] for i in t]) for t in self.triangles]

    @cached_property
    def edges(self):
        out = set()
        for a, b, c in self.triangles:
            for u, v in ((a, b), (b, c), (c, a)):
                out.add((min(u, v), max(u, v)))
        return sorted(out)

    @cached_property
    def support_area(self):
        return sum((area([self.points[i] for i in t]) for t in self.triangles),
                   Fraction(0))

    def value_of(self, vid):
        return self.values[self.index[vid]]


@dataclass(frozen=True)
class RegionStats:
    level: object
    components: int
    euler_characteristic: int
    nonempty: bool
    area: object = None

    @property
    def holes(self):
        return self.components - self.euler_characteristic

    @property
    def contractible(self):
        return self.components == 1 and self.euler_characteristic == 1


def _point(xy):
    return (exact.to_fraction(xy[0]), exact.to_fraction(xy[1]))


class _PointIndex:
    """Vertices sorted by x for range lookups."""

    def __init__(self, points):
        self.order = sorted(range(len(points)), key=lambda i: points[i])
        self.xs = [points[i][0] for i in self.order]
        self.points = points

    def between(self, lo, hi):
        i = bisect.bisect_left(self.xs, lo)
        j = bisect.bisect_right(self.xs, hi)
        return self.order[i:j]


def _insert_hanging(face, points, pidx):
    out = []
    n = len(face)
    for k in range(n):
        a, b = face[k], face[(k + 1) % n]
        pa, pb = points[a], points[b]
        out.append(a)
        lo, hi = min(pa[0], pb[0]), max(pa[0], pb[0])
        inner = [i for i in pidx.between(lo, hi)
                 if strictly_inside_segment(points[i], pa, pb)]
        inner.sort(key=lambda i: abs(points[i][0] - pa[0]) + abs(points[i][1] - pa[1]))
        out.extend(inner)
    return tuple(out)


def _check_linear(face, points, values):
    pts = [points[i] for i in face]
    base = None
    for i in range(len(face)):
        for j in range(i + 1, len(face)):
            for k in range(j + 1, len(face)):
                if cross(pts[i], pts[j], pts[k]) != 0:
                    base = (i, j, k)
                    break
            if base:
                break
        if base:
            break
    if base is None:
        raise BadTiling(f"degenerate face {face}")
    i, j, k = base
    for m in range(len(face)):
        la, lb, lc = barycentric(pts[m], pts[i], pts[j], pts[k])
        want = la * values[face[i]] + lb * values[face[j]] + lc * values[face[k]]
        if want != values[face[m]]:
            raise NonplanarFaceValues(f"values on face {face} are not affine")


def make_plane_pl(vertices, faces, values, exponent=1, start=0,
                  check_boundary=True):
    """Validate a polygonal decomposition with vertex values.

    ``vertices`` maps ids to ``(x, y)``; ``faces`` list polygons by id and
    ``values`` maps ids to base values (missing ids get 0).  Faces are
    ear-clipped; ``start`` rotates where the clipping begins.
    """
    ids = tuple(vertices)
    points = tuple(_point(vertices[k]) for k in ids)
    if len(set(points)) != len(points):
        raise BadTiling("two vertices share a position")
    index = {k: i for i, k in enumerate(ids)}
    unknown = set(values) - set(ids)
    if unknown:
        raise BadTiling(f"values for unknown vertices {sorted(unknown)}")
    vals = []
    for k in ids:
        v = exact.to_fraction(values.get(k, 0))
        if v < 0:
            raise NegativeValue(f"negative value at {k}")
        vals.append(v)
    pidx = _PointIndex(points)
    polys, tris = [], []
    for face in faces:
        try:
            raw = tuple(index[k] for k in face)
        except KeyError as e:
            raise BadTiling(f"face uses unknown vertex {e}") from None
        poly = _insert_hanging(raw, points, pidx)
        if signed_area([points[i] for i in poly]) == 0:
            raise BadTiling(f"face {face} has no area")
        _check_linear(poly, points, vals)
        try:
            local = ear_clip([points[i] for i in poly], start)
        except ValueError as e:
            raise BadTiling(f"face {face}: {e}") from None
        polys.append(poly)
        for a, b, c in local:
            tris.append((poly[a], poly[b], poly[c]))
    _check_tiling(tris, points, vals, check_boundary)
    return PlanePL(ids, points, tuple(polys), tuple(tris), tuple(vals),
                   exact.to_exponent(exponent))


def _check_tiling(tris, points, vals, check_boundary):
    uses = {}
    for t in tris:
        for u, v in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
            if (u, v) in uses:
                raise BadTiling("two triangles overlap along an edge")
            uses[(u, v)] = True
    if not check_boundary:
        return
    for u, v in uses:
        if (v, u) not in uses and (vals[u] != 0 or vals[v] != 0):
            raise BadTiling(
                f"support boundary edge {points[u]}-{points[v]} is not at 0")


def plane_power(f, p):
    return PlanePL(f.ids, f.points, f.faces, f.triangles, f.values,
                   f.exponent * exact.to_exponent(p))


def _locate(f, p):
    for k, (t, b) in enumerate(zip(f.triangles, f.tri_boxes)):
        if b[0] <= p[0] <= b[2] and b[1] <= p[1] <= b[3]:
            a, bb, c = (f.points[i] for i in t)
            if in_triangle(p, a, bb, c):
                return k
    return None


def _tri_base(f, k, p):
    t = f.triangles[k]
    a, b, c = (f.points[i] for i in t)
    la, lb, lc = barycentric(p, a, b, c)
    return la * f.values[t[0]] + lb * f.values[t[1]] + lc * f.values[t[2]]


def evaluate_base(f, xy):
    p = _point(xy)
    k = _locate(f, p)
    return Fraction(0) if k is None else _tri_base(f, k, p)


def evaluate_plane(f, xy):
    """Exact ``f(p)``: a Fraction, or a Surd when the exponent demands it."""
    return exact.power(evaluate_base(f, xy), f.exponent) \
        if f.exponent != 1 else evaluate_base(f, xy)


def point_probe(f, pts):
    """Exact values at labeled points, with the base value and exponent."""
    out = {}
    for label, xy in pts:
        p = _point(xy)
        k = _locate(f, p)
        if k is None:
            raise OutOfSupport(f"{label} at {p} lies outside the support")
        base = _tri_base(f, k, p)
        value = base if f.exponent == 1 else exact.power(base, f.exponent)
        out[label] = {"base": base, "exponent": f.exponent, "value": value}
    return out


def _base_threshold(f, c):
    if f.exponent == 1:
        return c
    if not exact.is_exact_rational(c):
        raise ValueError("levels for powered functions must be rational")
    return exact.power(c, 1 / f.exponent)


def _crossing(f, i, j, c):
    (x1, y1), (x2, y2) = f.points[i], f.points[j]
    a, b = f.values[i], f.values[j]
    t = (a - c) / (a - b)
    return (x1 + (x2 - x1) * t, y1 + (y2 - y1) * t)


def superlevel_stats(f, c, with_area=True):
    """Components and Euler characteristic of ``{f >= c}``.

    Cells: vertices at or above the level and edge crossings; whole edges,
    clipped edge pieces and one chord through each triangle that straddles
    the level; triangles reaching above the level (or flat at it).
    """
    cb = _base_threshold(f, c)
    vals = f.values
    sgn = [exact.sign(v - cb) for v in vals]
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    for i, s in enumerate(sgn):
        if s >= 0:
            parent[("v", i)] = ("v", i)
    n_edges = 0
    for i, j in f.edges:
        si, sj = sgn[i], sgn[j]
        if si >= 0 and sj >= 0:
            union(("v", i), ("v", j))
            n_edges += 1
        elif si * sj < 0:
            x = ("x", i, j)
            parent[x] = x
            union(x, ("v", i if si > 0 else j))
            n_edges += 1
    n_faces = 0
    total = Fraction(0)
    rational = exact.is_exact_rational(cb)
    for t in f.triangles:
        ss = [sgn[i] for i in t]
        if 1 in ss or ss == [0, 0, 0]:
            n_faces += 1
        if 1 in ss and -1 in ss:
            ends = []
            for k in range(3):
                i, j = t[k], t[(k + 1) % 3]
                if sgn[i] == 0:
                    ends.append(("v", i))
                if sgn[i] * sgn[j] < 0:
                    ends.append(("x", min(i, j), max(i, j)))
            union(ends[0], ends[1])
            n_edges += 1
        if with_area and rational and 1 in ss:
            total += area(_clip_triangle(f, t, cb))
    roots = {find(x) for x in parent}
    chi = len(parent) - n_edges + n_faces
    return RegionStats(c, len(roots), chi, bool(parent),
                       total if with_area and rational else None)


def _clip_triangle(f, t, cb):
    out = []
    for k in range(3):
        i, j = t[k], t[(k + 1) % 3]
        if f.values[i] >= cb:
            out.append(f.points[i])
        if (f.values[i] - cb) * (f.values[j] - cb) < 0:
            out.append(_crossing(f, i, j, cb))
    return out


def superlevel_area(f, c):
    return superlevel_stats(f, c).area


def is_unimodal_plane(f, mode="contractible"):
    """Connected (and, in ``contractible`` mode, with Euler characteristic
    1) at every vertex value and between consecutive values."""
    if mode not in ("contractible", "pi0"):
        raise ValueError(f"unknown mode {mode!r}")
    levels = critical_levels(f.values)
    if not levels:
        return False
    base = PlanePL(f.ids, f.points, f.faces, f.triangles, f.values)
    for c in levels:
        s = superlevel_stats(base, c, with_area=False)
        if not s.nonempty or s.components != 1:
            return False
        if mode == "contractible" and s.euler_characteristic != 1:
            return False
    return True


@dataclass(frozen=True)
class Cell:
    """Convex piece of the common refinement; ``where[i]`` is the triangle
    of the ``i``-th function containing it, or None outside its support."""

    polygon: tuple
    where: tuple


def _split(cell_poly, g):
    """Pieces of a convex polygon inside each triangle of ``g`` plus the
    pieces outside the support of ``g``."""
    box = bbox(cell_poly)
    inside, outside = [], [cell_poly]
    for k, (t, b) in enumerate(zip(g.triangles, g.tri_boxes)):
        if not boxes_overlap(box, b):
            continue
        tri = [g.points[i] for i in t]
        piece = intersect_convex(cell_poly, tri)
        if len(piece) < 3 or area(piece) == 0:
            continue
        inside.append((piece, k))
        nxt = []
        for o in outside:
            if boxes_overlap(bbox(o), b):
                nxt.extend(subtract_convex(o, tri))
            else:
                nxt.append(o)
        outside = nxt
    return inside, [o for o in outside if len(o) >= 3 and area(o) > 0]


def overlay(planes):
    """Common refinement of several triangulations into convex cells.

    Cells cover the support of the first function; each cell records which
    triangle of every function contains it.
    """
    first = planes[0]
    cells = [Cell(tuple(first.points[i] for i in t), (k,))
             for k, t in enumerate(first.triangles)]
    for g in planes[1:]:
        if _same_mesh(first, g):
            cells = [Cell(c.polygon, c.where + (c.where[0],)) for c in cells]
            continue
        nxt = []
        for c in cells:
            inside, outside = _split(list(c.polygon), g)
            nxt.extend(Cell(tuple(p), c.where + (k,)) for p, k in inside)
            nxt.extend(Cell(tuple(p), c.where + (None,)) for p in outside)
        cells = nxt
    return cells


def _same_mesh(f, g):
    return f.points == g.points and f.triangles == g.triangles


def _cell_values(g, k, poly):
    if k is None:
        return [Fraction(0)] * len(poly)
    return [_tri_base(g, k, p) for p in poly]


def _lift(base, e):
    return base if e == 1 else exact.power(base, e)


def verify_combination_plane(summands, rule, target, p=None):
    """Check ``target`` against the summands on every cell of the common
    refinement.

    ``sum``: levels add up at every cell vertex.  ``p_power``: the p-th
    powers of the levels add up.  ``max``: on each cell one summand equals
    the target at all vertices and none exceeds it.  Each summand must be
    supported inside the target's support.
    """
    planes = [target] + list(summands)
    cells = overlay(planes)
    covered = [Fraction(0)] * len(planes)
    for c in cells:
        a = area(c.polygon)
        for i, k in enumerate(c.where):
            if k is not None:
                covered[i] += a
    for g, a in zip(planes, covered):
        if a != g.support_area:
            raise RefinementMismatch("a summand reaches outside the target support")
    if rule == "p_power":
        p = exact.to_exponent(p)
    for c in cells:
        cols = [_cell_values(g, k, c.polygon) for g, k in zip(planes, c.where)]
        if rule == "p_power":
            lv = [[_lift(b, g.exponent * p) for b in col]
                  for g, col in zip(planes, cols)]
        else:
            lv = [[_lift(b, g.exponent) for b in col]
                  for g, col in zip(planes, cols)]
        tgt, rest = lv[0], lv[1:]
        if rule in ("sum", "p_power"):
            for m in range(len(c.polygon)):
                if sum((r[m] for r in rest), Fraction(0)) != tgt[m]:
                    return False
        elif rule == "max":
            if any(r[m] > tgt[m] for r in rest for m in range(len(tgt))):
                return False
            if not any(all(r[m] == tgt[m] for m in range(len(tgt))) for r in rest):
                return False
        else:
            raise ValueError(f"unknown rule {rule!r}")
    return True


def pyramid(lo, hi, height=1):
    """Value ``height`` at the centre of the rectangle, 0 on its corners,
    linear on the four triangles through the centre."""
    (x0, y0), (x1, y1) = _point(lo), _point(hi)
    mid = ((x0 + x1) / 2, (y0 + y1) / 2)
    verts = {"r0": (x0, y0), "r1": (x1, y0), "r2": (x1, y1), "r3": (x0, y1),
             "m": mid}
    faces = [("r0", "r1", "m"), ("r1", "r2", "m"), ("r2", "r3", "m"),
             ("r3", "r0", "m")]
    return make_plane_pl(verts, faces, {"m": height})


def combine_linear(terms):
    """``sum c_i g_i`` as a new PlanePL on the common refinement.

    Every term after the first must be supported inside the first one.
    """
    planes = [g for _, g in terms]
    coefs = [exact.to_fraction(c) for c, _ in terms]
    for g in planes:
        if g.exponent != 1:
            raise ValueError("linear combinations need exponent 1")
    cells = overlay(planes)
    covered = [Fraction(0)] * len(planes)
    for c in cells:
        a = area(c.polygon)
        for i, k in enumerate(c.where):
            if k is not None:
                covered[i] += a
    for g, a in zip(planes, covered):
        if a != g.support_area:
            raise RefinementMismatch("a term reaches outside the first support")
    verts, values, faces = {}, {}, []
    for c in cells:
        poly = ccw(c.polygon)
        names = []
        cols = [_cell_values(g, k, poly) for g, k in zip(planes, c.where)]
        for m, pt in enumerate(poly):
            name = verts.get(pt)
            if name is None:
                name = f"p{len(verts)}"
                verts[pt] = name
                values[name] = sum((cf * col[m] for cf, col in zip(coefs, cols)),
                                   Fraction(0))
            names.append(name)
        faces.append(_drop_collinear(names, poly))
    return make_plane_pl({n: pt for pt, n in verts.items()}, faces, values)


def _drop_collinear(names, poly):
    keep = []
    n = len(poly)
    for i in range(n):
        if cross(poly[i - 1], poly[i], poly[(i + 1) % n]) != 0:
            keep.append(names[i])
    return keep


def split_faces(faces, diagonals):
    """Cut polygons (lists of ids) along the given vertex pairs."""
    faces = [list(f) for f in faces]
    for a, b in diagonals:
        for k, f in enumerate(faces):
            if a in f and b in f:
                i, j = sorted((f.index(a), f.index(b)))
                if j - i in (1, len(f) - 1):
                    raise BadTiling(f"{a}-{b} is already a side")
                faces[k] = f[i:j + 1]
                faces.append(f[j:] + f[:i + 1])
                break
        else:
            raise BadTiling(f"no face has both {a} and {b}")
    return faces
