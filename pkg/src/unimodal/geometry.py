"""Exact planar polygon helpers over rational coordinates."""

from fractions import Fraction


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def signed_area(poly):
    s = Fraction(0)
    n = len(poly)
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        s += x1 * y2 - x2 * y1
    return s / 2


def area(poly):
    return abs(signed_area(poly))


def on_segment(p, a, b):
    """``p`` on the closed segment ``ab``."""
    if cross(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def strictly_inside_segment(p, a, b):
    return p != a and p != b and on_segment(p, a, b)


def in_triangle(p, a, b, c):
    """Closed containment for a triangle of either orientation."""
    d1, d2, d3 = cross(a, b, p), cross(b, c, p), cross(c, a, p)
    neg = d1 < 0 or d2 < 0 or d3 < 0
    pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (neg and pos)


def barycentric(p, a, b, c):
    det = cross(a, b, c)
    la = cross(p, b, c) / det
    lb = cross(a, p, c) / det
    return la, lb, 1 - la - lb


def ear_clip(poly, start=0):
    """Triangulate a simple polygon given as points; returns index triples
    into ``poly``.  Collinear boundary points are allowed.  ``start`` rotates
    where the ear search begins, which changes the triangulation.
    """
    n = len(poly)
    idx = list(range(n))
    if signed_area(poly) < 0:
        idx.reverse()
    if n:
        k = start % n
        idx = idx[k:] + idx[:k]
    tris = []
    guard = 0
    while len(idx) > 3:
        m = len(idx)
        for i in range(m):
            a, b, c = idx[i - 1], idx[i], idx[(i + 1) % m]
            pa, pb, pc = poly[a], poly[b], poly[c]
            if cross(pa, pb, pc) <= 0:
                continue
            if any(in_triangle(poly[j], pa, pb, pc)
                   for j in idx if j not in (a, b, c)):
                continue
            tris.append((a, b, c))
            idx.pop(i)
            break
        else:
            raise ValueError("polygon is not simple")
        guard += 1
        if guard > 4 * n:
            raise ValueError("ear clipping did not terminate")
    if len(idx) == 3:
        a, b, c = idx
        if cross(poly[a], poly[b], poly[c]) != 0:
            tris.append((a, b, c))
    return tris


def clip_halfplane(poly, a, b):
    """Part of a convex polygon on the left of (or on) the line ``a -> b``."""
    out = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        sp, sq = cross(a, b, p), cross(a, b, q)
        if sp >= 0:
            out.append(p)
        if (sp > 0 > sq) or (sp < 0 < sq):
            t = sp / (sp - sq)
            out.append((p[0] + (q[0] - p[0]) * t, p[1] + (q[1] - p[1]) * t))
    return _dedupe(out)


def _dedupe(poly):
    out = []
    for p in poly:
        if not out or out[-1] != p:
            out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def ccw(poly):
    return list(poly) if signed_area(poly) >= 0 else list(reversed(poly))


def intersect_convex(p, q):
    """Intersection of two convex polygons (possibly degenerate)."""
    out = ccw(p)
    q = ccw(q)
    m = len(q)
    for i in range(m):
        if not out:
            break
        out = clip_halfplane(out, q[i], q[(i + 1) % m])
    return out


def subtract_convex(p, q):
    """Convex pieces covering ``p`` minus the interior of convex ``q``."""
    q = ccw(q)
    pieces = []
    rest = ccw(p)
    m = len(q)
    for i in range(m):
        a, b = q[i], q[(i + 1) % m]
        outside = clip_halfplane(rest, b, a)
        if len(outside) >= 3 and area(outside) > 0:
            pieces.append(outside)
        rest = clip_halfplane(rest, a, b)
        if len(rest) < 3 or area(rest) == 0:
            break
    return pieces


def bbox(poly):
    xs = [p[0] for p in poly]
    ys = [p[1] for p in poly]
    return min(xs), min(ys), max(xs), max(ys)


def boxes_overlap(b1, b2):
    return not (b1[2] < b2[0] or b2[2] < b1[0] or b1[3] < b2[1] or b2[3] < b1[1])


def centroid(poly):
    n = len(poly)
    return (sum((p[0] for p in poly), Fraction(0)) / n,
            sum((p[1] for p in poly), Fraction(0)) / n)
