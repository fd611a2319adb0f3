"""Static SVG pictures of a line function, its cumulative variations and
the sweep decomposition."""

from xml.sax.saxutils import escape

from .line import evaluate
from .sweep import cumulative_variations, decompose_line, sweep_points

WIDTH, HEIGHT, MARGIN = 720, 420, 40
SUMMAND_COLOURS = ("#1f77b4", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2",
                   "#17becf", "#bcbd22", "#7f7f7f")


class _Frame:
    def __init__(self, x0, x1, y1):
        self.x0, self.x1 = float(x0), float(x1)
        self.y1 = float(y1) or 1.0
        if self.x1 == self.x0:
            self.x1 = self.x0 + 1

    def sx(self, x):
        return MARGIN + (float(x) - self.x0) / (self.x1 - self.x0) * (WIDTH - 2 * MARGIN)

    def sy(self, y):
        return HEIGHT - MARGIN - float(y) / self.y1 * (HEIGHT - 2 * MARGIN)

    def path(self, pts):
        return " ".join(f"{self.sx(x):.2f},{self.sy(y):.2f}" for x, y in pts)


def _polyline(frame, pts, colour, width=2, dash=None, label=None):
    extra = f' stroke-dasharray="{dash}"' if dash else ""
    title = f"<title>{escape(label)}</title>" if label else ""
    return (f'<polyline fill="none" stroke="{colour}" stroke-width="{width}"'
            f'{extra} points="{frame.path(pts)}">{title}</polyline>')


def broken_line(f):
    """Vertices of the sweep's staircase: level with ``g`` at each sweep
    point, then straight up to ``g`` there."""
    pts = sweep_points(f)
    g, h, grid = cumulative_variations(f, pts)
    lo, hi = grid[0], grid[-1]
    out = [(lo, g[lo])]
    for x in pts:
        out.append((x, h[x]))
        out.append((x, g[x]))
    out.append((hi, out[-1][1]))
    return out


def render(f, with_summands=True, title=None):
    """SVG text with ``f``, ``g``, ``h``, the broken line and (optionally)
    each sweep summand in its own colour."""
    pts = sweep_points(f) if f.is_rational else []
    g, h, grid = cumulative_variations(f, pts)
    ymax = max([g[grid[-1]], h[grid[-1]]] + [evaluate(f, x) for x in grid])
    fr = _Frame(grid[0], grid[-1], ymax)
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
             f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
             '<rect width="100%" height="100%" fill="white"/>',
             f'<line x1="{MARGIN}" y1="{fr.sy(0):.2f}" x2="{WIDTH - MARGIN}" '
             f'y2="{fr.sy(0):.2f}" stroke="#bbb"/>']
    if title:
        parts.append(f'<text x="{MARGIN}" y="24" font-family="sans-serif" '
                     f'font-size="14">{escape(title)}</text>')
    parts.append(_polyline(fr, [(x, g[x]) for x in grid], "#2ca02c", 1.5,
                           "6 3", "g: positive variation"))
    parts.append(_polyline(fr, [(x, h[x]) for x in grid], "#d62728", 1.5,
                           "6 3", "h: negative variation"))
    if f.is_rational and pts:
        parts.append(_polyline(fr, broken_line(f), "#555", 1, "2 2", "broken line"))
    if with_summands and f.is_rational and pts:
        d = decompose_line(f)
        for i, u in enumerate(d.summands):
            colour = SUMMAND_COLOURS[i % len(SUMMAND_COLOURS)]
            parts.append(_polyline(fr, list(zip(u.breakpoints, u.values)),
                                   colour, 2, None, f"u{i + 1}"))
    parts.append(_polyline(fr, [(x, evaluate(f, x)) for x in grid], "black", 2.5,
                           None, "f"))
    for x in pts:
        parts.append(f'<line x1="{fr.sx(x):.2f}" y1="{MARGIN}" x2="{fr.sx(x):.2f}" '
                     f'y2="{HEIGHT - MARGIN}" stroke="#999" stroke-width="0.5"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_svg(path, f, with_summands=True, title=None):
    text = render(f, with_summands, title)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text
