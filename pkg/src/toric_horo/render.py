"""SVG 1.1 figure for planar inputs: the polytope, its polar and its fan."""

from __future__ import annotations

from fractions import Fraction
from math import atan2

from .errors import DimensionError
from .fan import Fan
from .polytope import Polytope

PANEL = 260
PAD = 20


def _ordered(vertices):
    # counter-clockwise around the centroid; only used to draw outlines
    cx = sum(float(v[0]) for v in vertices) / len(vertices)
    cy = sum(float(v[1]) for v in vertices) / len(vertices)
    return sorted(vertices, key=lambda v: atan2(float(v[1]) - cy, float(v[0]) - cx))


class _Panel:
    def __init__(self, x0, extent):
        self.x0 = x0
        self.extent = float(extent)

    def xy(self, p):
        half = (PANEL - 2 * PAD) / 2
        x = self.x0 + PAD + half + float(p[0]) / self.extent * half
        y = PAD + half - float(p[1]) / self.extent * half
        return f"{x:.3f}", f"{y:.3f}"

    def polygon(self, vertices, style):
        pts = " ".join(",".join(self.xy(v)) for v in _ordered(vertices))
        return f'<polygon points="{pts}" {style}/>'

    def line(self, a, b, style):
        (x1, y1), (x2, y2) = self.xy(a), self.xy(b)
        return f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {style}/>'

    def text(self, p, label, size=11):
        x, y = self.xy(p)
        return f'<text x="{x}" y="{y}" font-size="{size}" font-family="sans-serif">{label}</text>'

    def axes(self):
        e = self.extent
        style = 'stroke="#bbbbbb" stroke-width="0.5"'
        return [self.line((-e, 0), (e, 0), style), self.line((0, -e), (0, e), style)]


def _extent(points) -> Fraction:
    return max(max(abs(Fraction(c)) for c in p) for p in points) * Fraction(6, 5)


def render_svg(P: Polytope, fan: Fan) -> str:
    if P.ambient_dim != 2:
        raise DimensionError("rendering is only available for planar polytopes")
    Q = P.polar
    parts = []
    titles = ["P", "polar of P", "fan of P"]
    panels = [
        _Panel(0, _extent(P.vertices)),
        _Panel(PANEL, _extent(Q.vertices)),
        _Panel(2 * PANEL, _extent(P.vertices)),
    ]
    for panel, title in zip(panels, titles):
        parts.extend(panel.axes())
        parts.append(
            f'<text x="{panel.x0 + PAD}" y="{PANEL - 4}" font-size="13" font-family="sans-serif">{title}</text>'
        )

    p0, p1, p2 = panels
    parts.append(p0.polygon(P.vertices, 'fill="#cfe2f3" stroke="#1f4e79" stroke-width="1.5"'))
    for i, v in enumerate(P.vertices):
        parts.append(p0.text(v, f"v{i}", 10))
    parts.append(p1.polygon(Q.vertices, 'fill="#f4cccc" stroke="#990000" stroke-width="1.5"'))
    for i, v in enumerate(Q.vertices):
        parts.append(p1.text(v, f"w{i}", 10))

    reach = p2.extent
    origin = (0, 0)
    shades = ["#d9ead3", "#fff2cc", "#d0e0e3", "#ead1dc"]
    for k, sigma in enumerate(c for c in fan.cones if c.dim == 2):
        tips = [_tip(r, reach) for r in sigma.generators]
        parts.append(p2.polygon([origin] + tips, f'fill="{shades[k % len(shades)]}" stroke="none"'))
        mid = tuple(sum(Fraction(t[i]) for t in tips) / (2 * len(tips)) for i in range(2))
        parts.append(p2.text(mid, f"σ{sigma.id}"))
    parts.append(p2.polygon(P.vertices, 'fill="none" stroke="#1f4e79" stroke-dasharray="4,3"'))
    for sigma in (c for c in fan.cones if c.dim == 1):
        tip = _tip(sigma.generators[0], reach)
        parts.append(p2.line(origin, tip, 'stroke="#38761d" stroke-width="1.5"'))
        parts.append(p2.text(tip, f"ρ{sigma.id}", 10))

    width = 3 * PANEL
    body = "\n  ".join(parts)
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{PANEL}" '
        f'viewBox="0 0 {width} {PANEL}">\n  {body}\n</svg>\n'
    )


def _tip(ray, reach):
    big = max(abs(a) for a in ray)
    return tuple(Fraction(a) * Fraction(reach) / big * Fraction(9, 10) for a in ray)
