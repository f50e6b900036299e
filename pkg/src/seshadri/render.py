"""Deterministic SVG rendering of a dissection diagram.

One path per piece, dashed cut lines across the region, and text labels
for named points when a name table is supplied (the builtin dissection
carries one).  Geometry coordinates are written with six exact decimal
places; labels keep the exact rational strings in a data attribute.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

from .certify import Dissection, InvalidDissection, validate_dissection
from .geometry import AffineForm, Point


@dataclass(frozen=True)
class RenderSpec:
    out_path: Optional[str] = None
    size: int = 600
    stroke: str = "#1d1d1d"
    fill: str = "none"
    labels: bool = True

    def __post_init__(self):
        if self.size < 100:
            raise ValueError("canvas must be at least 100 px")


def _decimal6(x: Fraction) -> str:
    """Fixed six-decimal rendering of a rational, exact rounding half-up."""
    scaled = Fraction(x) * 10**6
    n = (scaled.numerator * 2 + scaled.denominator) // (scaled.denominator * 2)
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // 10**6}.{n % 10**6:06d}"


def _region_chord(dis: Dissection, cut: AffineForm):
    """Endpoints of the cut line clipped to the region, or None."""
    hits = []
    n = len(dis.region.vertices)
    for i in range(n):
        a = dis.region.vertices[i]
        b = dis.region.vertices[(i + 1) % n]
        fa, fb = cut(a), cut(b)
        if fa == 0:
            hits.append(a)
        if (fa < 0 < fb) or (fb < 0 < fa):
            t = fa / (fa - fb)
            hits.append(Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)))
    uniq = sorted(set(hits))
    return (uniq[0], uniq[-1]) if len(uniq) >= 2 else None


def render_svg(dis: Dissection, spec: RenderSpec,
               point_names: Optional[Dict[str, Point]] = None) -> str:
    """Render the dissection to an SVG document string."""
    check = validate_dissection(dis)
    if not check.ok:
        raise InvalidDissection("; ".join(check.violations))
    xs = [v.x for v in dis.region.vertices]
    ys = [v.y for v in dis.region.vertices]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y)
    margin = Fraction(spec.size, 12)
    scale = (spec.size - 2 * margin) / span

    def sx(x: Fraction) -> str:
        return _decimal6(margin + (x - lo_x) * scale)

    def sy(y: Fraction) -> str:
        return _decimal6(spec.size - margin - (y - lo_y) * scale)

    lines: List[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.size}" '
        f'height="{spec.size}" viewBox="0 0 {spec.size} {spec.size}">',
        f'  <g fill="{spec.fill}" stroke="{spec.stroke}" stroke-width="1.5">',
    ]
    for idx, poly in enumerate(dis.polygons(), start=1):
        d = " ".join(
            f"{'M' if i == 0 else 'L'} {sx(v.x)} {sy(v.y)}"
            for i, v in enumerate(poly.vertices)
        ) + " Z"
        lines.append(f'    <path id="piece-{idx}" d="{d}"/>')
    lines.append("  </g>")
    lines.append(f'  <g stroke="{spec.stroke}" stroke-width="0.8" '
                 'stroke-dasharray="6 4">')
    for idx, step in enumerate(dis.steps, start=1):
        chord = _region_chord(dis, step.cut)
        if chord is None:
            continue
        a, b = chord
        lines.append(f'    <line id="cut-{idx}" x1="{sx(a.x)}" y1="{sy(a.y)}" '
                     f'x2="{sx(b.x)}" y2="{sy(b.y)}"/>')
    lines.append("  </g>")
    if spec.labels and point_names:
        lines.append('  <g font-family="monospace" font-size="14" '
                     f'fill="{spec.stroke}" stroke="none">')
        for name in sorted(point_names):
            p = point_names[name]
            lines.append(f'    <text x="{sx(p.x)}" y="{sy(p.y)}" dx="4" dy="-4" '
                         f'data-exact="{p.x},{p.y}">{name}</text>')
        lines.append("  </g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
