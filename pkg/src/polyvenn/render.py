"""ASCII and SVG renderings of grid diagrams."""

from __future__ import annotations

from .core import GridDiagram, curve_cells, extents, mask_to_letters
from .polyomino import trace_perimeter
from .pvn import grid_rows
from .validation import validate_venn

CELL = 32
MARGIN = 16
INSET = 0.06
PALETTE = (
    "#d62728",
    "#1f77b4",
    "#2ca02c",
    "#ff7f0e",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#17becf",
)


def render_ascii(d: GridDiagram) -> str:
    rows = list(grid_rows(d))
    if not rows:
        return ""
    width = max(len(format(m, "x")) for m in d.cells.values())
    lines = []
    for _, masks in rows:
        lines.append(" ".join(format(m, "x").rjust(width) if m else "." * width for m in masks))
    return "\n".join(lines) + "\n"


def inset_polygon(path, distance: float) -> list:
    """Shift every vertex of a counterclockwise edge loop ``distance`` to the inside."""
    pts = [a for a, _ in path]
    k = len(pts)
    out = []
    for i, (x, y) in enumerate(pts):
        px, py = pts[i - 1]
        qx, qy = pts[(i + 1) % k]
        din = (x - px, y - py)
        dout = (qx - x, qy - y)
        # left normals point into a counterclockwise loop
        nin = (-din[1], din[0])
        nout = (-dout[1], dout[0])
        if nin == nout:
            ox, oy = nin
        else:
            ox, oy = nin[0] + nout[0], nin[1] + nout[1]
        out.append((x + distance * ox, y + distance * oy))
    return out


def _fmt(v: float) -> str:
    s = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(d: GridDiagram) -> str:
    report = validate_venn(d)
    if not report.overall:
        bad = report.first_failure()
        raise ValueError(f"cannot render invalid diagram: {bad.name} failed ({bad.detail})")
    x0, y0, x1, y1 = extents(d.cells)
    width = (x1 - x0 + 1) * CELL + 2 * MARGIN
    height = (y1 - y0 + 1) * CELL + 2 * MARGIN

    def px(x, y):
        return MARGIN + (x - x0) * CELL, MARGIN + (y1 + 1 - y) * CELL

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        '<g id="cells" fill="#f2f2f2" stroke="#cccccc" stroke-width="0.5">',
    ]
    for x, y in sorted(d.cells):
        sx, sy = px(x, y + 1)
        out.append(f'<rect x="{sx}" y="{sy}" width="{CELL}" height="{CELL}">'
                   f"<title>{mask_to_letters(d.cells[(x, y)])}</title></rect>")
    out.append("</g>")
    out.append('<g id="curves" fill="none" stroke-width="2" stroke-linejoin="miter">')
    for i in range(d.n):
        pts = inset_polygon(trace_perimeter(curve_cells(d, i)), INSET * (i + 1))
        cmds = []
        for j, (x, y) in enumerate(pts):
            sx, sy = px(x, y)
            cmds.append(f"{'M' if j == 0 else 'L'}{_fmt(sx)} {_fmt(sy)}")
        out.append(f'<path id="curve-{mask_to_letters(1 << i)}" stroke="{PALETTE[i % len(PALETTE)]}" '
                   f'd="{" ".join(cmds)} Z"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
