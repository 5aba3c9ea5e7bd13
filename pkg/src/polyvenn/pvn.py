"""PVN v1: a plain-text grid encoding of diagrams.

::

    pvn 1
    n 2
    rows 3
    cols 1
    origin 0 -1
    1
    3
    2

``origin`` is the bottom-left cell of the bounding box; grid rows run top to
bottom and each token is ``.`` (no curve) or the region mask in lowercase hex.
"""

from __future__ import annotations

import re

from .core import GridDiagram, extents

_HEX = re.compile(r"[0-9a-f]+\Z")


class PvnError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def grid_rows(d: GridDiagram):
    """Yield ``(y, [mask or 0 per column])`` from the top row down."""
    if not d.cells:
        return
    x0, y0, x1, y1 = extents(d.cells)
    for y in range(y1, y0 - 1, -1):
        yield y, [d.cells.get((x, y), 0) for x in range(x0, x1 + 1)]


def serialize_pvn(d: GridDiagram) -> str:
    if d.cells:
        x0, y0, x1, y1 = extents(d.cells)
        rows, cols = y1 - y0 + 1, x1 - x0 + 1
    else:
        x0 = y0 = rows = cols = 0
    lines = ["pvn 1", f"n {d.n}", f"rows {rows}", f"cols {cols}", f"origin {x0} {y0}"]
    for _, masks in grid_rows(d):
        lines.append(" ".join(format(m, "x") if m else "." for m in masks))
    return "\n".join(lines) + "\n"


def _header(lines, idx: int, key: str, count: int) -> list:
    if idx >= len(lines):
        raise PvnError(idx + 1, f"missing '{key}' line")
    parts = lines[idx].split()
    if not parts or parts[0] != key or len(parts) != count + 1:
        raise PvnError(idx + 1, f"expected '{key}' with {count} value(s), got {lines[idx]!r}")
    try:
        return [int(p) for p in parts[1:]]
    except ValueError:
        raise PvnError(idx + 1, f"non-integer value in {lines[idx]!r}") from None


def parse_pvn(text: str) -> GridDiagram:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    (version,) = _header(lines, 0, "pvn", 1)
    if version != 1:
        raise PvnError(1, f"unsupported PVN version {version}")
    (n,) = _header(lines, 1, "n", 1)
    if n < 1:
        raise PvnError(2, f"curve count must be positive, got {n}")
    (rows,) = _header(lines, 2, "rows", 1)
    (cols,) = _header(lines, 3, "cols", 1)
    if rows < 0 or cols < 0:
        raise PvnError(3, "negative grid dimensions")
    x0, y0 = _header(lines, 4, "origin", 2)
    body = lines[5:]
    if len(body) != rows:
        raise PvnError(6 + min(len(body), rows), f"expected {rows} grid rows, found {len(body)}")
    limit = 1 << n
    cells = {}
    for r, line in enumerate(body):
        lineno = 6 + r
        tokens = line.split()
        if len(tokens) != cols:
            raise PvnError(lineno, f"row has {len(tokens)} tokens, expected {cols}")
        y = y0 + rows - 1 - r
        for c, tok in enumerate(tokens):
            if tok == ".":
                continue
            if not _HEX.match(tok):
                raise PvnError(lineno, f"bad token {tok!r}; expected '.' or lowercase hex")
            mask = int(tok, 16)
            if mask == 0:
                raise PvnError(lineno, "mask 0 must be written as '.'")
            if mask >= limit:
                raise PvnError(lineno, f"mask {tok} uses bits >= n={n}")
            cells[(x0 + c, y)] = mask
    return GridDiagram(n, cells)
