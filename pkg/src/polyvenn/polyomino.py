"""Predicates and small-k counting for polyominoes (finite sets of lattice cells)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .core import Cell, extents, neighbours

MAX_FIXED_K = 8
MAX_COLUMN_CONVEX_BRUTE_K = 7


class PolyominoError(ValueError):
    """Raised when a cell set violates an operation's precondition."""


def is_edge_connected(cells: Iterable[Cell]) -> bool:
    s = set(cells)
    if not s:
        return False
    start = next(iter(s))
    seen = {start}
    todo = [start]
    while todo:
        for nb in neighbours(todo.pop()):
            if nb in s and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return len(seen) == len(s)


def outside_reach(blocked, box: tuple[int, int, int, int]) -> set:
    """Flood the complement of ``blocked`` inside ``box`` from the box's border ring.

    ``box`` is ``(xmin, ymin, xmax, ymax)`` and should already be inflated so
    that its border lies strictly outside ``blocked``. Returns every reached cell.
    """
    x0, y0, x1, y1 = box
    seeds = [(x, y) for x in range(x0, x1 + 1) for y in (y0, y1)]
    seeds += [(x, y) for y in range(y0 + 1, y1) for x in (x0, x1)]
    seen = {c for c in seeds if c not in blocked}
    todo = deque(seen)
    while todo:
        for nb in neighbours(todo.popleft()):
            x, y = nb
            if x0 <= x <= x1 and y0 <= y <= y1 and nb not in blocked and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return seen


def is_hole_free(cells: Iterable[Cell]) -> bool:
    s = set(cells)
    if not s:
        return True
    x0, y0, x1, y1 = extents(s)
    box = (x0 - 1, y0 - 1, x1 + 1, y1 + 1)
    reached = outside_reach(s, box)
    box_cells = (box[2] - box[0] + 1) * (box[3] - box[1] + 1)
    return len(reached) + len(s) == box_cells


def _boundary_edges(s) -> list:
    # oriented so the interior lies on the left (counterclockwise outer boundary)
    edges = []
    for x, y in s:
        if (x, y - 1) not in s:
            edges.append(((x, y), (x + 1, y)))
        if (x + 1, y) not in s:
            edges.append(((x + 1, y), (x + 1, y + 1)))
        if (x, y + 1) not in s:
            edges.append(((x + 1, y + 1), (x, y + 1)))
        if (x - 1, y) not in s:
            edges.append(((x, y + 1), (x, y)))
    return edges


def trace_perimeter(cells: Iterable[Cell]) -> tuple:
    """Walk the boundary of a hole-free polyomino counterclockwise.

    Returns the oriented unit edges in order, starting at the lexicographically
    least boundary vertex. The path closes on itself and touches no lattice
    point twice.
    """
    s = frozenset(cells)
    if not is_edge_connected(s):
        raise PolyominoError("is_edge_connected: cell set is empty or disconnected")
    if not is_hole_free(s):
        raise PolyominoError("is_hole_free: cell set encloses a hole")
    succ = {}
    for a, b in _boundary_edges(s):
        if a in succ:
            # a pinch vertex; cannot happen for connected hole-free sets
            raise PolyominoError(f"perimeter not simple at vertex {a}")
        succ[a] = b
    start = min(succ)
    path = []
    v = start
    while True:
        w = succ[v]
        path.append((v, w))
        v = w
        if v == start:
            break
    if len(path) != len(succ):
        raise PolyominoError("perimeter has more than one component")
    return tuple(path)


def perimeter_vertices(path) -> list:
    """The corner points of a traced perimeter, collinear runs merged."""
    pts = [a for a, _ in path]
    corners = []
    k = len(pts)
    for i, p in enumerate(pts):
        a, c = pts[i - 1], pts[(i + 1) % k]
        if (p[0] - a[0], p[1] - a[1]) != (c[0] - p[0], c[1] - p[1]):
            corners.append(p)
    return corners


@dataclass(frozen=True)
class Convexity:
    row_convex: bool
    column_convex: bool

    @property
    def convex(self) -> bool:
        return self.row_convex and self.column_convex


def _runs_contiguous(lines: dict) -> bool:
    return all(max(v) - min(v) + 1 == len(v) for v in lines.values())


def convexity_class(cells: Iterable[Cell]) -> Convexity:
    s = set(cells)
    if not is_edge_connected(s):
        raise PolyominoError("is_edge_connected: convexity needs a polyomino")
    rows, cols = {}, {}
    for x, y in s:
        rows.setdefault(y, set()).add(x)
        cols.setdefault(x, set()).add(y)
    return Convexity(row_convex=_runs_contiguous(rows), column_convex=_runs_contiguous(cols))


# The eight symmetries of the square lattice.
DIHEDRAL = (
    lambda x, y: (x, y),
    lambda x, y: (-y, x),
    lambda x, y: (-x, -y),
    lambda x, y: (y, -x),
    lambda x, y: (-x, y),
    lambda x, y: (y, x),
    lambda x, y: (x, -y),
    lambda x, y: (-y, -x),
)


def normalize_translation(cells: Iterable[Cell]) -> frozenset:
    cells = list(cells)
    mx = min(x for x, _ in cells)
    my = min(y for _, y in cells)
    return frozenset((x - mx, y - my) for x, y in cells)


def canonical_free_form(cells: Iterable[Cell]) -> frozenset:
    cells = list(cells)
    if not cells:
        raise PolyominoError("canonical form of an empty cell set")
    best = None
    for t in DIHEDRAL:
        key = sorted(normalize_translation(t(x, y) for x, y in cells))
        if best is None or key < best:
            best = key
    return frozenset(best)


@lru_cache(maxsize=None)
def fixed_polyominoes(k: int) -> frozenset:
    """All fixed k-ominoes, each translated so its minimum corner is (0, 0)."""
    if not 1 <= k <= MAX_FIXED_K:
        raise PolyominoError(f"k={k} outside brute-force range 1..{MAX_FIXED_K}")
    if k == 1:
        return frozenset([frozenset([(0, 0)])])
    grown = set()
    for poly in fixed_polyominoes(k - 1):
        for c in poly:
            for nb in neighbours(c):
                if nb not in poly:
                    grown.add(normalize_translation(poly | {nb}))
    return frozenset(grown)


def count_fixed_polyominoes(k: int) -> int:
    return len(fixed_polyominoes(k))


def count_free_polyominoes(k: int) -> int:
    return len({canonical_free_form(p) for p in fixed_polyominoes(k)})


_COLUMN_CONVEX_SEEDS = (1, 2, 6, 19)


def count_column_convex(k: int) -> int:
    """Fixed column-convex k-ominoes via Polya's linear recurrence."""
    if k < 1:
        raise PolyominoError(f"k must be positive, got {k}")
    a = list(_COLUMN_CONVEX_SEEDS)
    while len(a) < k:
        a.append(5 * a[-1] - 7 * a[-2] + 4 * a[-3])
    return a[k - 1]


def count_column_convex_bruteforce(k: int) -> int:
    if not 1 <= k <= MAX_COLUMN_CONVEX_BRUTE_K:
        raise PolyominoError(f"k={k} outside brute-force range 1..{MAX_COLUMN_CONVEX_BRUTE_K}")
    return sum(1 for p in fixed_polyominoes(k) if convexity_class(p).column_convex)


def series_coefficients(numerator, denominator, terms: int) -> list:
    """Power-series coefficients of numerator/denominator by exact long division.

    Polynomials are coefficient lists, constant term first; ``denominator[0]``
    must be 1.
    """
    if denominator[0] != 1:
        raise ValueError("denominator must have constant term 1")
    out = []
    for k in range(terms):
        c = numerator[k] if k < len(numerator) else 0
        for j in range(1, min(k, len(denominator) - 1) + 1):
            c -= denominator[j] * out[k - j]
        out.append(c)
    return out


def column_convex_gf_coefficients(terms: int) -> list:
    """Coefficients of x^1..x^terms in x(1-x)^3 / (1 - 5x + 7x^2 - 4x^3)."""
    num = [0, 1, -3, 3, -1]
    den = [1, -5, 7, -4]
    return series_coefficients(num, den, terms + 1)[1:]
