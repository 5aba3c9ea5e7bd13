"""Value types for grid-drawn Venn diagrams.

A diagram is a finite map from lattice cells to region masks. Bit ``i`` of a
mask says the cell lies inside curve ``i``; curve 0 is labelled ``A``. Cells
outside every curve are simply not stored, so the unbounded empty region is
the complement of the occupied support.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Tuple

Cell = Tuple[int, int]
CellSet = frozenset

NEIGHBOURS = ((1, 0), (-1, 0), (0, 1), (0, -1))


def neighbours(cell: Cell):
    x, y = cell
    return ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1))


def full_mask(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_to_letters(mask: int) -> str:
    """Render a mask as curve letters, e.g. ``0b101 -> "AC"``; empty -> ``"{}"``."""
    if mask == 0:
        return "{}"
    out = []
    i = 0
    while mask >> i:
        if mask >> i & 1:
            out.append(_letter(i))
        i += 1
    return "".join(out)


def letters_to_mask(text: str) -> int:
    text = text.strip()
    if text in ("", "{}"):
        return 0
    mask = 0
    for ch in text:
        if not ch.isalpha() or not ch.isupper():
            raise ValueError(f"bad curve letter {ch!r} in {text!r}")
        mask |= 1 << (ord(ch) - ord("A"))
    return mask


def _letter(i: int) -> str:
    if i >= 26:
        raise ValueError("curve letters only go up to Z")
    return chr(ord("A") + i)


@dataclass(frozen=True)
class GridDiagram:
    """An orthogonal unit-grid drawing of ``n`` curves.

    ``cells`` maps ``(x, y)`` (y grows upward) to a nonempty region mask.
    """

    n: int
    cells: Mapping[Cell, int] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"curve count must be a positive integer, got {self.n!r}")
        top = full_mask(self.n)
        frozen = {}
        for (x, y), mask in self.cells.items():
            if not isinstance(mask, int) or mask <= 0:
                raise ValueError(f"cell {(x, y)} has empty or invalid mask {mask!r}")
            if mask & ~top:
                raise ValueError(f"cell {(x, y)} mask {mask:#x} uses bits >= n={self.n}")
            frozen[(int(x), int(y))] = mask
        object.__setattr__(self, "cells", MappingProxyType(frozen))

    def __eq__(self, other):
        if not isinstance(other, GridDiagram):
            return NotImplemented
        return self.n == other.n and dict(self.cells) == dict(other.cells)

    def __hash__(self):
        return hash((self.n, frozenset(self.cells.items())))

    def __len__(self):
        return len(self.cells)

    def translated(self, dx: int, dy: int) -> GridDiagram:
        return GridDiagram(self.n, {(x + dx, y + dy): m for (x, y), m in self.cells.items()})

    def transformed(self, t) -> GridDiagram:
        """Apply a cell-to-cell map ``t`` to every cell."""
        return GridDiagram(self.n, {t(c): m for c, m in self.cells.items()})


def curve_cells(d: GridDiagram, i: int) -> CellSet:
    if not 0 <= i < d.n:
        raise IndexError(f"curve index {i} out of range for n={d.n}")
    bit = 1 << i
    return frozenset(c for c, m in d.cells.items() if m & bit)


def region_cells(d: GridDiagram, mask: int) -> CellSet:
    if mask <= 0:
        raise ValueError("the empty region is the unbounded complement, not a cell set")
    if mask & ~full_mask(d.n):
        raise ValueError(f"mask {mask:#x} uses bits >= n={d.n}")
    return frozenset(c for c, m in d.cells.items() if m == mask)


def diagram_area(d: GridDiagram) -> int:
    return len(d.cells)


def extents(cells: Iterable[Cell]) -> tuple[int, int, int, int]:
    """Return ``(xmin, ymin, xmax, ymax)`` of a nonempty cell collection."""
    xs, ys = [], []
    for x, y in cells:
        xs.append(x)
        ys.append(y)
    if not xs:
        raise ValueError("extents of an empty cell set")
    return min(xs), min(ys), max(xs), max(ys)


def bounding_box(d: GridDiagram) -> tuple[int, int]:
    """Width and height, in cells, of the tight box around the occupied cells."""
    if not d.cells:
        raise ValueError("empty diagram has no bounding box")
    x0, y0, x1, y1 = extents(d.cells)
    return x1 - x0 + 1, y1 - y0 + 1
