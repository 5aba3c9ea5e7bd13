"""Venn-validity checking and classification of grid diagrams."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List

from .core import GridDiagram, bounding_box, curve_cells, diagram_area, extents, full_mask, mask_to_letters
from .polyomino import (
    PolyominoError,
    canonical_free_form,
    is_edge_connected,
    is_hole_free,
    outside_reach,
    trace_perimeter,
)

CHECK_NAMES = (
    "curve_count_positive",
    "all_masks_present",
    "masks_unique_regions",
    "empty_region_connected",
    "curves_connected",
    "curves_hole_free",
    "curve_perimeters_simple",
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: List[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.overall

    def first_failure(self):
        return next((c for c in self.checks if not c.passed), None)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def render(self) -> str:
        lines = [f"{c.name}: {'pass' if c.passed else 'FAIL'}" + (f" ({c.detail})" if c.detail else "")
                 for c in self.checks]
        lines.append(f"overall: {'pass' if self.overall else 'FAIL'}")
        return "\n".join(lines) + "\n"


def _names(masks, limit=8) -> str:
    shown = ", ".join(mask_to_letters(m) for m in masks[:limit])
    return shown + (f", ... ({len(masks)} total)" if len(masks) > limit else "")


def _curve_names(indices) -> str:
    return ", ".join(mask_to_letters(1 << i) for i in indices)


def validate_venn(d: GridDiagram) -> ValidationReport:
    n = d.n
    checks = [Check("curve_count_positive", n >= 1, "" if n >= 1 else f"n={n}")]

    by_mask = {}
    for cell, mask in d.cells.items():
        by_mask.setdefault(mask, []).append(cell)

    missing = [m for m in range(1, full_mask(n) + 1) if m not in by_mask]
    checks.append(Check("all_masks_present", not missing, f"missing {_names(missing)}" if missing else ""))

    split = sorted(m for m, cells in by_mask.items() if not is_edge_connected(cells))
    checks.append(Check("masks_unique_regions", not split,
                        f"disconnected {_names(split)}" if split else ""))

    pockets = 0
    if d.cells:
        x0, y0, x1, y1 = extents(d.cells)
        box = (x0 - 1, y0 - 1, x1 + 1, y1 + 1)
        reached = outside_reach(d.cells, box)
        pockets = (box[2] - box[0] + 1) * (box[3] - box[1] + 1) - len(d.cells) - len(reached)
    checks.append(Check("empty_region_connected", pockets == 0,
                        f"{pockets} enclosed empty cells" if pockets else ""))

    curves = [curve_cells(d, i) for i in range(n)]
    disconnected = [i for i, c in enumerate(curves) if not is_edge_connected(c)]
    checks.append(Check("curves_connected", not disconnected,
                        f"curves {_curve_names(disconnected)}" if disconnected else ""))
    holed = [i for i, c in enumerate(curves) if not is_hole_free(c)]
    checks.append(Check("curves_hole_free", not holed,
                        f"curves {_curve_names(holed)}" if holed else ""))
    not_simple = []
    for i, c in enumerate(curves):
        try:
            trace_perimeter(c)
        except PolyominoError:
            not_simple.append(i)
    checks.append(Check("curve_perimeters_simple", not not_simple,
                        f"curves {_curve_names(not_simple)}" if not_simple else ""))
    return ValidationReport(checks)


def is_minimum_area(d: GridDiagram) -> bool:
    return validate_venn(d).overall and diagram_area(d) == full_mask(d.n)


def fits_power_box(width: int, height: int, n: int) -> bool:
    """Whether a width x height box fits inside some 2^s x 2^t box with s + t = n."""
    return any(width <= 1 << s and height <= 1 << (n - s) for s in range(n + 1))


def is_minimum_bbox(d: GridDiagram) -> bool:
    if not d.cells or not validate_venn(d).overall:
        return False
    return fits_power_box(*bounding_box(d), d.n)


def curves_congruent(d: GridDiagram) -> bool:
    report = validate_venn(d)
    if not report.overall:
        raise ValueError(f"invalid diagram: {report.first_failure().name}")
    forms = {canonical_free_form(curve_cells(d, i)) for i in range(d.n)}
    return len(forms) == 1
