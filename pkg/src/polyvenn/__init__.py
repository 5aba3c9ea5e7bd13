"""Venn diagrams drawn as polyomino perimeters on the unit grid."""

from .core import (
    GridDiagram,
    bounding_box,
    curve_cells,
    diagram_area,
    region_cells,
)
from .layout import (
    approximation_ratio,
    central_binomial_bound_holds,
    layout_naive,
    layout_scd,
    minimum_area,
)
from .scd import ChainDecomposition, scd_aigner, scd_christmas_tree, validate_scd
from .validation import (
    ValidationReport,
    curves_congruent,
    is_minimum_area,
    is_minimum_bbox,
    validate_venn,
)

__version__ = "0.1.0"
