import pytest
from hypothesis import given, settings, strategies as st

from polyvenn.core import GridDiagram, diagram_area, full_mask
from polyvenn.layout import layout_naive, layout_scd
from polyvenn.polyomino import DIHEDRAL
from polyvenn.scd import scd_aigner
from polyvenn.validation import (
    CHECK_NAMES,
    curves_congruent,
    fits_power_box,
    is_minimum_area,
    is_minimum_bbox,
    validate_venn,
)

from conftest import oracle_is_venn


def test_report_lists_all_checks_in_order(row2):
    report = validate_venn(row2)
    assert tuple(c.name for c in report.checks) == CHECK_NAMES
    assert report.overall


def test_scd4_valid():
    assert validate_venn(layout_scd(4, scd_aigner(4))).overall


def test_duplicate_mask_row():
    d = GridDiagram(2, {(0, 0): 1, (1, 0): 3, (2, 0): 1})
    report = validate_venn(d)
    assert not report.overall
    assert not report["all_masks_present"].passed
    assert "B" in report["all_masks_present"].detail
    assert not report["masks_unique_regions"].passed


def test_enclosed_empty_pocket():
    # a ring of full-set cells around an empty centre
    ring = {(x, y): 1 for x in range(3) for y in range(3) if (x, y) != (1, 1)}
    report = validate_venn(GridDiagram(1, ring))
    assert not report["empty_region_connected"].passed
    assert not report["curves_hole_free"].passed
    assert not report["curve_perimeters_simple"].passed
    assert report["curves_connected"].passed


def test_disconnected_curve():
    d = GridDiagram(2, {(0, 0): 1, (1, 0): 3, (2, 0): 2, (4, 0): 2})
    report = validate_venn(d)
    assert not report["curves_connected"].passed
    assert "B" in report["curves_connected"].detail


def test_empty_diagram_invalid():
    report = validate_venn(GridDiagram(2))
    assert not report.overall
    assert not report["all_masks_present"].passed


def test_minimum_area_predicate():
    assert is_minimum_area(layout_scd(3))
    assert not is_minimum_area(layout_scd(5))
    assert not is_minimum_area(layout_naive(5))


def test_minimum_bbox_predicate(row2):
    assert is_minimum_bbox(row2)
    assert not is_minimum_bbox(layout_scd(4))
    assert is_minimum_bbox(layout_scd(2))


def test_power_box_candidates():
    # 4 x 7 against 1x16, 2x8, 4x4, 8x2, 16x1
    assert not fits_power_box(4, 7, 4)
    assert fits_power_box(4, 1, 2) and fits_power_box(1, 4, 2)
    assert not fits_power_box(3, 3, 3)


def test_congruence(row2):
    assert curves_congruent(row2)
    assert not curves_congruent(layout_naive(5))
    assert curves_congruent(GridDiagram(1, {(0, 0): 1}))
    with pytest.raises(ValueError, match="all_masks_present"):
        curves_congruent(GridDiagram(2, {(0, 0): 1}))


def test_min_bbox_implies_small_area(row2):
    for d in (row2, layout_scd(2), layout_scd(3), layout_naive(3)):
        if is_minimum_bbox(d):
            assert diagram_area(d) in (2**d.n - 1, 2**d.n)


@pytest.mark.parametrize("t", DIHEDRAL)
@pytest.mark.parametrize("d", [layout_scd(3), layout_naive(3), layout_scd(2)], ids=["scd3", "naive3", "scd2"])
def test_classification_invariant_under_symmetry(d, t):
    moved = d.transformed(lambda c: t(*c)).translated(7, -3)
    assert validate_venn(moved).overall == validate_venn(d).overall
    assert is_minimum_area(moved) == is_minimum_area(d)
    assert is_minimum_bbox(moved) == is_minimum_bbox(d)
    assert curves_congruent(moved) == curves_congruent(d)


random_diagrams = st.integers(1, 3).flatmap(
    lambda n: st.dictionaries(
        st.tuples(st.integers(0, 3), st.integers(0, 2)),
        st.integers(1, full_mask(n)),
        min_size=1,
        max_size=12,
    ).map(lambda cells: GridDiagram(n, cells))
)


@settings(max_examples=500)
@given(random_diagrams)
def test_validator_agrees_with_raster_oracle(d):
    assert validate_venn(d).overall == oracle_is_venn(d)


@settings(max_examples=300)
@given(random_diagrams)
def test_curve_checks_agree(d):
    report = validate_venn(d)
    # simple perimeter exactly when connected and hole-free
    simple = report["curve_perimeters_simple"].passed
    assert simple == (report["curves_connected"].passed and report["curves_hole_free"].passed)
    if report.overall:
        assert len(set(d.cells.values())) == full_mask(d.n)
