import numpy as np
import pytest
from scipy import ndimage

from polyvenn.core import GridDiagram

FOUR = ndimage.generate_binary_structure(2, 1)


def _raster(d: GridDiagram):
    xs = [x for x, _ in d.cells]
    ys = [y for _, y in d.cells]
    x0, y0 = min(xs) - 1, min(ys) - 1
    grid = np.zeros((max(ys) - y0 + 2, max(xs) - x0 + 2), dtype=np.int64)
    for (x, y), m in d.cells.items():
        grid[y - y0, x - x0] = m
    return grid


def oracle_is_venn(d: GridDiagram) -> bool:
    """Independent Venn check by connected-component labelling on a raster.

    The raster carries a one-cell empty border standing in for the unbounded
    face. Every one of the 2^n masks (empty included) must label exactly one
    4-connected component, and every curve and its complement must each be
    one component.
    """
    if not d.cells:
        return False
    grid = _raster(d)
    for mask in range(1 << d.n):
        _, count = ndimage.label(grid == mask, structure=FOUR)
        if count != 1:
            return False
    for i in range(d.n):
        inside = (grid >> i) & 1 == 1
        if ndimage.label(inside, structure=FOUR)[1] != 1:
            return False
        if ndimage.label(~inside, structure=FOUR)[1] != 1:
            return False
    return True


@pytest.fixture
def row2():
    """The 3-cell A | AB | B row."""
    return GridDiagram(2, {(0, 0): 1, (1, 0): 3, (2, 0): 2})


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    """Append ``(criterion, passed, detail)`` lines for the end-of-run summary."""
    return request.config.stash.setdefault(ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in sorted(lines):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
