"""Constructive polyVenn layouts and their area bounds.

Both constructions start from a one-row rectangle of full-set cells whose
leftmost cell sits at the origin.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

import mpmath

from .core import GridDiagram, diagram_area, full_mask
from .scd import ChainDecomposition, scd_aigner, validate_scd


def minimum_area(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return (1 << n) - 1


def naive_area(n: int) -> int:
    return (1 << n) + (1 << (n - 1)) - 4


def scd_width(n: int) -> int:
    c = comb(n, n // 2)
    return max(1, -(-(c - 2) // 2))


def scd_area(n: int) -> int:
    return scd_width(n) + (1 << n) - 2


def layout_naive(n: int) -> GridDiagram:
    """Full-set bar of length 2^(n-1) - 2 ringed by one cell per other region.

    The ring is labelled clockwise from the cell above the origin, masks in
    ascending order.
    """
    if n < 3:
        raise ValueError(f"naive layout needs n >= 3, got {n}")
    length = (1 << (n - 1)) - 2
    cells = {(x, 0): full_mask(n) for x in range(length)}
    ring = [(x, 1) for x in range(length)]
    ring.append((length, 0))
    ring += [(x, -1) for x in reversed(range(length))]
    ring.append((-1, 0))
    for mask, cell in enumerate(ring, start=1):
        cells[cell] = mask
    return GridDiagram(n, cells)


def layout_scd(n: int, dec: ChainDecomposition | None = None) -> GridDiagram:
    """Lay each symmetric chain out as a strip growing away from the central bar.

    Chains fill the up columns, then the down columns, then the left and right
    rows; each strip puts its largest set next to the bar. Defaults to Aigner's
    decomposition.
    """
    if n < 2:
        raise ValueError(f"chain layout needs n >= 2, got {n}")
    if dec is None:
        dec = scd_aigner(n)
    if dec.n != n:
        raise ValueError(f"decomposition is for n={dec.n}, not n={n}")
    report = validate_scd(dec)
    if not report.ok:
        raise ValueError(f"invalid symmetric chain decomposition: {report}")

    top = full_mask(n)
    width = scd_width(n)
    strips = []
    for chain in dec.chains:
        inner = [x for x in chain if x not in (0, top)]
        if inner:
            strips.append(inner[::-1])  # largest first, nearest the bar

    # slot = (anchor cell next to the bar, outward step)
    slots = [((x, 1), (0, 1)) for x in range(width)]
    slots += [((x, -1), (0, -1)) for x in range(width)]
    slots += [((-1, 0), (-1, 0)), ((width, 0), (1, 0))]
    if len(strips) > len(slots):
        raise ValueError(f"{len(strips)} chains do not fit {len(slots)} slots")

    cells = {(x, 0): top for x in range(width)}
    for strip, ((x, y), (dx, dy)) in zip(strips, slots):
        for k, mask in enumerate(strip):
            cells[(x + k * dx, y + k * dy)] = mask
    return GridDiagram(n, cells)


# Past this size the diagrams get large; their areas are pinned by the
# constructions' closed forms, which the tests check against built diagrams.
_BUILD_LIMIT = 12


def approximation_ratio(method: str, n: int) -> Fraction:
    """Exact area of the method's layout divided by the minimum area 2^n - 1."""
    if method == "naive":
        if n < 3:
            raise ValueError(f"naive layout needs n >= 3, got {n}")
        area = diagram_area(layout_naive(n)) if n <= _BUILD_LIMIT else naive_area(n)
    elif method == "scd":
        if n < 2:
            raise ValueError(f"chain layout needs n >= 2, got {n}")
        area = diagram_area(layout_scd(n)) if n <= _BUILD_LIMIT else scd_area(n)
    else:
        raise ValueError(f"unknown method {method!r}")
    return Fraction(area, minimum_area(n))


def central_binomial_bound_holds(m: int) -> bool:
    """Check C(2m, m) < 4^m / (sqrt(pi) * (m^2 + m/2 + 3/32)^(1/4))."""
    if not 1 <= m <= 30:
        raise ValueError(f"m must be in 1..30, got {m}")
    lhs = comb(2 * m, m)
    with mpmath.workdps(60):
        m_ = mpmath.mpf(m)
        rhs = mpmath.mpf(4) ** m / (
            mpmath.sqrt(mpmath.pi) * (m_**2 + m_ / 2 + mpmath.mpf(3) / 32) ** mpmath.mpf(0.25)
        )
        return mpmath.mpf(lhs) < rhs
