"""Exhaustive backtracking search for small optimal polyVenns.

Two targets:

* minimum area: ``2^n - 1`` cells, one per nonempty region, grown outward from
  a full-set cell at the origin. Shapes are enumerated Redelmeier-style (every
  connected cell set containing the seed exactly once) and each new cell is
  labelled with an unused mask as it is added.
* box filling: every cell of a ``w x h`` box labelled, row-major from the
  bottom-left cell at the origin.

Both prune with necessary conditions that only get stronger as cells are
decided: every curve must still be completable to a connected set, every cell
outside a curve must still reach infinity without crossing it, and decided
empty cells must still reach infinity. Curve relabellings are pruned by
requiring the sequence of assigned masks to be least among its images under
all bit permutations. Candidate masks for a cell are tried in order of how
many curves they share with already-placed neighbours.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .core import GridDiagram, full_mask, neighbours, popcount
from .validation import is_minimum_area, validate_venn

MIN_N, MAX_N = 2, 4


@dataclass(frozen=True)
class SearchLimits:
    nodes: Optional[int] = None
    seconds: Optional[float] = None

    def __post_init__(self):
        if self.nodes is not None and (not isinstance(self.nodes, int) or self.nodes < 1):
            raise ValueError(f"node budget must be a positive integer, got {self.nodes!r}")
        if self.seconds is not None and not self.seconds > 0:
            raise ValueError(f"time budget must be positive, got {self.seconds!r}")


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # "found", "exhausted" or "budget_hit"
    diagram: Optional[GridDiagram] = None
    nodes: int = 0
    seconds: float = 0.0

    @property
    def found(self) -> bool:
        return self.status == "found"


class _BudgetHit(Exception):
    pass


class _Found(Exception):
    def __init__(self, diagram):
        self.diagram = diagram


def _bit_permutations(n: int) -> list:
    perms = []
    for p in permutations(range(n)):
        if list(p) == list(range(n)):
            continue
        table = []
        for m in range(1 << n):
            out = 0
            for i in range(n):
                if m >> i & 1:
                    out |= 1 << p[i]
            table.append(out)
        perms.append(table)
    return perms


class _Search:
    def __init__(self, n: int, limits: SearchLimits, symmetry: bool):
        self.n = n
        self.limits = limits
        self.perms = _bit_permutations(n) if symmetry else []
        self.nodes = 0
        self.start = time.monotonic()
        self.occ = {}
        self.labels = []
        self.collected = None

    def accept(self, d: GridDiagram):
        if self.collected is None:
            raise _Found(d)
        self.collected.append(d)

    def tick(self):
        self.nodes += 1
        lim = self.limits
        if lim.nodes is not None and self.nodes > lim.nodes:
            raise _BudgetHit
        if lim.seconds is not None and self.nodes % 256 == 0:
            if time.monotonic() - self.start > lim.seconds:
                raise _BudgetHit

    def candidates(self, cell) -> list:
        # masks sharing the most curves with placed neighbours first
        near = 0
        for nb in neighbours(cell):
            near |= self.occ.get(nb, 0)
        return sorted(self.free, key=lambda m: (-popcount(m & near), m))

    def canonical_prefix(self) -> bool:
        labels = self.labels
        for table in self.perms:
            for m in labels:
                pm = table[m]
                if pm != m:
                    if pm < m:
                        return False
                    break
        return True

    def feasible(self, universe, open_cells, far_open: bool) -> bool:
        """Necessary conditions for completing the partial labelling.

        ``universe`` holds every cell decided or pending; cells outside it are
        "far". Far cells count as open when ``far_open`` (growth search), and
        always connect to infinity.
        """
        occ = self.occ
        rim = [c for c in open_cells if any(nb not in universe for nb in neighbours(c))]
        for i in range(self.n):
            bit = 1 << i
            members = [c for c, m in occ.items() if m & bit]
            if not members:
                continue
            # the curve can still become connected
            seen = {members[0]}
            todo = [members[0]]
            rim_used = False
            while todo:
                c = todo.pop()
                for nb in neighbours(c):
                    if nb in seen:
                        continue
                    m = occ.get(nb)
                    if m is not None:
                        if m & bit:
                            seen.add(nb)
                            todo.append(nb)
                    elif nb in open_cells:
                        seen.add(nb)
                        todo.append(nb)
                    elif far_open and nb not in universe and not rim_used:
                        rim_used = True
                        for r in rim:
                            if r not in seen:
                                seen.add(r)
                                todo.append(r)
            if any(c not in seen for c in members):
                return False
            # nothing outside the curve is trapped inside it
            if not self._reach_ok(universe, lambda c, m: m is not None and m & bit):
                return False
        # decided empty cells stay connected to the unbounded face
        return self._reach_ok(universe, lambda c, m: m is not None)

    def _reach_ok(self, universe, blocked) -> bool:
        occ = self.occ
        seen = set()
        todo = []
        for c in universe:
            if blocked(c, occ.get(c)):
                continue
            if any(nb not in universe for nb in neighbours(c)):
                seen.add(c)
                todo.append(c)
        while todo:
            c = todo.pop()
            for nb in neighbours(c):
                if nb in universe and nb not in seen and not blocked(nb, occ.get(nb)):
                    seen.add(nb)
                    todo.append(nb)
        return all(c in seen for c in universe if not blocked(c, occ.get(c)))


class _MinAreaSearch(_Search):
    def run(self):
        n = self.n
        self.total = full_mask(n)
        self.free = set(range(1, self.total))
        origin = (0, 0)
        self.seen = {origin}
        self.tick()
        self.occ[origin] = self.total
        self.labels.append(self.total)
        new = sorted(nb for nb in neighbours(origin))
        self.seen.update(new)
        self.grow(new)

    def grow(self, untried):
        if len(self.occ) == self.total:
            d = GridDiagram(self.n, self.occ)
            if is_minimum_area(d):
                self.accept(d)
            return
        untried = list(untried)
        while untried:
            c = untried.pop(0)
            new = sorted(nb for nb in neighbours(c) if nb not in self.seen)
            self.seen.update(new)
            child_open = untried + new
            open_set = set(child_open)
            for m in self.candidates(c):
                self.tick()
                self.occ[c] = m
                self.labels.append(m)
                self.free.discard(m)
                if self.canonical_prefix() and self.feasible(self.seen, open_set, True):
                    self.grow(child_open)
                self.free.add(m)
                self.labels.pop()
                del self.occ[c]
            self.seen.difference_update(new)


class _FillBoxSearch(_Search):
    def __init__(self, n, w, h, limits, symmetry):
        super().__init__(n, limits, symmetry)
        self.order = [(x, y) for y in range(h) for x in range(w)]
        self.box = frozenset(self.order)

    def run(self):
        self.free = set(range(1, full_mask(self.n) + 1))
        self.place(0)

    def place(self, k):
        if k == len(self.order):
            d = GridDiagram(self.n, self.occ)
            if validate_venn(d).overall:
                self.accept(d)
            return
        c = self.order[k]
        open_set = set(self.order[k + 1:])
        for m in self.candidates(c):
            self.tick()
            self.occ[c] = m
            self.labels.append(m)
            self.free.discard(m)
            if self.canonical_prefix() and self.feasible(self.box, open_set, False):
                self.place(k + 1)
            self.free.add(m)
            self.labels.pop()
            del self.occ[c]


def _check_n(n):
    if not isinstance(n, int) or not MIN_N <= n <= MAX_N:
        raise ValueError(f"search supports {MIN_N} <= n <= {MAX_N}, got {n!r}")


def _drive(search: _Search) -> SearchOutcome:
    try:
        search.run()
    except _Found as hit:
        status, diagram = "found", hit.diagram
    except _BudgetHit:
        status, diagram = "budget_hit", None
    else:
        status, diagram = "exhausted", None
    if diagram is not None and not validate_venn(diagram).overall:
        raise AssertionError("search returned a diagram that fails validation")
    return SearchOutcome(status, diagram, search.nodes, time.monotonic() - search.start)


def search_min_area(n: int, limits: SearchLimits | None = None, symmetry: bool = True) -> SearchOutcome:
    _check_n(n)
    return _drive(_MinAreaSearch(n, limits or SearchLimits(), symmetry))


def search_fill_box(n: int, w: int, h: int, limits: SearchLimits | None = None,
                    symmetry: bool = True) -> SearchOutcome:
    _check_n(n)
    if w < 1 or h < 1 or w * h != full_mask(n):
        raise ValueError(f"box {w}x{h} must have area 2^n - 1 = {full_mask(n)}")
    return _drive(_FillBoxSearch(n, w, h, limits or SearchLimits(), symmetry))


def all_min_area_solutions(n: int, symmetry: bool = True) -> list:
    """Every diagram the minimum-area search would accept, in search order."""
    _check_n(n)
    search = _MinAreaSearch(n, SearchLimits(), symmetry)
    search.collected = []
    search.run()
    return search.collected
