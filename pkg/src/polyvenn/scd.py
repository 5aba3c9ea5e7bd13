"""Symmetric chain decompositions of the Boolean lattice on n elements.

Subsets are bitmasks: element ``k`` (1-based) is bit ``k - 1``, printed as
letter ``A`` for element 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from math import comb
from typing import Tuple

from .core import mask_to_letters, popcount

Chain = Tuple[int, ...]


@dataclass(frozen=True)
class ChainDecomposition:
    n: int
    chains: Tuple[Chain, ...]

    def __post_init__(self):
        object.__setattr__(self, "chains", tuple(tuple(c) for c in self.chains))

    def __len__(self):
        return len(self.chains)

    def lengths(self) -> list:
        return sorted((len(c) for c in self.chains), reverse=True)


@dataclass(frozen=True)
class ScdReport:
    partition_ok: bool
    count_ok: bool
    eq1_ok: bool
    eq2_ok: bool

    @property
    def ok(self) -> bool:
        return self.partition_ok and self.count_ok and self.eq1_ok and self.eq2_ok


def _low_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def lex_compare(x: int, y: int) -> int:
    """Return -1 if ``x`` precedes ``y`` in the greedy lexicographic order, else 1.

    ``x`` precedes ``y`` when the least element of ``x - y`` is smaller than the
    least element of ``y - x``; a proper subset precedes its supersets.
    """
    if x == y:
        raise ValueError("lex_compare needs distinct subsets")
    only_x, only_y = x & ~y, y & ~x
    if not only_x:
        return -1
    if not only_y:
        return 1
    return -1 if _low_bit(only_x) < _low_bit(only_y) else 1


lex_key = cmp_to_key(lex_compare)


def _check_n(n: int):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"ground-set size must be a positive integer, got {n!r}")


def scd_christmas_tree(n: int) -> ChainDecomposition:
    _check_n(n)
    chains = [(0, 1)]
    for k in range(2, n + 1):
        bit = 1 << (k - 1)
        grown = []
        for chain in chains:
            if len(chain) > 1:
                grown.append(chain[1:])
            grown.append((chain[0],) + tuple(x | bit for x in chain))
        chains = grown
    return ChainDecomposition(n, chains)


def scd_aigner(n: int) -> ChainDecomposition:
    _check_n(n)
    uncovered = [set() for _ in range(n + 1)]
    for x in range(1 << n):
        uncovered[popcount(x)].add(x)
    chains = []
    for j in range(n + 1):
        while uncovered[j]:
            x = min(uncovered[j], key=lex_key)
            uncovered[j].discard(x)
            chain = [x]
            for rank in range(j + 1, n + 1):
                ups = [x | (1 << b) for b in range(n) if not x >> b & 1]
                ups = [u for u in ups if u in uncovered[rank]]
                if not ups:
                    break
                x = min(ups, key=lex_key)
                uncovered[rank].discard(x)
                chain.append(x)
            chains.append(tuple(chain))
    return ChainDecomposition(n, chains)


def validate_scd(dec: ChainDecomposition) -> ScdReport:
    n = dec.n
    seen = []
    for chain in dec.chains:
        seen.extend(chain)
    partition_ok = (
        len(seen) == 1 << n
        and len(set(seen)) == len(seen)
        and all(0 <= x < 1 << n for x in seen)
        and all(len(c) > 0 for c in dec.chains)
    )
    count_ok = len(dec.chains) == comb(n, n // 2)
    eq1_ok = all(
        a != b and a & b == a for c in dec.chains for a, b in zip(c, c[1:])
    )
    eq2_ok = all(
        popcount(c[i]) == n - popcount(c[len(c) - 1 - i])
        for c in dec.chains
        for i in range((len(c) + 1) // 2)
    )
    return ScdReport(partition_ok, count_ok, eq1_ok, eq2_ok)


def format_chain(chain: Chain) -> str:
    return ",".join(mask_to_letters(x) for x in chain)
