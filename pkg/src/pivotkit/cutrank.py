"""Cut-rank of vertex bipartitions and rank-connectivity certification.

The cut-rank of (X, V-X) is the GF(2) rank of the adjacency matrix
between the two sides.  A graph is k-rank-connected when no partition
(A, B) with |A|, |B| >= l has cut-rank below l, for any l in 1..k-1;
every graph is therefore 1-rank-connected.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import SubsetCapExceeded
from .gf2 import rank_bits
from .graph import Graph

HARD_SUBSET_CAP = 24
_ENV_CAP = "PIVOTKIT_MAX_SUBSET_N"


def subset_cap() -> int:
    """The enumeration cap: 24 vertices, loweable via PIVOTKIT_MAX_SUBSET_N."""
    cap = HARD_SUBSET_CAP
    raw = os.environ.get(_ENV_CAP)
    if raw is not None:
        try:
            cap = min(cap, int(raw))
        except ValueError:
            pass
    return cap


@dataclass(frozen=True)
class Separation:
    """A witness that a graph is not k-rank-connected for some k > order."""

    side_x: tuple[int, ...]
    order: int
    cutrank_value: int


def cut_rank(g: Graph, x_set: Iterable[int]) -> int:
    """GF(2) rank of the adjacency matrix between x_set and its complement."""
    xs = set(x_set)
    for v in xs:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    comp = [v for v in range(g.n) if v not in xs]
    rows = []
    for u in sorted(xs):
        mask = g.adj[u]
        bits = 0
        for idx, v in enumerate(comp):
            bits |= ((mask >> v) & 1) << idx
        rows.append(bits)
    return rank_bits(rows)


def _cut_rank_mask(g: Graph, mask: int) -> int:
    comp = [v for v in range(g.n) if not (mask >> v) & 1]
    rows = []
    m = mask
    while m:
        low = m & -m
        u = low.bit_length() - 1
        m ^= low
        au = g.adj[u]
        bits = 0
        for idx, v in enumerate(comp):
            bits |= ((au >> v) & 1) << idx
        rows.append(bits)
    return rank_bits(rows)


def find_low_rank_separation(g: Graph, k: int) -> Optional[Separation]:
    """First separation of rank l for some l in 1..k-1, or None.

    Enumerates l ascending, then |X| ascending (only the smaller side,
    by the X <-> V-X symmetry), then subsets lexicographically, so the
    returned witness is deterministic.  Raises SubsetCapExceeded when
    the vertex count is over the enumeration cap.
    """
    n = g.n
    cap = subset_cap()
    if n > cap:
        raise SubsetCapExceeded(f"{n} vertices exceeds the subset cap {cap}")
    # Cache cut-ranks: each partition is visited once per l.
    cache: dict[int, int] = {}

    def cr(mask: int) -> int:
        val = cache.get(mask)
        if val is None:
            val = _cut_rank_mask(g, mask)
            cache[mask] = val
        return val

    for order in range(1, k):
        if 2 * order > n:
            break  # both sides must have at least `order` vertices
        for size in range(order, n // 2 + 1):
            for subset in combinations(range(n), size):
                if 2 * size == n and subset[0] != 0:
                    continue  # balanced splits are enumerated once
                mask = 0
                for v in subset:
                    mask |= 1 << v
                value = cr(mask)
                if value < order:
                    return Separation(subset, order, value)
    return None
