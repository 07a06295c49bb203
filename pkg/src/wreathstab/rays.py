"""Ray partitions of the table T_K and the Betti numbers they index.

A cell ``(i, j)`` of T_K (1-indexed row ``i``, column ``j``) is the ``j``-th
point of the ``i``-th vertical cluster.  Cells are ordered lexicographically.
Each ray partition ``Q`` contributes one free generator ``u_Q`` of the integral
cohomology of the vertical configuration space, in degree
``p * (r - agility) + (q - 1) * (|K| - length)``.
"""
from __future__ import annotations

import json
import logging
import os
from collections import defaultdict
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Iterable, Iterator, Sequence

from .partitions import enumerate_set_partitions

log = logging.getLogger(__name__)

DEFAULT_MAX_CELLS = 12

Cell = tuple[int, int]


class CapExceededError(RuntimeError):
    """A brute-force or enumeration cap would be exceeded."""


def default_max_cells() -> int:
    return int(os.environ.get("WREATHSTAB_MAX_CELLS", DEFAULT_MAX_CELLS))


@dataclass(frozen=True)
class ClusterType:
    """Cluster sizes ``K = (k_1, ..., k_r)``; ``r = 0`` is allowed."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(k) for k in self.sizes)
        if any(k < 1 for k in sizes):
            raise ValueError(f"cluster sizes must be positive: {sizes}")
        object.__setattr__(self, "sizes", sizes)

    @classmethod
    def uniform(cls, k: int, n: int) -> "ClusterType":
        return cls((k,) * n)

    @property
    def r(self) -> int:
        return len(self.sizes)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def cells(self) -> list[Cell]:
        return [(i, j) for i, k in enumerate(self.sizes, start=1) for j in range(1, k + 1)]


@dataclass(frozen=True)
class RayPartition:
    """Rays ``Q_1..Q_l``; each ray lists its cells in ray order.

    Rays are sorted by their lexicographic minimum, and each ray starts with
    that minimum.
    """

    parts: tuple[tuple[Cell, ...], ...]

    def __post_init__(self):
        parts = tuple(tuple(tuple(c) for c in part) for part in self.parts)
        for part in parts:
            if not part:
                raise ValueError("rays must be nonempty")
            if part[0] != min(part):
                raise ValueError(f"ray {part} does not start at its minimum")
        mins = [part[0] for part in parts]
        if mins != sorted(mins) or len(set(mins)) != len(mins):
            raise ValueError("rays must be indexed by increasing minima")
        flat = [c for part in parts for c in part]
        if len(flat) != len(set(flat)):
            raise ValueError("rays overlap")
        object.__setattr__(self, "parts", parts)

    def covers(self, K: ClusterType) -> bool:
        return sorted(c for part in self.parts for c in part) == K.cells()

    def to_json(self) -> list:
        return [[list(c) for c in part] for part in self.parts]


def length(Q: RayPartition) -> int:
    return len(Q.parts)


def _agility_of_blocks(blocks: Iterable[Iterable[Cell]]) -> int:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owner: dict[int, int] = {}
    count = 0
    for b, block in enumerate(blocks):
        parent[b] = b
        count += 1
        for row, _ in block:
            if row in owner:
                ra, rb = find(owner[row]), find(b)
                if ra != rb:
                    parent[rb] = ra
                    count -= 1
            else:
                owner[row] = b
    return count


def agility(Q: RayPartition, K: ClusterType | None = None) -> int:
    """Components after joining any two rays that meet a common row."""
    if K is not None and not Q.covers(K):
        raise ValueError("ray partition does not cover T_K")
    return _agility_of_blocks(Q.parts)


def _degree(r: int, total: int, agil: int, ell: int, p: int, q: int) -> int:
    return p * (r - agil) + (q - 1) * (total - ell)


def degree(Q: RayPartition, K: ClusterType, p: int, q: int) -> int:
    _check_pq(p, q)
    return _degree(K.r, K.total, agility(Q, K), length(Q), p, q)


def _check_pq(p: int, q: int) -> None:
    if p < 0:
        raise ValueError("p must be nonnegative")
    if q < 1:
        raise ValueError("q must be at least 1")


def _check_cap(K: ClusterType, max_cells: int | None) -> None:
    cap = default_max_cells() if max_cells is None else max_cells
    if K.total > cap:
        raise CapExceededError(f"|K| = {K.total} exceeds the cell cap {cap}")
    if max_cells is not None and max_cells > DEFAULT_MAX_CELLS and K.total > DEFAULT_MAX_CELLS:
        log.warning("enumerating %d cells beyond the default cap of %d", K.total, DEFAULT_MAX_CELLS)


def _min_length(K: ClusterType, q: int, d: int) -> int:
    # d >= (q-1)(|K| - l) because the agility term is nonnegative
    return max(0, K.total - d // (q - 1))


def _set_partitions_of_table(K: ClusterType, min_blocks: int = 0) -> Iterator[tuple[tuple[Cell, ...], ...]]:
    cells = K.cells()
    for blocks in enumerate_set_partitions(len(cells), min_blocks=min_blocks):
        yield tuple(tuple(cells[x - 1] for x in b) for b in blocks)


def enumerate_ray_partitions(
    K: ClusterType,
    filter: tuple[int, int, int] | None = None,
    max_cells: int | None = None,
) -> Iterator[RayPartition]:
    """Every ray partition of T_K exactly once.

    Outer loop: set partitions of T_K (blocks by minimum).  Inner loop: the
    ``(|block| - 1)!`` orders of each block with the minimum pinned first.
    ``filter=(p, q, d)`` keeps only generators of degree ``d``; for ``q >= 2``
    set partitions that are too short to reach degree ``d`` are pruned before
    the orders are expanded.
    """
    _check_cap(K, max_cells)
    min_blocks = 0
    if filter is not None:
        p, q, d = filter
        _check_pq(p, q)
        if q >= 2:
            min_blocks = _min_length(K, q, d)
    for blocks in _set_partitions_of_table(K, min_blocks):
        if filter is not None and _degree(K.r, K.total, _agility_of_blocks(blocks), len(blocks), p, q) != d:
            continue
        orders = [[(b[0],) + tail for tail in permutations(b[1:])] for b in blocks]
        yield from _expand(orders)


def _expand(orders: list[list[tuple[Cell, ...]]]) -> Iterator[RayPartition]:
    def rec(i: int, acc: list[tuple[Cell, ...]]) -> Iterator[RayPartition]:
        if i == len(orders):
            yield RayPartition(tuple(acc))
            return
        for o in orders[i]:
            acc.append(o)
            yield from rec(i + 1, acc)
            acc.pop()

    return rec(0, [])


def _weight(blocks: Sequence[Sequence[Cell]]) -> int:
    w = 1
    for b in blocks:
        w *= factorial(len(b) - 1)
    return w


def betti(K: ClusterType, p: int, q: int, d: int, max_cells: int | None = None) -> int:
    """Rank of H^d of the vertical configuration space of cluster type K.

    Counts ray partitions of degree ``d``.  Ray orders of a block never change
    the degree, so each set partition is weighted by its number of orders
    instead of being expanded.
    """
    _check_pq(p, q)
    if d < 0:
        raise ValueError("d must be nonnegative")
    _check_cap(K, max_cells)
    min_blocks = _min_length(K, q, d) if q >= 2 else 0
    total = 0
    for blocks in _set_partitions_of_table(K, min_blocks):
        if _degree(K.r, K.total, _agility_of_blocks(blocks), len(blocks), p, q) == d:
            total += _weight(blocks)
    return total


def poincare_table(K: ClusterType, p: int, q: int, max_cells: int | None = None) -> dict[int, int]:
    """Ranks by degree from one unfiltered pass; only nonzero degrees appear."""
    _check_pq(p, q)
    _check_cap(K, max_cells)
    table: dict[int, int] = defaultdict(int)
    for blocks in _set_partitions_of_table(K):
        table[_degree(K.r, K.total, _agility_of_blocks(blocks), len(blocks), p, q)] += _weight(blocks)
    return dict(sorted(table.items()))


def stream_json(rays: Iterable[RayPartition]) -> Iterator[str]:
    """One JSON array per ray partition: parts as lists of ``[row, column]``."""
    for Q in rays:
        yield json.dumps(Q.to_json(), separators=(",", ":"))
