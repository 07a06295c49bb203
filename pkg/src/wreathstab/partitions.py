"""Integer partitions, set partitions, Stirling numbers and S_m characters.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the partition of 0.  Permutations are tuples ``p`` with
``p[i]`` the image of ``i`` (0-indexed) and compose as functions:
``(p * q)(i) = p[q[i]]``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import comb, factorial
from typing import Iterator, Sequence

import numpy as np

Partition = tuple[int, ...]
Perm = tuple[int, ...]


def validate_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(int(x) for x in parts)
    if any(x < 1 for x in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return parts


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order.

    >>> enumerate_partitions(3)
    [(3,), (2, 1), (1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n, n))


def partition_count(n: int) -> int:
    return len(_partitions(n, n))


def irreducible_order(k: int) -> list[Partition]:
    """Partitions of k indexing S_k irreducibles; ``(k,)`` (trivial) first."""
    return enumerate_partitions(k)


def class_order(k: int) -> list[Partition]:
    """Cycle types of S_k; the identity class ``(1,)*k`` first."""
    return enumerate_partitions(k)[::-1]


@lru_cache(maxsize=None)
def stirling2(n: int, t: int) -> int:
    """Number of partitions of an n-set into t nonempty blocks."""
    if n < 0 or t < 0:
        raise ValueError("arguments must be nonnegative")
    if n == t:
        return 1
    if n == 0 or t == 0 or t > n:
        return 0
    return t * stirling2(n - 1, t) + stirling2(n - 1, t - 1)


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    return comb(n, k)


def restricted_growth_strings(
    m: int, blocks: int | None = None, min_blocks: int = 0
) -> Iterator[tuple[int, ...]]:
    """Yield restricted growth strings of length ``m`` in lexicographic order.

    ``a[0] = 0`` and ``a[i] <= 1 + max(a[:i])``.  With ``blocks`` only strings
    using exactly that many labels are produced; ``min_blocks`` prunes any
    prefix that can no longer reach the requested number of blocks.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    lo = max(min_blocks, blocks or 0)
    hi = blocks if blocks is not None else m
    if m == 0:
        if lo == 0:
            yield ()
        return
    word = [0] * m

    def rec(i: int, used: int) -> Iterator[tuple[int, ...]]:
        remaining = m - i
        if used + remaining < lo:
            return
        if remaining == 0:
            if used <= hi:
                yield tuple(word)
            return
        for label in range(min(used + 1, hi)):
            word[i] = label
            yield from rec(i + 1, max(used, label + 1))

    word[0] = 0
    yield from rec(1, 1)


def enumerate_set_partitions(
    m: int, blocks: int | None = None, min_blocks: int = 0
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Set partitions of ``{1..m}``, blocks sorted by their minimum element.

    >>> list(enumerate_set_partitions(2))
    [((1, 2),), ((1,), (2,))]
    """
    for word in restricted_growth_strings(m, blocks, min_blocks):
        parts: list[list[int]] = [[] for _ in range(max(word, default=-1) + 1)]
        for element, label in enumerate(word, start=1):
            parts[label].append(element)
        yield tuple(tuple(b) for b in parts)


def contains(outer: Partition, inner: Partition) -> bool:
    return len(inner) <= len(outer) and all(a >= b for a, b in zip(outer, inner))


def horizontal_strip_additions(shape: Sequence[int], m: int) -> list[Partition]:
    """Shapes obtained from ``shape`` by adding ``m`` boxes, no two per column.

    Row ``i`` may grow up to the old length of row ``i-1``; one new row of
    length at most the old last row (or unbounded if ``shape`` is empty) may
    appear at the bottom.  Output is lexicographically decreasing.
    """
    shape = validate_partition(shape)
    if m < 0:
        raise ValueError("m must be nonnegative")
    rows = list(shape) + [0]
    caps = [None] + list(shape)
    out: list[Partition] = []

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == len(rows):
            if left == 0:
                out.append(tuple(x for x in acc if x > 0))
            return
        cap = left if caps[i] is None else min(left, caps[i] - rows[i])
        for add in range(cap, -1, -1):
            acc.append(rows[i] + add)
            rec(i + 1, left - add, acc)
            acc.pop()

    rec(0, m, [])
    return out


def _beta_set(shape: Partition) -> tuple[int, ...]:
    n = len(shape)
    return tuple(shape[i] + (n - 1 - i) for i in range(n))


def _from_beta(beta: Sequence[int]) -> Partition:
    b = sorted(beta, reverse=True)
    n = len(b)
    return tuple(x for x in (b[i] - (n - 1 - i) for i in range(n)) if x > 0)


@lru_cache(maxsize=None)
def _mn(shape: Partition, cycles: Partition) -> int:
    if not cycles:
        return 1 if not shape else 0
    r, rest = cycles[0], cycles[1:]
    beta = _beta_set(shape)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = [c for c in beta if c != b] + [target]
        total += (-1) ** height * _mn(_from_beta(new_beta), rest)
    return total


def murnaghan_nakayama(shape: Sequence[int], cycle_type: Sequence[int]) -> int:
    """Irreducible S_m character value chi^shape at cycle type ``cycle_type``.

    Rim hooks are removed through the beta-set (abacus) model; memoized on
    canonical forms.

    >>> murnaghan_nakayama((2, 1), (3,))
    -1
    """
    shape = validate_partition(shape)
    cycles = validate_partition(sorted(cycle_type, reverse=True))
    if sum(shape) != sum(cycles):
        raise ValueError(f"size mismatch: |{shape}| != |{cycles}|")
    return _mn(shape, cycles)


def cycle_type(perm: Perm) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[i] for i in q)


def invert(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def centralizer_order_sk(cycles: Partition) -> int:
    """Order of the centralizer in S_m of a permutation of cycle type ``cycles``."""
    out = 1
    for length in set(cycles):
        c = cycles.count(length)
        out *= length**c * factorial(c)
    return out


def permutation_of_type(cycles: Partition) -> Perm:
    """A fixed representative of the S_m class with the given cycle type."""
    perm: list[int] = []
    start = 0
    for length in cycles:
        perm.extend(start + (i + 1) % length for i in range(length))
        start += length
    return tuple(perm)


# --- standard tableaux and Young's natural representation -----------------

Tableau = tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def standard_tableaux(shape: Partition) -> tuple[Tableau, ...]:
    """Standard Young tableaux of ``shape`` with entries ``0..m-1``.

    Ordered by the row word (lexicographic on the tuple of rows).
    """
    shape = validate_partition(shape)
    m = sum(shape)
    out: list[Tableau] = []
    rows: list[list[int]] = [[] for _ in shape]

    def rec(v: int) -> None:
        if v == m:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i, length in enumerate(shape):
            if len(rows[i]) < length and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(v)
                rec(v + 1)
                rows[i].pop()

    rec(0)
    return tuple(sorted(out))


def count_standard_tableaux(shape: Sequence[int]) -> int:
    """Hook length formula."""
    shape = validate_partition(shape)
    m = sum(shape)
    conj = [sum(1 for r in shape if r > j) for j in range(shape[0])] if shape else []
    hooks = 1
    for i, r in enumerate(shape):
        for j in range(r):
            hooks *= (r - j - 1) + (conj[j] - i - 1) + 1
    return factorial(m) // hooks


def _tabloid(rows: Tableau) -> tuple[frozenset[int], ...]:
    return tuple(frozenset(r) for r in rows)


def _act(perm: Perm, t: Tableau) -> Tableau:
    return tuple(tuple(perm[v] for v in row) for row in t)


def _polytabloid(t: Tableau) -> dict[tuple[frozenset[int], ...], int]:
    columns = [tuple(row[j] for row in t if len(row) > j) for j in range(len(t[0]))] if t else []
    vec: dict[tuple[frozenset[int], ...], int] = {}
    for choice in product(*(permutations(range(len(c))) for c in columns)):
        relabel: dict[int, int] = {}
        sign = 1
        for col, order in zip(columns, choice):
            sign *= _perm_sign(order)
            for src, dst in zip(col, (col[o] for o in order)):
                relabel[src] = dst
        key = _tabloid(tuple(tuple(relabel[v] for v in row) for row in t))
        vec[key] = vec.get(key, 0) + sign
    return {k: v for k, v in vec.items() if v}


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    for length in cycle_type(tuple(p)):
        if length % 2 == 0:
            sign = -sign
    return sign


class _SpechtBasis:
    """Standard polytabloids of one shape plus an exact coordinate solver."""

    def __init__(self, shape: Partition):
        self.shape = shape
        self.tableaux = standard_tableaux(shape)
        vectors = [_polytabloid(t) for t in self.tableaux]
        keys = sorted({k for v in vectors for k in v}, key=lambda k: [sorted(r) for r in k])
        self.index = {k: i for i, k in enumerate(keys)}
        f = len(vectors)
        rows = [[Fraction(v.get(k, 0)) for v in vectors] for k in keys]
        # pick f tabloid rows on which the polytabloid matrix is invertible
        reduced: list[list[Fraction]] = []
        leads: list[int] = []
        self._rows_used: list[int] = []
        for r, row in enumerate(rows):
            if len(leads) == f:
                break
            cand = row[:]
            for prow, lead in zip(reduced, leads):
                if cand[lead]:
                    factor = cand[lead] / prow[lead]
                    cand = [a - factor * b for a, b in zip(cand, prow)]
            lead = next((c for c in range(f) if cand[c]), None)
            if lead is not None:
                reduced.append(cand)
                leads.append(lead)
                self._rows_used.append(r)
        self._inverse = _invert_fraction_matrix([rows[r] for r in self._rows_used])

    def coordinates(self, vec: dict) -> list[int]:
        dense = [Fraction(0)] * len(self.index)
        for k, v in vec.items():
            dense[self.index[k]] = Fraction(v)
        picked = [dense[r] for r in self._rows_used]
        coords = [sum(a * b for a, b in zip(row, picked)) for row in self._inverse]
        out = []
        for c in coords:
            if c.denominator != 1:
                raise ArithmeticError("non-integral coordinate in Young's natural basis")
            out.append(int(c))
        return out


def _invert_fraction_matrix(a: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def _specht(shape: Partition) -> _SpechtBasis:
    return _SpechtBasis(shape)


@lru_cache(maxsize=None)
def young_natural_matrix(shape: Partition, perm: Perm) -> np.ndarray:
    """Integer matrix of ``perm`` in Young's natural representation of ``shape``.

    Column ``j`` holds the coordinates of ``perm . e_T`` (``T`` the j-th
    standard tableau) in the standard polytabloid basis.  The map is a
    homomorphism for the composition convention of this module.
    """
    shape = validate_partition(shape)
    if len(perm) != sum(shape):
        raise ValueError("permutation degree does not match shape")
    basis = _specht(shape)
    f = len(basis.tableaux)
    mat = np.zeros((f, f), dtype=np.int64)
    for j, t in enumerate(basis.tableaux):
        mat[:, j] = basis.coordinates(_polytabloid(_act(perm, t)))
    mat.setflags(write=False)
    return mat


def adjacent_transposition(m: int, i: int) -> Perm:
    """The transposition s_i = (i, i+1) in 1-indexed notation."""
    p = list(range(m))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def young_natural_rep(shape: Sequence[int]) -> list[np.ndarray]:
    """Matrices of s_1..s_{m-1} in Young's natural representation."""
    shape = validate_partition(shape)
    m = sum(shape)
    if m < 1:
        raise ValueError("shape must be a partition of a positive integer")
    return [young_natural_matrix(shape, adjacent_transposition(m, i)) for i in range(1, m)]
