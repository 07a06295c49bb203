"""The wreath product S_k wr S_n as an explicit finite group.

Elements are pairs ``(alpha, pi)`` with ``alpha`` an n-tuple of permutations
of ``range(k)`` and ``pi`` a permutation of ``range(n)``; the product is

    (alpha, pi)(alpha', pi') = (alpha . (alpha' o pi^-1), pi o pi').

Everything here is brute force and exists as ground truth for the closed
formulas in :mod:`wreathstab.characters` and :mod:`wreathstab.structure`.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterator, NamedTuple

from .partitions import (
    Partition,
    Perm,
    centralizer_order_sk,
    class_order,
    compose,
    cycle_type,
    invert,
    partition_count,
    permutation_of_type,
)
from .rays import CapExceededError

DEFAULT_MAX_GROUP_ORDER = 10**6


def default_max_group_order() -> int:
    return int(os.environ.get("WREATHSTAB_MAX_GROUP_ORDER", DEFAULT_MAX_GROUP_ORDER))


def group_order(k: int, n: int) -> int:
    return factorial(k) ** n * factorial(n)


def check_group_cap(k: int, n: int, max_order: int | None = None) -> None:
    cap = default_max_group_order() if max_order is None else max_order
    if group_order(k, n) > cap:
        raise CapExceededError(f"|S_{k} wr S_{n}| = {group_order(k, n)} exceeds the cap {cap}")


class WreathElement(NamedTuple):
    alpha: tuple[Perm, ...]
    pi: Perm

    @property
    def k(self) -> int:
        return len(self.alpha[0]) if self.alpha else 0

    @property
    def n(self) -> int:
        return len(self.pi)


def identity(k: int, n: int) -> WreathElement:
    e = tuple(range(k))
    return WreathElement((e,) * n, tuple(range(n)))


def _check_same(x: WreathElement, y: WreathElement) -> None:
    if x.n != y.n or (x.n and x.k != y.k):
        raise ValueError("elements belong to different wreath products")


def multiply(x: WreathElement, y: WreathElement) -> WreathElement:
    _check_same(x, y)
    pinv = invert(x.pi)
    alpha = tuple(compose(x.alpha[i], y.alpha[pinv[i]]) for i in range(x.n))
    return WreathElement(alpha, compose(x.pi, y.pi))


def inverse(x: WreathElement) -> WreathElement:
    # (bar(alpha) o pi, pi^-1)
    return WreathElement(tuple(invert(x.alpha[x.pi[i]]) for i in range(x.n)), invert(x.pi))


def conjugate(g: WreathElement, x: WreathElement) -> WreathElement:
    """``g x g^-1``."""
    return multiply(multiply(g, x), inverse(g))


def elements(k: int, n: int, max_order: int | None = None) -> Iterator[WreathElement]:
    check_group_cap(k, n, max_order)
    sk = list(permutations(range(k)))
    for pi in permutations(range(n)):
        for alpha in product(sk, repeat=n):
            yield WreathElement(alpha, pi)


@lru_cache(maxsize=8)
def element_list(k: int, n: int, max_order: int | None = None) -> tuple[WreathElement, ...]:
    return tuple(elements(k, n, max_order))


def canonical_cycles(pi: Perm) -> list[tuple[int, ...]]:
    """Cycles of ``pi``, each led by its minimum, sorted by leader."""
    seen = [False] * len(pi)
    out = []
    for j in range(len(pi)):
        if seen[j]:
            continue
        cyc = []
        i = j
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = pi[i]
        out.append(tuple(cyc))
    return out


def cycle_products(x: WreathElement) -> list[tuple[int, Perm]]:
    """``(length, alpha(j) alpha(pi^-1 j) ... alpha(pi^-(l-1) j))`` per cycle."""
    pinv = invert(x.pi)
    k = x.k
    out = []
    for cyc in canonical_cycles(x.pi):
        g = tuple(range(k))
        j = cyc[0]
        for _ in range(len(cyc)):
            g = compose(g, x.alpha[j])
            j = pinv[j]
        out.append((len(cyc), g))
    return out


@dataclass(frozen=True)
class TypeMatrix:
    """Counts ``a[(C, m)]`` of length-m cycles whose cycle product lies in class C.

    ``entries`` is sorted by cycle length, then by the canonical class order
    (identity class first); zero counts are never stored.
    """

    k: int
    n: int
    entries: tuple[tuple[tuple[Partition, int], int], ...]

    @classmethod
    def from_counts(cls, k: int, counts: dict[tuple[Partition, int], int]) -> "TypeMatrix":
        rank = {c: i for i, c in enumerate(class_order(k))}
        for (c, m), a in counts.items():
            if c not in rank:
                raise ValueError(f"{c} is not a cycle type of S_{k}")
            if m < 1 or a < 0:
                raise ValueError("cycle lengths must be positive and counts nonnegative")
        items = sorted(((c, m), a) for (c, m), a in counts.items() if a)
        items.sort(key=lambda it: (it[0][1], rank[it[0][0]]))
        n = sum(m * a for (_, m), a in items)
        return cls(k, n, tuple(items))

    def count(self, cls_: Partition, m: int) -> int:
        return dict(self.entries).get((tuple(cls_), m), 0)

    def as_dict(self) -> dict[tuple[Partition, int], int]:
        return dict(self.entries)

    def to_json(self) -> list[dict]:
        return [{"gClass": list(c), "cycleLength": m, "count": a} for (c, m), a in self.entries]

    @classmethod
    def from_json(cls, k: int, data: list[dict]) -> "TypeMatrix":
        return cls.from_counts(k, {(tuple(e["gClass"]), int(e["cycleLength"])): int(e["count"]) for e in data})

    def label(self) -> str:
        """Compact text form: ``<class>@<length>x<count>`` joined by ``;``."""
        return ";".join(f"{'.'.join(map(str, c))}@{m}x{a}" for (c, m), a in self.entries)


def type_of(x: WreathElement, k: int | None = None) -> TypeMatrix:
    """Type matrix of ``x``; pass ``k`` when ``x`` lives in S_k wr S_0."""
    counts: dict[tuple[Partition, int], int] = {}
    for m, g in cycle_products(x):
        key = (cycle_type(g), m)
        counts[key] = counts.get(key, 0) + 1
    return TypeMatrix.from_counts(x.k if k is None else k, counts)


def all_types(k: int, n: int) -> list[TypeMatrix]:
    """Every type matrix of S_k wr S_n, one per conjugacy class."""
    colours = [(c, m) for m in range(1, n + 1) for c in class_order(k)]
    out: list[TypeMatrix] = []

    def rec(i: int, left: int, acc: dict) -> None:
        if left == 0:
            out.append(TypeMatrix.from_counts(k, dict(acc)))
            return
        if i == len(colours):
            return
        c, m = colours[i]
        for a in range(left // m, -1, -1):
            if a:
                acc[(c, m)] = a
            rec(i + 1, left - a * m, acc)
            acc.pop((c, m), None)

    rec(0, n, {})
    return out


def realize(t: TypeMatrix) -> WreathElement:
    """An element of the given type: consecutive cycles, colour on the leader."""
    k, n = t.k, t.n
    e = tuple(range(k))
    pi = list(range(n))
    alpha = [e] * n
    start = 0
    for (c, m), a in t.entries:
        g = permutation_of_type(c)
        for _ in range(a):
            for i in range(m):
                pi[start + i] = start + (i + 1) % m
            alpha[start] = g
            start += m
    return WreathElement(tuple(alpha), tuple(pi))


def centralizer_order(t: TypeMatrix) -> int:
    """prod over (C, m) of a! * (m * z_C)^a, z_C the S_k centralizer order."""
    out = 1
    for (c, m), a in t.entries:
        out *= factorial(a) * (m * centralizer_order_sk(c)) ** a
    return out


def class_size(t: TypeMatrix) -> int:
    return group_order(t.k, t.n) // centralizer_order(t)


def class_count_formula(s: int, n: int) -> int:
    """Sum over s-tuples (n_1..n_s) with total n of p(n_1)...p(n_s)."""
    if s < 1 or n < 0:
        raise ValueError("need s >= 1 and n >= 0")
    # coefficient of x^n in P(x)^s, P the partition generating function
    p = [partition_count(i) for i in range(n + 1)]
    poly = [1] + [0] * n
    for _ in range(s):
        poly = [sum(poly[j] * p[i - j] for j in range(i + 1)) for i in range(n + 1)]
    return poly[n]


@dataclass(frozen=True)
class ConjugacyClass:
    type: TypeMatrix
    size: int
    representative: WreathElement


def conjugacy_classes_bruteforce(k: int, n: int, max_order: int | None = None) -> list[ConjugacyClass]:
    """Orbits of the conjugation action, found exhaustively.

    The class type is read off the first element of each orbit; nothing
    about types is used to form the orbits.
    """
    group = element_list(k, n, max_order)
    seen: set[WreathElement] = set()
    out = []
    for x in group:
        if x in seen:
            continue
        orbit = {conjugate(g, x) for g in group}
        seen |= orbit
        out.append(ConjugacyClass(type_of(x), len(orbit), x))
    return out


def centralizer_order_bruteforce(x: WreathElement, max_order: int | None = None) -> int:
    return sum(1 for g in element_list(x.k, x.n, max_order) if multiply(g, x) == multiply(x, g))


def class_table_rows(k: int, n: int) -> list[tuple[TypeMatrix, int, int]]:
    return [(t, class_size(t), centralizer_order(t)) for t in all_types(k, n)]


def conjugacy_orbits(k: int, n: int, max_order: int | None = None) -> dict[WreathElement, int]:
    """Orbit index of every element under conjugation (no use of types)."""
    group = element_list(k, n, max_order)
    index: dict[WreathElement, int] = {}
    count = 0
    for x in group:
        if x in index:
            continue
        for g in group:
            index[conjugate(g, x)] = count
        count += 1
    return index


__all__ = [
    "ConjugacyClass",
    "TypeMatrix",
    "WreathElement",
    "all_types",
    "centralizer_order",
    "class_count_formula",
    "class_size",
    "conjugacy_classes_bruteforce",
    "conjugacy_orbits",
    "cycle_products",
    "elements",
    "group_order",
    "identity",
    "inverse",
    "multiply",
    "realize",
    "type_of",
]
