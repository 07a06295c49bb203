"""Characters of S_k wr S_n: class functions, induction and the irreducibles.

Irreducibles are labelled by multipartitions: one partition per irreducible
of S_k, listed in :func:`wreathstab.partitions.irreducible_order` (trivial
``(k,)`` first), with sizes summing to ``n``.

Character values are computed only at brute-force scale, from explicit
representation matrices; outside that range only labels, dimensions and
Pieri decompositions are offered.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import factorial, prod
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .partitions import (
    Partition,
    count_standard_tableaux,
    enumerate_partitions,
    horizontal_strip_additions,
    irreducible_order,
    validate_partition,
    young_natural_matrix,
)
from .wreath import (
    TypeMatrix,
    WreathElement,
    all_types,
    class_size,
    conjugacy_classes_bruteforce,
    element_list,
    group_order,
    type_of,
)

IrrepLabel = tuple[Partition, ...]


@dataclass(frozen=True)
class ClassFunction:
    """Exact rational values on every conjugacy class of S_k wr S_n."""

    k: int
    n: int
    values: Mapping[TypeMatrix, Fraction] = field(hash=False)

    def __post_init__(self):
        vals = {t: Fraction(v) for t, v in self.values.items()}
        expected = set(all_types(self.k, self.n))
        if set(vals) != expected:
            raise ValueError("class function must be defined on every class")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_callable(cls, k: int, n: int, func: Callable[[TypeMatrix], object]) -> "ClassFunction":
        return cls(k, n, {t: Fraction(func(t)) for t in all_types(k, n)})

    @classmethod
    def constant(cls, k: int, n: int, c=1) -> "ClassFunction":
        return cls.from_callable(k, n, lambda t: c)

    def __call__(self, t: TypeMatrix) -> Fraction:
        return self.values[t]

    @property
    def degree(self) -> Fraction:
        """Value at the identity class."""
        return self.values[_identity_type(self.k, self.n)]

    def _same(self, other: "ClassFunction") -> None:
        if (self.k, self.n) != (other.k, other.n):
            raise ValueError("class functions live on different groups")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._same(other)
        return ClassFunction(self.k, self.n, {t: v + other.values[t] for t, v in self.values.items()})

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._same(other)
        return ClassFunction(self.k, self.n, {t: v - other.values[t] for t, v in self.values.items()})

    def __mul__(self, other) -> "ClassFunction":
        if isinstance(other, ClassFunction):
            self._same(other)
            return ClassFunction(self.k, self.n, {t: v * other.values[t] for t, v in self.values.items()})
        c = Fraction(other)
        return ClassFunction(self.k, self.n, {t: v * c for t, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return (self.k, self.n) == (other.k, other.n) and self.values == other.values

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values.values())


def _identity_type(k: int, n: int) -> TypeMatrix:
    return TypeMatrix.from_counts(k, {((1,) * k, 1): n} if n else {})


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """(1/|G|) sum over classes of size * f * g; values are real."""
    f._same(g)
    total = sum(class_size(t) * v * g.values[t] for t, v in f.values.items())
    return Fraction(total, group_order(f.k, f.n))


# --- labels and dimensions -------------------------------------------------


def validate_label(k: int, label: Sequence[Sequence[int]], n: int | None = None) -> IrrepLabel:
    r = len(irreducible_order(k))
    if len(label) != r:
        raise ValueError(f"a label for S_{k} wr S_n needs {r} components, got {len(label)}")
    out = tuple(validate_partition(c) for c in label)
    if n is not None and sum(map(sum, out)) != n:
        raise ValueError(f"label {out} has total {sum(map(sum, out))}, expected {n}")
    return out


def irrep_labels(k: int, n: int) -> list[IrrepLabel]:
    """All multipartitions of ``n`` with one component per S_k irreducible."""
    r = len(irreducible_order(k))
    out: list[IrrepLabel] = []

    def rec(i: int, left: int, acc: list[Partition]) -> None:
        if i == r - 1:
            for lam in enumerate_partitions(left):
                out.append(tuple(acc + [lam]))
            return
        for size in range(left, -1, -1):
            for lam in enumerate_partitions(size):
                rec(i + 1, left - size, acc + [lam])

    rec(0, n, [])
    return out


def irrep_dimension(k: int, label: Sequence[Sequence[int]]) -> int:
    """(n!/prod n_rho!) * prod (dim V_rho)^n_rho * prod f^label(rho)."""
    label = validate_label(k, label)
    sizes = [sum(c) for c in label]
    n = sum(sizes)
    dim = factorial(n)
    for rho, lam, size in zip(irreducible_order(k), label, sizes):
        dim = dim // factorial(size) * count_standard_tableaux(rho) ** size * count_standard_tableaux(lam)
    return dim


# --- explicit construction -------------------------------------------------


def _young(shape: Partition, perm) -> np.ndarray:
    if not shape:
        return np.ones((1, 1), dtype=np.int64)
    return young_natural_matrix(shape, tuple(perm))


def _blocks(sizes: Sequence[int]) -> list[range]:
    out, start = [], 0
    for s in sizes:
        out.append(range(start, start + s))
        start += s
    return out


def _in_young_subgroup(x: WreathElement, blocks: Sequence[range]) -> bool:
    return all(x.pi[i] in b for b in blocks for i in b)


def _restrict_perm(pi, block: range) -> tuple[int, ...]:
    return tuple(pi[i] - block.start for i in block)


def tensor_factor_matrix(k: int, factors: Sequence[Partition], x: WreathElement) -> np.ndarray:
    """Matrix of ``x`` on the tensor product of Young modules ``factors[i]``.

    ``(alpha, pi)`` sends ``d_1 (x) ... (x) d_n`` to
    ``alpha(1) d_{pi^-1(1)} (x) ... (x) alpha(n) d_{pi^-1(n)}``; it requires
    ``factors[pi(i)] == factors[i]``.
    """
    n = x.n
    if any(factors[x.pi[i]] != factors[i] for i in range(n)):
        raise ValueError("element does not stabilise the tensor factor pattern")
    mats = [_young(factors[i], x.alpha[i]) for i in range(n)]
    dims = [m.shape[0] for m in mats]
    total = prod(dims)
    out = np.zeros((total, total), dtype=np.int64)
    pinv = [0] * n
    for i, j in enumerate(x.pi):
        pinv[j] = i
    for col, b in enumerate(np.ndindex(*dims) if n else [()]):
        pieces = [mats[i][:, b[pinv[i]]] for i in range(n)]
        out[:, col] = reduce(np.kron, pieces, np.ones(1, dtype=np.int64))
    return out


def inertia_character(k: int, label: IrrepLabel) -> Callable[[WreathElement], int]:
    """Character of the twisted tensor product on the inertia subgroup.

    Positions are grouped in blocks, one per S_k irreducible with
    ``n_rho = |label(rho)|`` positions each.  The value is
    ``tr(D*(x)) * tr(D'(pi))`` with both traces taken on explicit matrices.
    """
    order = irreducible_order(k)
    sizes = [sum(c) for c in label]
    blocks = _blocks(sizes)
    factors = [rho for rho, s in zip(order, sizes) for _ in range(s)]

    def chi(x: WreathElement) -> int:
        base = int(np.trace(tensor_factor_matrix(k, factors, x)))
        top = 1
        for lam, block in zip(label, blocks):
            if block:
                top *= int(np.trace(_young(lam, _restrict_perm(x.pi, block))))
        return base * top

    return chi


@lru_cache(maxsize=None)
def bruteforce_class_sizes(k: int, n: int, max_order: int | None = None) -> dict[TypeMatrix, int]:
    if n == 0:
        return {_identity_type(k, 0): 1}
    return {c.type: c.size for c in conjugacy_classes_bruteforce(k, n, max_order)}


def _induce(
    k: int, n: int, subgroup: Iterable[WreathElement], values: Callable[[WreathElement], object],
    max_order: int | None = None,
) -> ClassFunction:
    """Ind from a subgroup ``H`` given by its element list.

    chi(t) = (1/|H|) sum_{g in G} chi0(g x g^-1) with chi0 zero off H; grouping
    the sum by H-elements of type t gives |G| / (|H| |C_t|) sum_{h in H cap C_t}.
    """
    sizes = bruteforce_class_sizes(k, n, max_order)
    sums: dict[TypeMatrix, Fraction] = {t: Fraction(0) for t in sizes}
    order_h = 0
    for h in subgroup:
        order_h += 1
        sums[type_of(h, k)] += Fraction(values(h))
    g = group_order(k, n)
    return ClassFunction(k, n, {t: s * g / (order_h * sizes[t]) for t, s in sums.items()})


def _young_subgroup_elements(k: int, sizes: Sequence[int], max_order: int | None = None):
    from itertools import product as iproduct

    from .wreath import check_group_cap

    check_group_cap(k, sum(sizes), max_order)
    parts = [element_list(k, s, max_order) if s else (WreathElement((), ()),) for s in sizes]
    offsets = [sum(sizes[:i]) for i in range(len(sizes))]
    for combo in iproduct(*parts):
        alpha: tuple = ()
        pi: tuple = ()
        for x, off in zip(combo, offsets):
            alpha += x.alpha
            pi += tuple(off + j for j in x.pi)
        yield WreathElement(alpha, pi)


@lru_cache(maxsize=None)
def irreducible_character(k: int, n: int, label: IrrepLabel, max_order: int | None = None) -> ClassFunction:
    """Character of Ind_{S_k wr S_mu}^{S_k wr S_n} (D* twisted (x) D')."""
    label = validate_label(k, label, n)
    sizes = [sum(c) for c in label]
    chi0 = inertia_character(k, label)
    return _induce(k, n, _young_subgroup_elements(k, sizes, max_order), chi0, max_order)


def character_table(k: int, n: int, max_order: int | None = None) -> dict[IrrepLabel, ClassFunction]:
    return {lab: irreducible_character(k, n, lab, max_order) for lab in irrep_labels(k, n)}


def regular_character(k: int, n: int) -> ClassFunction:
    e = _identity_type(k, n)
    return ClassFunction.from_callable(k, n, lambda t: group_order(k, n) if t == e else 0)


def trivial_character(k: int, n: int) -> ClassFunction:
    return ClassFunction.constant(k, n, 1)


def induce_class_function(
    f: ClassFunction, n: int, g: ClassFunction | None = None, max_order: int | None = None
) -> ClassFunction:
    """Ind from (S_k wr S_d) x (S_k wr S_{n-d}) of ``f`` (x) ``g`` (default trivial)."""
    k, d = f.k, f.n
    if n < d:
        raise ValueError("n must be at least the degree of f")
    if g is not None and (g.k, g.n) != (k, n - d):
        raise ValueError("second factor must live on S_k wr S_{n-d}")

    def value(h: WreathElement) -> Fraction:
        first = WreathElement(h.alpha[:d], h.pi[:d])
        second = WreathElement(h.alpha[d:], tuple(j - d for j in h.pi[d:]))
        v = f(type_of(first, k))
        if g is not None:
            v *= g(type_of(second, k))
        return v

    return _induce(k, n, _young_subgroup_elements(k, [d, n - d], max_order), value, max_order)


def restricted_inner_product(
    chi: ClassFunction, f: ClassFunction, g: ClassFunction | None = None, max_order: int | None = None
) -> Fraction:
    """<Res chi, f (x) g> over (S_k wr S_d) x (S_k wr S_{n-d}), g trivial by default."""
    k, n, d = chi.k, chi.n, f.n
    total = Fraction(0)
    order_h = 0
    for h in _young_subgroup_elements(k, [d, n - d], max_order):
        order_h += 1
        first = WreathElement(h.alpha[:d], h.pi[:d])
        second = WreathElement(h.alpha[d:], tuple(j - d for j in h.pi[d:]))
        v = chi(type_of(h, k)) * f(type_of(first, k))
        if g is not None:
            v *= g(type_of(second, k))
        total += v
    return total / order_h


def decompose(f: ClassFunction, max_order: int | None = None) -> dict[IrrepLabel, int]:
    """Multiplicities of the irreducibles in the character ``f``.

    Raises ``ValueError`` when some multiplicity is negative or not an
    integer, i.e. when ``f`` is not a character.
    """
    out: dict[IrrepLabel, int] = {}
    for label, chi in character_table(f.k, f.n, max_order).items():
        m = inner_product(f, chi)
        if m.denominator != 1 or m < 0:
            raise ValueError(f"not a character: multiplicity of {label} is {m}")
        if m:
            out[label] = int(m)
    return out


def pieri_decompose_MT(k: int, d: int, delta: Sequence[Sequence[int]], n: int) -> list[IrrepLabel]:
    """Constituents of Ind(W_delta (x) trivial) from S_k wr S_d x S_k wr S_{n-d}.

    One label per horizontal strip of ``n - d`` boxes added to the trivial
    component; the remaining components are unchanged.
    """
    delta = validate_label(k, delta, d)
    if n < d:
        raise ValueError("n must be at least d")
    return [(lam,) + delta[1:] for lam in horizontal_strip_additions(delta[0], n - d)]


def label_to_json(label: IrrepLabel) -> list[list[int]]:
    return [list(c) for c in label]


__all__ = [
    "ClassFunction",
    "IrrepLabel",
    "bruteforce_class_sizes",
    "character_table",
    "decompose",
    "induce_class_function",
    "inner_product",
    "irrep_dimension",
    "irrep_labels",
    "irreducible_character",
    "pieri_decompose_MT",
    "regular_character",
    "restricted_inner_product",
    "trivial_character",
]
