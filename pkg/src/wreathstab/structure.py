"""Free modules M(d), M(T): ranks, character polynomials, generator recovery.

A sequence of ranks ``r_n`` of a module of the form sum_d M(T_d) satisfies
``r_n = sum_d C(n, d) t_d`` with ``t_d = rank T_d``; :class:`GeneratorRankRegressor`
inverts that relation exactly on a window and extrapolates.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._validation import check_int_sequence, check_nonneg_int
from .characters import ClassFunction
from .partitions import Partition, class_order, validate_partition
from .wreath import TypeMatrix

Variable = tuple[Partition, int]  # (S_k class, cycle length m): X_m^C
Monomial = tuple[tuple[Variable, int], ...]


def md_hom_count(k: int, d: int, n: int) -> int:
    """|Hom(d, n)| in FI_G for G = S_k: (n!/(n-d)!) * (k!)^d, zero when n < d."""
    for v in (k, d, n):
        check_nonneg_int(v)
    if n < d:
        return 0
    return factorial(n) // factorial(n - d) * factorial(k) ** d


def mt_rank(k: int, d: int, dim_t: int, n: int) -> int:
    return comb(n, d) * dim_t if n >= d else 0


class CharacterPolynomial:
    """Polynomial over Q in the coloured cycle-counting variables X_m^C.

    ``terms`` maps monomials (sorted tuples of ``((C, m), exponent)``) to
    rational coefficients.  The grading gives X_m^C degree ``m``.
    """

    def __init__(self, k: int, terms: Mapping[Monomial, Fraction] | None = None):
        self.k = k
        classes = set(class_order(k))
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            for (cls_, m), e in mono:
                if cls_ not in classes or m < 1 or e < 1:
                    raise ValueError(f"bad monomial {mono} for k={k}")
            if c:
                key = tuple(sorted(mono, key=_var_key(k)))
                clean[key] = clean.get(key, Fraction(0)) + c
        self.terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def constant(cls, k: int, c) -> "CharacterPolynomial":
        return cls(k, {(): Fraction(c)})

    @classmethod
    def variable(cls, k: int, cls_: Sequence[int], m: int) -> "CharacterPolynomial":
        return cls(k, {(((tuple(cls_), m), 1),): Fraction(1)})

    def __add__(self, other: "CharacterPolynomial") -> "CharacterPolynomial":
        self._same(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return CharacterPolynomial(self.k, out)

    def __mul__(self, other) -> "CharacterPolynomial":
        if not isinstance(other, CharacterPolynomial):
            c = Fraction(other)
            return CharacterPolynomial(self.k, {m: v * c for m, v in self.terms.items()})
        self._same(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                exps = dict(m1)
                for var, e in m2:
                    exps[var] = exps.get(var, 0) + e
                mono = tuple(exps.items())
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return CharacterPolynomial(self.k, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharacterPolynomial):
            return NotImplemented
        return self.k == other.k and self._canonical() == other._canonical()

    def __repr__(self) -> str:
        return f"CharacterPolynomial(k={self.k}, {self.to_text()})"

    def _same(self, other: "CharacterPolynomial") -> None:
        if self.k != other.k:
            raise ValueError("polynomials for different k")

    def _canonical(self) -> list:
        order = _var_key(self.k)
        return sorted(
            (tuple(sorted(m, key=order)), c) for m, c in self.terms.items()
        )

    @property
    def degree(self) -> int:
        """Graded degree; -1 for the zero polynomial."""
        return max((sum(m * e for (_, m), e in mono) for mono in self.terms), default=-1)

    def __call__(self, t: TypeMatrix) -> Fraction:
        return evaluate_charpoly(self, t)

    def to_json(self) -> list[dict]:
        rows = []
        for mono, c in self._canonical():
            rows.append({
                "vars": [{"class": list(cls_), "cycleLength": m, "exponent": e} for (cls_, m), e in mono],
                "coeff": f"{c.numerator}/{c.denominator}",
            })
        return rows

    @classmethod
    def from_json(cls, k: int, data: Iterable[dict]) -> "CharacterPolynomial":
        terms = {}
        for row in data:
            mono = tuple(((tuple(v["class"]), int(v["cycleLength"])), int(v["exponent"])) for v in row["vars"])
            terms[mono] = terms.get(mono, Fraction(0)) + Fraction(row["coeff"])
        return cls(k, terms)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for mono, c in self._canonical():
            factors = "*".join(
                f"X{m}[{''.join(map(str, cls_))}]" + (f"^{e}" if e > 1 else "") for (cls_, m), e in mono
            )
            mag = abs(c)
            body = factors if factors and mag == 1 else "*".join(filter(None, [str(mag), factors]))
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out


def _var_key(k: int):
    rank = {c: i for i, c in enumerate(class_order(k))}
    return lambda item: (item[0][1], rank[item[0][0]])


def binomial_choose(k: int, var: Variable, c: int) -> CharacterPolynomial:
    """X (X - 1) ... (X - c + 1) / c! in the single variable ``var``."""
    x = CharacterPolynomial.variable(k, var[0], var[1])
    out = CharacterPolynomial.constant(k, 1)
    for j in range(c):
        out = out * (x + CharacterPolynomial.constant(k, -j))
    return out * Fraction(1, factorial(c))


def character_polynomial_MT(chi_t: ClassFunction) -> CharacterPolynomial:
    """sum over classes s of S_k wr S_d of chi_T(s) * prod C(X_m^C, a_{C,m}(s)).

    Cycle lengths run over 1..d; a length-0 factor would be vacuous.
    """
    k = chi_t.k
    total = CharacterPolynomial(k)
    for t, value in chi_t.values.items():
        if not value:
            continue
        term = CharacterPolynomial.constant(k, value)
        for var, a in t.entries:
            term = term * binomial_choose(k, var, a)
        total = total + term
    return total


def evaluate_charpoly(P: CharacterPolynomial, t: TypeMatrix) -> Fraction:
    if P.k != t.k:
        raise ValueError(f"polynomial for k={P.k} evaluated on a type for k={t.k}")
    counts = t.as_dict()
    total = Fraction(0)
    for mono, c in P.terms.items():
        v = c
        for var, e in mono:
            v *= counts.get(var, 0) ** e
        total += v
    return total


# --- binomial transform ----------------------------------------------------


def inverse_binomial_transform(ranks: Sequence[int]) -> list[int]:
    """t_d = sum_{j<=d} (-1)^(d-j) C(d, j) r_j; negative values are kept."""
    r = check_int_sequence(ranks, "ranks")
    return [sum((-1) ** (d - j) * comb(d, j) * r[j] for j in range(d + 1)) for d in range(len(r))]


def predict_rank(generators: Sequence[int], n: int) -> int:
    t = check_int_sequence(generators, "generators")
    check_nonneg_int(n)
    return sum(comb(n, d) * td for d, td in enumerate(t))


def forward_differences(seq: Sequence[int], order: int) -> list[int]:
    out = list(seq)
    for _ in range(order):
        out = [b - a for a, b in zip(out, out[1:])]
    return out


class GeneratorRankRegressor(BaseEstimator):
    """Recover FI_G-sharp generator ranks from a window of ranks r_0..r_N.

    ``fit`` takes ranks indexed by n = 0..N and stores ``generators_``
    (``t_0..t_N``) and ``generation_degree_`` (largest ``d`` with
    ``t_d != 0``, or -1 for the zero sequence).  ``predict`` evaluates
    ``sum_d C(n, d) t_d`` exactly.

    Parameters
    ----------
    max_degree : int or None
        If set, ``fit`` raises when a generator above this degree is nonzero.
    """

    def __init__(self, max_degree: int | None = None):
        self.max_degree = max_degree

    def fit(self, X, y=None):
        """``X`` is the rank window; pass ``(ns, ranks)`` as ``X, y`` instead
        when the window is given with explicit ``n`` values (must be 0..N)."""
        if y is None:
            ranks = check_int_sequence(X, "ranks")
        else:
            ns = check_int_sequence(X, "n values")
            if ns != list(range(len(ns))):
                raise ValueError("the rank window must cover n = 0..N contiguously")
            ranks = check_int_sequence(y, "ranks")
            if len(ranks) != len(ns):
                raise ValueError("X and y have different lengths")
        if not ranks:
            raise ValueError("need at least one rank")
        self.ranks_ = ranks
        self.generators_ = inverse_binomial_transform(ranks)
        nz = [d for d, t in enumerate(self.generators_) if t]
        self.generation_degree_ = max(nz, default=-1)
        self.negative_generators_ = [d for d, t in enumerate(self.generators_) if t < 0]
        if self.max_degree is not None and self.generation_degree_ > self.max_degree:
            raise ValueError(
                f"generation degree {self.generation_degree_} exceeds max_degree={self.max_degree}"
            )
        return self

    def predict(self, X) -> list[int]:
        check_is_fitted(self, "generators_")
        return [predict_rank(self.generators_, n) for n in check_int_sequence(X, "n values")]

    def transform(self, X=None) -> list[int]:
        check_is_fitted(self, "generators_")
        return list(self.generators_)

    def fit_transform(self, X, y=None) -> list[int]:
        return self.fit(X, y).transform()


# --- padding and stable ranges ---------------------------------------------


@dataclass(frozen=True)
class BelowThreshold:
    """The padded multipartition is undefined: L(lambda)_n = 0."""

    n: int
    threshold: int


def pad_threshold(label: Sequence[Sequence[int]]) -> int:
    comps = [validate_partition(c) for c in label]
    first = comps[0][0] if comps[0] else 0
    return sum(map(sum, comps)) + first


def pad_multipartition(label: Sequence[Sequence[int]], n: int) -> tuple[Partition, ...] | BelowThreshold:
    """Prepend a row of length ``n - |label|`` to the first (trivial) component.

    >>> pad_multipartition([[1], [1, 1], [2]], 7)
    ((2, 1), (1, 1), (2,))
    """
    comps = [validate_partition(c) for c in label]
    if not comps:
        raise ValueError("label needs at least one component")
    threshold = pad_threshold(comps)
    if n < threshold:
        return BelowThreshold(n, threshold)
    top = n - sum(map(sum, comps))
    first = ((top,) if top else ()) + comps[0]
    return (first,) + tuple(comps[1:])


def stable_ranges(gen_degree: int, q: int, d: int) -> dict[str, int]:
    """Onsets implied by generation degree ``g`` next to the general bounds.

    Raises ``ValueError`` if ``g`` exceeds floor(2d/(q-1)).
    """
    if q < 2:
        raise ValueError("stable ranges need q >= 2")
    check_nonneg_int(d)
    bound = 2 * d // (q - 1)
    g = max(gen_degree, 0)
    if g > bound:
        raise ValueError(f"generation degree {g} exceeds floor(2d/(q-1)) = {bound}")
    return {
        "repStabOnset": 2 * g,
        "repStabPaperBound": 4 * d // (q - 1),
        "unorderedOnset": g,
        "unorderedPaperBound": bound,
        "genDegPaperBound": bound,
    }


def generators_to_json(generators: Sequence[int]) -> str:
    return json.dumps([int(t) for t in generators])
