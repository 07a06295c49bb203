"""Exit criteria, runnable from pytest and from ``wreathstab selftest``.

Each criterion returns a :class:`CriterionResult`; exact equality everywhere,
and the wall-clock limit is part of the pass condition.
"""
from __future__ import annotations

import subprocess
import sys
import time
from dataclasses import dataclass
from itertools import permutations
from typing import Callable

from .characters import (
    character_table,
    decompose,
    induce_class_function,
    inner_product,
    irrep_labels,
    irreducible_character,
    pieri_decompose_MT,
)
from .partitions import class_order, enumerate_partitions, enumerate_set_partitions, stirling2
from .rays import ClusterType, betti
from .stability import PASS, analyze
from .structure import BelowThreshold, character_polynomial_MT, forward_differences, pad_multipartition
from .wreath import all_types, class_count_formula, conjugacy_orbits, element_list, group_order, type_of


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    limit: float | None

    def line(self, timing: bool = True) -> str:
        """One report line; ``timing=False`` gives a byte-stable form."""
        status = "PASS" if self.passed else "FAIL"
        out = f"[{status}] {self.number:2d}. {self.name}: {self.detail}"
        if timing:
            limit = f" (limit {self.limit:.0f}s)" if self.limit else ""
            out += f" [{self.seconds:.2f}s{limit}]"
        return out


def _run(number: int, name: str, limit: float | None, body: Callable[[], tuple[bool, str]]) -> CriterionResult:
    start = time.perf_counter()
    try:
        ok, detail = body()
    except Exception as exc:  # a crash is a failed criterion, reported as such
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed > limit:
        ok, detail = False, f"{detail}; exceeded time limit"
    return CriterionResult(number, name, ok, detail, elapsed, limit)


# --- 1 ---------------------------------------------------------------------


def permutations_by_cycles(n: int) -> dict[int, int]:
    """Exhaustive count of permutations of [n] by number of cycles."""
    counts: dict[int, int] = {}
    for perm in permutations(range(n)):
        seen = [False] * n
        cycles = 0
        for s in range(n):
            if not seen[s]:
                cycles += 1
                j = s
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
        counts[cycles] = counts.get(cycles, 0) + 1
    return counts


def criterion_1() -> tuple[bool, str]:
    checked = 0
    for n in range(0, 9):
        oracle = permutations_by_cycles(n)
        for d in range(0, 6):
            expected = oracle.get(n - d, 0)
            got = betti(ClusterType.uniform(1, n), 0, 2, d)
            if got != expected:
                return False, f"n={n}, d={d}: betti {got} != oracle {expected}"
            checked += 1
    return True, f"{checked} (n, d) pairs match the permutation oracle"


# --- 2 ---------------------------------------------------------------------


def criterion_2() -> tuple[bool, str]:
    pq = [(0, 2), (1, 2), (2, 3), (5, 7), (3, 2)]
    checked = 0
    for m in range(0, 11):
        for K in enumerate_partitions(m):
            for sizes in {K, K[::-1]}:
                for p, q in pq:
                    if betti(ClusterType(sizes), p, q, 0) != 1:
                        return False, f"K={sizes}, p={p}, q={q}: degree-0 rank is not 1"
                    checked += 1
    return True, f"{checked} (K, p, q) samples have rank 1 in degree 0"


# --- 3 ---------------------------------------------------------------------

CLASS_CASES = [(1, 3), (2, 2), (2, 3), (3, 2)]


def criterion_3() -> tuple[bool, str]:
    parts = []
    for k, n in CLASS_CASES:
        orbit = conjugacy_orbits(k, n)
        type_by_orbit: dict[int, object] = {}
        orbit_by_type: dict[object, int] = {}
        for x in element_list(k, n):
            t, o = type_of(x), orbit[x]
            if type_by_orbit.setdefault(o, t) != t:
                return False, f"(k,n)=({k},{n}): conjugate elements with different types"
            if orbit_by_type.setdefault(t, o) != o:
                return False, f"(k,n)=({k},{n}): equal types in different classes"
        count = len(type_by_orbit)
        formula = class_count_formula(len(class_order(k)), n)
        if count != formula or count != len(all_types(k, n)):
            return False, f"(k,n)=({k},{n}): {count} classes, formula gives {formula}"
        parts.append(f"({k},{n}):{count}")
    return True, "type <=> conjugacy; class counts " + ", ".join(parts)


# --- 4 ---------------------------------------------------------------------

TABLE_CASES = [(2, 2), (2, 3), (3, 2)]


def criterion_4() -> tuple[bool, str]:
    parts = []
    for k, n in TABLE_CASES:
        table = character_table(k, n)
        labels = list(table)
        if len(labels) != len(all_types(k, n)):
            return False, f"({k},{n}): {len(labels)} irreducibles for {len(all_types(k, n))} classes"
        for a in labels:
            if not table[a].is_integral():
                return False, f"({k},{n}): character {a} is not integer-valued"
            for b in labels:
                if inner_product(table[a], table[b]) != (1 if a == b else 0):
                    return False, f"({k},{n}): <{a},{b}> is wrong"
        total = sum(int(table[a].degree) ** 2 for a in labels)
        if total != group_order(k, n):
            return False, f"({k},{n}): sum of squared dimensions {total} != {group_order(k, n)}"
        parts.append(f"({k},{n}):sum dim^2={total}")
    return True, "orthonormal integer tables; " + ", ".join(parts)


# --- 5, 6 ------------------------------------------------------------------

MT_CASES = [(2, 1, 2), (2, 1, 3), (2, 2, 3), (1, 2, 4)]


def criterion_5() -> tuple[bool, str]:
    checked = 0
    for k, d, n in MT_CASES:
        for label in irrep_labels(k, d):
            chi_t = irreducible_character(k, d, label)
            poly = character_polynomial_MT(chi_t)
            if poly.degree != d:
                return False, f"({k},{d}) {label}: polynomial degree {poly.degree} != {d}"
            induced = induce_class_function(chi_t, n)
            for t in all_types(k, n):
                if poly(t) != induced(t):
                    return False, f"({k},{d},{n}) {label} at {t.label()}: {poly(t)} != {induced(t)}"
                checked += 1
    return True, f"{checked} class values agree with brute-force induction"


def criterion_6() -> tuple[bool, str]:
    checked = 0
    for k, d, n in MT_CASES:
        for label in irrep_labels(k, d):
            induced = induce_class_function(irreducible_character(k, d, label), n)
            got = decompose(induced)
            expected = pieri_decompose_MT(k, d, label, n)
            if len(set(expected)) != len(expected) or got != {lab: 1 for lab in expected}:
                return False, f"({k},{d},{n}) {label}: {got} vs strips {expected}"
            checked += 1
    return True, f"{checked} inductions decompose as horizontal strips, multiplicity 1"


# --- 7, 8 ------------------------------------------------------------------

STRUCTURE_CASES = [(1, 0, 2, 1), (1, 0, 2, 2), (2, 1, 2, 1), (2, 0, 3, 2)]


def criterion_7() -> tuple[bool, str]:
    parts = []
    for case in STRUCTURE_CASES:
        r = analyze(*case)
        for claim in ("generatorsNonnegative", "generationDegreeBound", "extrapolation"):
            if r.verdicts[claim].status != PASS:
                return False, f"{case}: {claim} {r.verdicts[claim].status}: {r.verdicts[claim].reason}"
        if len(r.crossValidation) < 2:
            return False, f"{case}: fewer than two extrapolation points"
        parts.append(f"{case}->t={r.generators}")
    return True, "; ".join(parts)


def criterion_8() -> tuple[bool, str]:
    parts = []
    for case in STRUCTURE_CASES:
        r = analyze(*case)
        order = 2 * case[3] // (case[2] - 1) + 1
        seq = r.betti + [c.enumerated for c in r.crossValidation]
        diffs = forward_differences(seq, order)
        if not diffs or any(diffs):
            return False, f"{case}: order-{order} differences {diffs}"
        parts.append(f"{case}:order {order} on {len(seq)} terms")
    return True, "; ".join(parts)


# --- 9 ---------------------------------------------------------------------


def criterion_9() -> tuple[bool, str]:
    for n in range(1, 13):
        for t in range(1, n + 1):
            if stirling2(n, t) != t * stirling2(n - 1, t) + stirling2(n - 1, t - 1):
                return False, f"recurrence fails at ({n},{t})"
    for n in range(1, 10):
        for t in range(0, n + 1):
            brute = sum(1 for _ in enumerate_set_partitions(n, t)) if t else 0
            if stirling2(n, t) != brute:
                return False, f"S({n},{t}) = {stirling2(n, t)} but enumeration gives {brute}"
    for t in range(0, 4):
        start = 3 * t + 3
        seq = [stirling2(n, n - t) for n in range(start, start + 2 * t + 12)]
        diffs = forward_differences(seq, 2 * t + 1)
        if any(diffs):
            return False, f"t={t}: order-{2 * t + 1} differences do not vanish"
        if 2 * t and not any(forward_differences(seq, 2 * t)):
            return False, f"t={t}: degree is below {2 * t}"
    return True, "recurrence for n <= 12, brute force for n <= 9, degree 2t for t <= 3"


# --- 10 --------------------------------------------------------------------

PADDING_EXPECTED = {
    6: ((1, 1), (1, 1), (2,)),
    7: ((2, 1), (1, 1), (2,)),
    8: ((3, 1), (1, 1), (2,)),
    9: ((4, 1), (1, 1), (2,)),
}


def criterion_10() -> tuple[bool, str]:
    label = ((1,), (1, 1), (2,))
    for n, expected in PADDING_EXPECTED.items():
        got = pad_multipartition(label, n)
        if got != expected:
            return False, f"n={n}: {got} != {expected}"
    for n in range(0, 6):
        if not isinstance(pad_multipartition(label, n), BelowThreshold):
            return False, f"n={n} should be below threshold"
    return True, "n=6..9 reproduce the worked sequence; undefined for n < 6"


CRITERIA: list[tuple[int, str, float | None, Callable[[], tuple[bool, str]]]] = [
    (1, "ray-partition Betti vs permutation oracle", 60, criterion_1),
    (2, "degree-0 normalization", 10, criterion_2),
    (3, "conjugacy classification and class counts", 120, criterion_3),
    (4, "character completeness", 120, criterion_4),
    (5, "character polynomial of M(T)", 180, criterion_5),
    (6, "Pieri rule", None, criterion_6),
    (7, "structure recovery", 600, criterion_7),
    (8, "polynomiality", None, criterion_8),
    (9, "Stirling properties", 5, criterion_9),
    (10, "padding of multipartitions", None, criterion_10),
]


# --- 11 --------------------------------------------------------------------

CLI_COMMANDS = [
    ["betti", "--K", "2,1", "--p", "1", "--q", "2"],
    ["betti", "--k", "1", "--n", "4", "--p", "0", "--q", "2", "--format", "csv"],
    ["rays", "--K", "2,1", "--p", "1", "--q", "2", "--d", "2"],
    ["classes", "--k", "2", "--n", "3", "--format", "json"],
    ["irreps", "--k", "2", "--n", "2"],
    ["charpoly", "--k", "2", "--d", "2", "--label", "[[1],[1]]"],
    ["decompose", "--k", "2", "--d", "1", "--label", "[[1],[]]", "--n", "3"],
    ["stable", "--k", "2", "--p", "1", "--q", "2", "--d", "1"],
    ["stable", "--k", "1", "--p", "0", "--q", "2", "--d", "1", "--format", "tex"],
]


def _cli(argv: list[str]) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "wreathstab", *argv], capture_output=True, timeout=600)


def criterion_11() -> tuple[bool, str]:
    """Runs the CLI in subprocesses; not part of :func:`run_all`, which selftest calls."""
    first = _cli(["selftest"])
    if first.returncode != 0:
        return False, f"selftest exited {first.returncode}"
    if _cli(["selftest"]).stdout != first.stdout:
        return False, "two selftest runs differ on stdout"
    for argv in CLI_COMMANDS:
        a, b = _cli(argv), _cli(argv)
        if a.returncode != 0:
            return False, f"{' '.join(argv)} exited {a.returncode}: {a.stderr.decode().strip()}"
        if a.stdout != b.stdout:
            return False, f"{' '.join(argv)}: two runs differ"
    return True, f"selftest exits 0; {len(CLI_COMMANDS) + 1} commands byte-identical across two runs"


CLI_CRITERION = (11, "CLI determinism and selftest", None, criterion_11)


def run_criterion(number: int) -> CriterionResult:
    for num, name, limit, body in CRITERIA + [CLI_CRITERION]:
        if num == number:
            return _run(num, name, limit, body)
    raise KeyError(number)


def run_all() -> list[CriterionResult]:
    return [_run(num, name, limit, body) for num, name, limit, body in CRITERIA]
