"""Betti sequences of vertical configuration spaces and their stability report.

For cluster type ``K = (k, ..., k)`` (``n`` copies) the degree-``d`` Betti
numbers are enumerated for ``n = 0..N``, inverted to generator ranks, and the
generation-degree and polynomiality claims are checked exactly.
"""
from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import asdict, dataclass, field
from typing import Any

from .rays import CapExceededError, ClusterType, betti, default_max_cells
from .structure import GeneratorRankRegressor, forward_differences, stable_ranges

log = logging.getLogger(__name__)

SCHEMA_VERSION = "1.0"
PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


@dataclass
class Verdict:
    status: str
    reason: str


@dataclass
class CrossCheck:
    n: int
    predicted: int
    enumerated: int
    match: bool


@dataclass
class StabilityReport:
    inputs: dict[str, int]
    betti: list[int]
    generators: list[int]
    genDeg: int | None
    bounds: dict[str, int] | None
    crossValidation: list[CrossCheck]
    verdicts: dict[str, Verdict]
    annotations: dict[str, Any] = field(default_factory=dict)
    schemaVersion: str = SCHEMA_VERSION

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @property
    def ok(self) -> bool:
        return all(v.status != FAIL for v in self.verdicts.values())


def paper_degree_bound(q: int, d: int) -> int:
    return 2 * d // (q - 1)


def default_window(q: int, d: int) -> int:
    return paper_degree_bound(q, d) + 2


def betti_sequence(k: int, p: int, q: int, d: int, ns, max_cells: int | None = None) -> list[int]:
    return [betti(ClusterType.uniform(k, n), p, q, d, max_cells=max_cells) for n in ns]


def analyze(
    k: int,
    p: int,
    q: int,
    d: int,
    window: int | None = None,
    extrapolation: int = 2,
    max_cells: int | None = None,
    annotate: bool = True,
) -> StabilityReport:
    """Enumerate, recover generators, and check each claim.

    If the cell cap cuts the window short, every claim is SKIPPED and the
    reachable prefix of Betti numbers is reported.  Extrapolation points
    beyond the cap are dropped.
    """
    if q < 2:
        raise ValueError("stability analysis requires q >= 2")
    if min(k, d) < 0 or k < 1 or p < 0:
        raise ValueError("need k >= 1, p >= 0, d >= 0")
    bound = paper_degree_bound(q, d)
    N = default_window(q, d) if window is None else window
    if N < bound + 1:
        raise ValueError(f"window N={N} is too small; need N >= {bound + 1}")
    cap = default_max_cells() if max_cells is None else max_cells
    inputs = {"k": k, "p": p, "q": q, "d": d, "window": N, "extrapolation": extrapolation, "maxCells": cap}

    reachable = [n for n in range(N + 1) if n * k <= cap]
    ranks = betti_sequence(k, p, q, d, reachable, max_cells=cap)
    if len(reachable) < N + 1:
        reason = f"cell cap {cap} reaches only n <= {reachable[-1] if reachable else -1}"
        verdicts = {name: Verdict(SKIPPED, reason) for name in _CLAIMS}
        report = StabilityReport(inputs, ranks, [], None, None, [], verdicts)
        return _annotate(report) if annotate else report

    model = GeneratorRankRegressor().fit(ranks)
    gens = model.generators_
    g = model.generation_degree_
    verdicts: dict[str, Verdict] = {}

    neg = model.negative_generators_
    verdicts["generatorsNonnegative"] = (
        Verdict(PASS, "all recovered generator ranks are >= 0")
        if not neg else Verdict(FAIL, f"negative generator ranks at degrees {neg}")
    )
    above = [m for m, t in enumerate(gens) if m > bound and t != 0]
    verdicts["generationDegreeBound"] = (
        Verdict(PASS, f"generation degree {g} <= floor(2d/(q-1)) = {bound}")
        if not above else Verdict(FAIL, f"nonzero generators above {bound} at degrees {above}")
    )

    extra_ns = [n for n in range(N + 1, N + 1 + extrapolation) if n * k <= cap]
    checks = []
    for n, enumerated in zip(extra_ns, betti_sequence(k, p, q, d, extra_ns, max_cells=cap)):
        predicted = model.predict([n])[0]
        checks.append(CrossCheck(n, predicted, enumerated, predicted == enumerated))
    if len(extra_ns) < extrapolation:
        log.info("cell cap allows %d of %d extrapolation points", len(extra_ns), extrapolation)
    if not checks:
        verdicts["extrapolation"] = Verdict(SKIPPED, "no extrapolation point within the cell cap")
    elif all(c.match for c in checks):
        verdicts["extrapolation"] = Verdict(PASS, f"predictions match enumeration at n = {extra_ns}")
    else:
        bad = [c.n for c in checks if not c.match]
        verdicts["extrapolation"] = Verdict(FAIL, f"prediction differs from enumeration at n = {bad}")

    full = ranks + [c.enumerated for c in checks]
    verdicts["polynomialityGenDeg"] = _difference_verdict(full, max(g, -1) + 1)
    verdicts["polynomialityPaperBound"] = _difference_verdict(full, bound + 1)

    try:
        bounds = stable_ranges(g, q, d)
    except ValueError as exc:
        bounds = None
        verdicts["generationDegreeBound"] = Verdict(FAIL, str(exc))
    report = StabilityReport(inputs, ranks, gens, g, bounds, checks, verdicts)
    return _annotate(report) if annotate else report


_CLAIMS = (
    "generatorsNonnegative",
    "generationDegreeBound",
    "extrapolation",
    "polynomialityGenDeg",
    "polynomialityPaperBound",
)


def _difference_verdict(seq: list[int], order: int) -> Verdict:
    diffs = forward_differences(seq, order)
    if not diffs:
        return Verdict(SKIPPED, f"sequence of length {len(seq)} too short for order-{order} differences")
    if any(diffs):
        return Verdict(FAIL, f"order-{order} forward differences do not vanish: {diffs}")
    return Verdict(PASS, f"order-{order} forward differences vanish on n = 0..{len(seq) - 1}")


def _annotate(report: StabilityReport) -> StabilityReport:
    return sharpness_note(unordered_onset(homology_vs_cohomology_note(report)))


def sharpness_note(report: StabilityReport) -> StabilityReport:
    """Whether the observed generation degree reaches floor(2d/(q-1)).

    Recorded as an observation only: no claim of sharpness is checked.
    """
    bound = paper_degree_bound(report.inputs["q"], report.inputs["d"])
    g = report.genDeg
    report.annotations["sharpness"] = {
        "genDeg": g,
        "paperBound": bound,
        "attained": None if g is None else g == bound,
        "kind": "observation",
    }
    return report


def homology_vs_cohomology_note(report: StabilityReport) -> StabilityReport:
    """Record that the rank claims cover both H_d and H^d.

    The cohomology has a free basis indexed by ray partitions, so it is
    torsion-free and the rational homology ranks equal the cohomology ranks.
    """
    report.annotations["homology"] = {
        "appliesTo": ["H^d", "H_d"],
        "torsionFree": True,
        "reason": "cohomology is free abelian on ray-partition classes; "
        "universal coefficients give equal rational ranks",
    }
    return report


def unordered_onset(report: StabilityReport) -> StabilityReport:
    """Onset of stability for the unordered spaces (coinvariant dimensions).

    The stable value itself is not computable: the group action on the
    ray-partition basis is not available.
    """
    q, d = report.inputs["q"], report.inputs["d"]
    report.annotations["unordered"] = {
        "onset": None if report.genDeg is None else max(report.genDeg, 0),
        "paperBound": paper_degree_bound(q, d),
        "stableValue": None,
        "notComputable": True,
        "reason": "the action of S_k wr S_n on the ray-partition basis is not specified",
    }
    return report


def report_csv(report: StabilityReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "betti", "generator"])
    gens = report.generators
    for n, r in enumerate(report.betti):
        w.writerow([n, r, gens[n] if n < len(gens) else ""])
    for c in report.crossValidation:
        w.writerow([c.n, c.enumerated, ""])
    return buf.getvalue()


def report_tex(report: StabilityReport) -> str:
    i = report.inputs
    rows = [
        r"\begin{tabular}{r|rr}",
        r"$n$ & $\operatorname{rank} H^{%d}$ & $t_n$ \\ \hline" % i["d"],
    ]
    gens = report.generators
    for n, r in enumerate(report.betti):
        rows.append(f"{n} & {r} & {gens[n] if n < len(gens) else ''} \\\\")
    for c in report.crossValidation:
        rows.append(f"{c.n} & {c.enumerated} & \\\\")
    rows.append(r"\end{tabular}")
    return "\n".join(rows) + "\n"


__all__ = [
    "CapExceededError",
    "StabilityReport",
    "analyze",
    "betti_sequence",
    "homology_vs_cohomology_note",
    "report_csv",
    "report_tex",
    "sharpness_note",
    "unordered_onset",
]
