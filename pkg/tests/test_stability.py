import json

import pytest

from wreathstab.stability import (
    FAIL,
    PASS,
    SKIPPED,
    _difference_verdict,
    analyze,
    betti_sequence,
    default_window,
    paper_degree_bound,
    report_csv,
    report_tex,
)

CASES = [(1, 0, 2, 1), (1, 0, 2, 2), (2, 1, 2, 1), (2, 0, 3, 2), (1, 1, 3, 2), (3, 0, 2, 1)]


@pytest.mark.parametrize("case", CASES)
def test_all_claims_hold(case, validator):
    r = analyze(*case)
    assert r.ok
    for name in ("generatorsNonnegative", "generationDegreeBound", "polynomialityPaperBound"):
        assert r.verdicts[name].status == PASS, r.verdicts[name].reason
    assert r.verdicts["extrapolation"].status in (PASS, SKIPPED)
    assert r.genDeg <= paper_degree_bound(case[2], case[3])
    validator("stability_report").validate(json.loads(r.to_json()))


def test_conf_r2_h1():
    r = analyze(1, 0, 2, 1)
    assert r.betti == [0, 0, 1, 3, 6]
    assert r.generators == [0, 0, 1, 0, 0]
    assert r.genDeg == 2
    assert r.bounds["repStabOnset"] == 4 == r.bounds["repStabPaperBound"]
    assert [c.enumerated for c in r.crossValidation] == [10, 15]


def test_wide_window_needs_raised_cap():
    # k=2 and n up to 6 plus two extrapolation points is 16 cells
    r = analyze(2, 1, 2, 1, window=6, max_cells=16)
    assert r.generators[:3] == [0, 1, 0]
    assert not any(r.generators[3:])
    assert all(c.match for c in r.crossValidation)
    assert [c.n for c in r.crossValidation] == [7, 8]


def test_cap_truncation_skips_everything(validator):
    r = analyze(3, 0, 2, 2, max_cells=9)
    assert r.genDeg is None and r.bounds is None
    assert {v.status for v in r.verdicts.values()} == {SKIPPED}
    assert r.betti == betti_sequence(3, 0, 2, 2, range(4))
    validator("stability_report").validate(json.loads(r.to_json()))


def test_extrapolation_partially_capped():
    r = analyze(1, 0, 2, 1, max_cells=5)
    assert [c.n for c in r.crossValidation] == [5]
    assert r.verdicts["extrapolation"].status == PASS


def test_annotations():
    r = analyze(1, 0, 2, 1)
    assert r.annotations["homology"]["torsionFree"] is True
    assert r.annotations["unordered"]["notComputable"] is True
    assert r.annotations["unordered"]["onset"] == 2
    assert r.annotations["sharpness"] == {"genDeg": 2, "paperBound": 2, "attained": True, "kind": "observation"}
    assert analyze(2, 0, 3, 2).annotations["sharpness"]["attained"] is True
    assert analyze(1, 0, 2, 2).annotations["sharpness"]["attained"] is True
    assert "annotations" in r.to_dict()
    assert analyze(1, 0, 2, 1, annotate=False).annotations == {}


def test_input_validation():
    with pytest.raises(ValueError):
        analyze(1, 0, 1, 1)
    with pytest.raises(ValueError):
        analyze(0, 0, 2, 1)
    with pytest.raises(ValueError):
        analyze(1, 0, 2, 2, window=3)


def test_default_window():
    assert default_window(2, 1) == 4
    assert default_window(3, 2) == 4


def test_report_is_deterministic():
    assert analyze(2, 0, 3, 2).to_json() == analyze(2, 0, 3, 2).to_json()


def test_csv_and_tex():
    r = analyze(1, 0, 2, 1)
    lines = report_csv(r).splitlines()
    assert lines[0] == "n,betti,generator"
    assert lines[3] == "2,1,1"
    assert lines[-1] == "6,15,"
    tex = report_tex(r)
    assert tex.startswith("\\begin{tabular}") and tex.rstrip().endswith("\\end{tabular}")
    assert "3 & 3 & 0 \\\\" in tex


def test_fail_verdict_is_reachable():
    assert _difference_verdict([0, 1, 4, 9, 16], 2).status == FAIL
    assert _difference_verdict([0, 1], 3).status == SKIPPED
