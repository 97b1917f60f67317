import dataclasses
import math

import pytest

from closepair import Algo, Metric, solve
from closepair.verify import check_combine_fixtures, run_verification


def test_fixtures_pass_on_real_combine():
    assert check_combine_fixtures() == []


def test_verification_passes_quickly():
    report = run_verification(trials=10, n_max=80, seed=0)
    assert report.ok
    assert report.repro is None
    assert report.lines[0].startswith("combine fixtures: ok")
    for p in ("1", "2", "3.1415", "inf"):
        assert f"p={p}: PASS 10/10" in report.lines
    assert report.combine_invocations > 0
    assert report.bound_violations == 0
    assert report.lines[-1].startswith("combine call bounds: 0 violations")


def test_verification_text_is_deterministic():
    a = run_verification(trials=8, n_max=64, seed=3)
    b = run_verification(trials=8, n_max=64, seed=3)
    assert a.text == b.text


def test_verification_detects_faulty_solver():
    def faulty_solve(ps, metric, algo, cutoff, combine_audit=None):
        result = solve(ps, metric, algo, cutoff, combine_audit=combine_audit)
        if algo is Algo.BASIC2:
            return dataclasses.replace(result, dist=result.dist * 1.5)
        return result

    report = run_verification(
        trials=3, n_max=40, seed=0, metrics=[Metric(2.0)], solve_fn=faulty_solve
    )
    assert not report.ok
    assert any("mismatch: basic2" in f for f in report.failures)
    assert report.repro is not None
    assert report.repro.startswith("closepair gen --n ")
    assert "closepair solve --in repro.txt --algo basic2" in report.repro
    assert "FAIL" in report.text


def test_verification_rejects_bad_arguments():
    with pytest.raises(ValueError, match="trials"):
        run_verification(trials=0, n_max=50)
    with pytest.raises(ValueError, match="n-max"):
        run_verification(trials=1, n_max=1)


def test_verification_single_metric_subset():
    report = run_verification(trials=4, n_max=30, seed=1, metrics=[Metric(math.inf)])
    assert report.ok
    assert any(line.startswith("p=inf: PASS 4/4") for line in report.lines)
    assert not any(line.startswith("p=2") for line in report.lines)
