import math

import pytest

import minimaxcode.verify as verify_mod
from minimaxcode.errors import InvalidParameter
from minimaxcode.verify import run_trials, sweep_bounds


def test_run_trials_passes_on_reference_implementation():
    report = run_trials(2, 6, 100, 42, (1.0,))
    assert report.ok
    assert report.failures == []
    assert report.checks_run > 100


def test_run_trials_deterministic_body():
    a = run_trials(2, 5, 50, 7, (0.5, 2.0), extremal_grid=False)
    b = run_trials(2, 5, 50, 7, (0.5, 2.0), extremal_grid=False)
    assert a.to_json() == b.to_json()


def test_run_trials_rejects_bad_parameters():
    with pytest.raises(InvalidParameter):
        run_trials(1, 6, 10, 0)
    with pytest.raises(InvalidParameter):
        run_trials(2, 11, 10, 0)
    with pytest.raises(InvalidParameter):
        run_trials(2, 6, 0, 0)
    with pytest.raises(InvalidParameter):
        run_trials(2, 6, 10, 0, (-1.0,))


def test_harness_detects_mutated_bound(monkeypatch):
    import minimaxcode.bounds as bounds_mod

    real = bounds_mod.minimax_bounds

    def corrupted(p1):
        iv = real(p1)
        return type(iv)(
            lower=iv.lower + 0.25,
            upper=iv.upper,
            lower_achievable=iv.lower_achievable,
            upper_achievable=iv.upper_achievable,
            lam=iv.lam,
            determined=iv.determined,
        )

    monkeypatch.setattr(verify_mod, "minimax_bounds", corrupted)
    report = run_trials(2, 6, 50, 42, (1.0,), extremal_grid=False)
    assert not report.ok
    assert any(f["check"] == "theorem1-containment" for f in report.failures)


def test_sweep_single_points():
    rows = sweep_bounds(0.75, 0.75, 0.01)
    assert rows[0] == "p1,lambda,lower,lower_achievable,upper,upper_achievable,determined"
    v = 1 + math.log2(0.75)
    assert rows[1] == f"0.75,1,{v:.6f},1,{v:.6f},1,1"
    rows = sweep_bounds(0.5, 0.5, 0.01)
    assert rows[1] == "0.5,1,0.000000,1,1.000000,0,0"


def test_sweep_grid_shape():
    rows = sweep_bounds(0.01, 0.99, 0.01)
    assert len(rows) == 100  # header + 99 points
    assert not any("nan" in r.lower() for r in rows)


def test_sweep_rejects_bad_grid():
    with pytest.raises(InvalidParameter):
        sweep_bounds(0.0, 0.9, 0.01)
    with pytest.raises(InvalidParameter):
        sweep_bounds(0.5, 1.5, 0.01)
