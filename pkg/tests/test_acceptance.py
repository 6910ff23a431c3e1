"""Acceptance criteria, one test (and one printed PASS/FAIL line) per criterion.

Criteria 1 to 11 are the checks in :mod:`hiddentensor.verify`, which hold the
tolerances and time budgets.  Criterion 12 runs them all again through
``hiddentensor verify-all`` and inspects the manifest.  Run this file
directly for the summary alone: ``python3 tests/test_acceptance.py``.
"""

import json
import sys

import pytest

from hiddentensor import cli, verify

SEED = verify.DEFAULT_SEED

# Tolerances pinned from the acceptance criteria; the checks must use exactly these.
PINNED = {
    1: {"exact": True},
    2: {"schmidt_tol": 1e-10},
    3: {"elementwise": 1e-10},
    4: {"exact": True},
    5: {"max": 1e-12},
    6: {"pmf_sum": 1e-8, "pmf_equivalence": "exact", "rho": 1e-10},
    7: {"bloch": 1e-12, "density": 1e-10, "interference": 1e-8},
    8: {"max": 1e-12},
    9: {"E": 1e-12, "S": 1e-9},
    10: {"round_trip": 1e-9, "gate": 1e-9, "bell": 1e-6},
    11: {"exact": True},
}
TIME_LIMITS = {1: 10, 2: 1, 3: 30, 4: 1, 5: 1, 6: 5, 7: 5, 8: 2, 9: 2, 10: 60, 11: 5}


def report(capsys, line):
    with capsys.disabled():
        print("\n" + line)


@pytest.mark.parametrize("check", verify.CHECKS, ids=lambda f: f.__name__)
def test_criterion(check, capsys):
    result = verify.run_check(check, SEED)
    report(capsys, result.line())
    assert result.tolerances == PINNED[result.number]
    assert result.time_limit == TIME_LIMITS[result.number]
    assert result.passed, result.failures


def test_criterion_12_verify_all(capsys, tmp_path):
    manifest = tmp_path / "manifest.json"
    code = cli.run(["verify-all", "--manifest", str(manifest)])
    captured = capsys.readouterr()
    data = json.loads(manifest.read_text())
    ok = (code == 0 and data["passed"] and [c["number"] for c in data["checks"]] == list(range(1, 12))
          and all(c["passed"] for c in data["checks"]))
    status = "PASS" if ok else "FAIL"
    report(capsys, f"[{status}] 12. verify-all exit {code}, manifest with {len(data['checks'])} checks")
    assert code == 0, captured.err
    assert json.loads(captured.out) == {"manifest": str(manifest), "passed": True}
    assert set(data) == {"argv", "checks", "parameters", "passed", "tolerances", "version",
                         "wall_clock_seconds"}
    assert data["parameters"]["seed"] == SEED
    assert data["tolerances"] == {str(k): v for k, v in PINNED.items()}
    assert ok


if __name__ == "__main__":
    results = verify.run_all(SEED, echo=print)
    sys.exit(0 if all(r.passed for r in results) else 1)
