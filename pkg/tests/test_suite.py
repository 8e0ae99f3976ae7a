"""固定例スイートと乱択性質スイートのテスト。"""

from __future__ import annotations

import json
from typing import Tuple

import pytest

import suite  # type: ignore  # noqa: E402
from config import CheckConfig  # type: ignore  # noqa: E402
from diagrams import weight_oracle, weight_reduced  # type: ignore  # noqa: E402

SMALL_CONFIG = CheckConfig(
    seed=1,
    diagram_samples=5,
    vanish_samples=5,
    braid_samples=10,
    pm7_samples=1,
    phi_samples=4,
    series_order=4,
    weight_engine="reduced",
)

def test_reference_diagrams_have_known_weights() -> None:
    assert weight_oracle(suite.spanning_chain_diagram()) == 1
    assert weight_oracle(suite.double_y_diagram()) == 2
    assert weight_reduced(suite.h_diagram()) == -2

def test_run_suite_rejects_unknown_name() -> None:
    with pytest.raises(ValueError):
        suite.run_suite("everything", 42, SMALL_CONFIG)  # type: ignore[arg-type]

def test_suite_report_counts_and_json() -> None:
    report = suite.SuiteReport(
        suite="paper-examples",
        seed=3,
        checks=[
            suite.CheckResult(name="a", passed=True),
            suite.CheckResult(name="b", passed=False, detail="actual=1 expected=2"),
        ],
    )
    assert report.passed == 1
    assert report.failed == 1
    assert report.ok is False
    payload = json.loads(report.model_dump_json())
    assert payload["passed"] == 1
    assert payload["failed"] == 1
    assert payload["checks"][1]["detail"] == "actual=1 expected=2"

def test_raising_check_is_recorded_as_failure(monkeypatch: pytest.MonkeyPatch) -> None:
    def boom() -> Tuple[bool, str]:
        raise ArithmeticError("division failed")

    monkeypatch.setattr(suite, "_fixed_example_checks", lambda: [("boom", boom), ("fine", lambda: (True, "ignored"))])
    report = suite.run_suite("paper-examples", 0, SMALL_CONFIG)
    assert [check.name for check in report.checks] == ["boom", "fine"]
    assert report.checks[0].passed is False
    assert report.checks[0].detail == "ArithmeticError: division failed"
    assert report.checks[1].detail == "", "成功した検査の詳細は空の想定です"
    assert report.failed == 1

@pytest.mark.slow
def test_fixed_examples_all_pass() -> None:
    report = suite.run_suite("paper-examples", 42, SMALL_CONFIG)
    failed = [(check.name, check.detail) for check in report.checks if not check.passed]
    assert not failed, failed
    assert report.passed == len(report.checks)

@pytest.mark.slow
def test_property_suite_with_small_samples() -> None:
    report = suite.run_suite("properties", 1, SMALL_CONFIG)
    failed = [(check.name, check.detail) for check in report.checks if not check.passed]
    assert not failed, failed
