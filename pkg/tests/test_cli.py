"""生成・評価・検証コマンドの CLI テスト。"""

from __future__ import annotations

import json
from pathlib import Path

import pytest

import cli  # type: ignore  # noqa: E402
from diagrams import format_diagram  # type: ignore  # noqa: E402
from milnor import lift_to_circles, wedge  # type: ignore  # noqa: E402

@pytest.fixture(autouse=True)
def _clear_config_env(monkeypatch: pytest.MonkeyPatch) -> None:
    for name in (
        "CONWAY_SEED",
        "CONWAY_DIAGRAM_SAMPLES",
        "CONWAY_VANISH_SAMPLES",
        "CONWAY_BRAID_SAMPLES",
        "CONWAY_PM7_SAMPLES",
        "CONWAY_PHI_SAMPLES",
        "CONWAY_SERIES_ORDER",
        "CONWAY_WEIGHT_ENGINE",
    ):
        monkeypatch.delenv(name, raising=False)

def _run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str, str]:
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err

def test_gen_commands_print_canonical_polynomials(capsys: pytest.CaptureFixture[str]) -> None:
    assert _run(capsys, "gen-dm", "--m", "2")[:2] == (0, "+1*x[1,2]")
    assert _run(capsys, "gen-dm", "--m", "3")[1] == "+1*x[1,2]*x[1,3] +1*x[1,2]*x[2,3] +1*x[1,3]*x[2,3]"
    assert _run(capsys, "gen-pm", "--m", "3")[:2] == (0, "+1*y[1,2,3]")
    assert _run(capsys, "gen-pm", "--m", "4")[1] == "0"

def test_verify_commands_report_ok(capsys: pytest.CaptureFixture[str]) -> None:
    assert _run(capsys, "verify-mtt", "--m", "3")[:2] == (0, "OK")
    assert _run(capsys, "verify-pmtt", "--m", "5")[:2] == (0, "OK")

def test_verification_failure_exits_with_one(
    capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch
) -> None:
    monkeypatch.setattr(cli, "mtt_check", lambda m: False)
    assert _run(capsys, "verify-mtt", "--m", "3")[:2] == (1, "FAIL")

def test_weight_reads_diagram_file(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    path = tmp_path / "double_y.txt"
    path.write_text(format_diagram(lift_to_circles([wedge(1, 2, 3), wedge(1, 2, 3)], 3)), encoding="utf-8")
    assert _run(capsys, "weight", "--file", str(path))[:2] == (0, "2")
    assert _run(capsys, "weight", "--file", str(path), "--engine", "oracle")[:2] == (0, "2")

def test_decompose_prints_totals(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    path = tmp_path / "graph.txt"
    path.write_text("vertices 3\n1 2 3\n1 2 3\n", encoding="utf-8")
    code, out, _ = _run(capsys, "decompose", "--file", str(path))
    assert code == 0
    assert out.splitlines()[-1] == "count +2 aut 2 coefficient 1"

def test_fpoly_assembles_small_polynomials(capsys: pytest.CaptureFixture[str]) -> None:
    assert _run(capsys, "fpoly", "--n", "2", "--m", "3")[:2] == (0, "+1*y[1,2,3]^2")
    assert _run(capsys, "fpoly", "--n", "1", "--m", "2")[:2] == (0, "+1*x[1,2]")

def test_feval_agrees_between_weights_and_phi(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    path = tmp_path / "xi.txt"
    path.write_text("labels 3\ntree 1 1:2 * 2\ntree 1 2:3 * 1\ntree 1 1:3 * -1\n", encoding="utf-8")
    assert _run(capsys, "feval", "--xi", str(path))[:2] == (0, "-1")
    assert _run(capsys, "feval", "--xi", str(path), "--via", "phi")[:2] == (0, "-1")

def test_geval_on_h_tree(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    xi = tmp_path / "xi.txt"
    xi.write_text("tree 2 1:[1,2] * 1\n", encoding="utf-8")
    tau = tmp_path / "tau.txt"
    tau.write_text("tree 3 1:[2,[2,1]] * 1\n", encoding="utf-8")
    assert _run(capsys, "geval", "--xi", str(xi), "--tau", str(tau), "--m", "2")[:2] == (0, "-2")

def test_conway_and_hoste_commands(capsys: pytest.CaptureFixture[str]) -> None:
    assert _run(capsys, "conway", "--braid", "k=2;1 1 1")[:2] == (0, "+1 +1*z^2")
    assert _run(capsys, "conway", "--braid", "k=2;1 1")[:2] == (0, "+1*z")
    assert _run(capsys, "hoste-check", "--braid", "k=3;1 -2 1 -2 1 -2")[:2] == (0, "OK")
    assert _run(capsys, "hoste-check", "--braid", "k=3;1 1 2 2", "--with-weights")[:2] == (0, "OK")

def test_renorm_prints_truncated_series(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = _run(capsys, "renorm", "--poly", "1 z2", "--order", "4")
    assert code == 0
    assert out == "+1 +23/24*z^2 +247/5760*z^4"

def test_renorm_uses_configured_order(capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("CONWAY_SERIES_ORDER", "2")
    assert _run(capsys, "renorm", "--poly", "1 z2")[1] == "+1 +23/24*z^2"

def test_scan_commands_emit_json(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = _run(capsys, "skein-suite", "--samples", "5", "--seed", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["check"] == "skein"
    assert payload["failures"] == []

    code, out, _ = _run(capsys, "vanish-scan", "--n", "1", "--m", "3", "--d", "2", "--samples", "10", "--seed", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["counterexample_count"] == 0
    assert payload["samples"] == 10
    assert payload["seed"] == 5

@pytest.mark.parametrize(
    "argv",
    [
        ["conway", "--braid", "k=2;3"],
        ["fpoly", "--n", "3", "--m", "3"],
        ["weight", "--file", "/nonexistent/diagram.txt"],
        ["vanish-scan", "--n", "0", "--m", "3", "--d", "2", "--samples", "1"],
    ],
)
def test_invalid_input_exits_with_two(capsys: pytest.CaptureFixture[str], argv: list) -> None:
    code, out, err = _run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("error: ")

def test_argument_errors_exit_through_argparse() -> None:
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["gen-dm"])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit):
        cli.main(["run-suite", "unknown"])
