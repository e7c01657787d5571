from __future__ import annotations

import io
import json
import logging
import sys
from typing import TYPE_CHECKING

import pytest
from typer.testing import CliRunner

from detrep import PencilDocument, RunConfig, parse_polynomial, symbolic_determinant
from detrep import cli
from detrep.cli import app, run
from detrep.exceptions import INPUT_ERROR, UNSUPPORTED

from .conftest import GENERAL_QUADRATIC, QUINTIC, SQUARE


if TYPE_CHECKING:
    from collections.abc import Iterator
    from pathlib import Path


runner = CliRunner()


@pytest.fixture(autouse=True)
def _reset_logging() -> Iterator[None]:
    yield
    root = logging.getLogger("detrep")
    for handler in list(root.handlers):
        root.removeHandler(handler)
    root.setLevel(logging.NOTSET)


def matrix_rows(output: str) -> list[str]:
    return [line for line in output.splitlines() if line.startswith("[")]


def test_square_ndr() -> None:
    result = runner.invoke(app, ["--form", "ndr"], input=SQUARE)
    assert result.exit_code == 0
    assert len(matrix_rows(result.output)) == 5  # noqa: PLR2004
    assert "dimension: 5" in result.output
    assert "form: NDR" in result.output
    assert "verified: yes (symbolic)" in result.output


def test_quintic_rdr_report() -> None:
    result = runner.invoke(app, [], input=QUINTIC)
    assert result.exit_code == 0
    assert len(matrix_rows(result.output)) == 6  # noqa: PLR2004
    assert "dimension: 6" in result.output
    assert "chain length: 8" in result.output
    assert "verified: yes (symbolic)" in result.output


def test_plain_chain_option() -> None:
    result = runner.invoke(app, ["--form", "ndr", "--chain", "plain"], input=SQUARE)
    assert result.exit_code == 0
    assert "dimension: 6" in result.output


def test_zero_polynomial() -> None:
    result = runner.invoke(app, ["--form", "ndr"], input="0")
    assert result.exit_code == 0
    assert "[ 0 ]" in result.output
    assert "dimension: 1" in result.output


def test_uniform_representation() -> None:
    result = runner.invoke(app, ["--form", "udr"], input=GENERAL_QUADRATIC)
    assert result.exit_code == 0
    assert "form: UDR" in result.output
    assert "dimension: 4" in result.output
    assert "verified: yes" in result.output


def test_syntax_error_exits_with_input_error() -> None:
    result = runner.invoke(app, [], input="x1 +")
    assert result.exit_code == INPUT_ERROR
    assert '"code": 1' in result.output


def test_unknown_choice_exits_with_input_error() -> None:
    result = runner.invoke(app, ["--form", "qdr"], input=SQUARE)
    assert result.exit_code == INPUT_ERROR


@pytest.mark.parametrize(
    "args", [["--bogus"], ["--form"], ["--trials", "many"], ["extra"]]
)
def test_usage_errors_exit_with_input_error(args: list[str]) -> None:
    result = runner.invoke(app, args, input=SQUARE)
    assert result.exit_code == INPUT_ERROR


def test_zero_trials_are_unsupported() -> None:
    result = runner.invoke(app, ["--verify", "eval", "--trials", "0"], input=SQUARE)
    assert result.exit_code == UNSUPPORTED
    assert '"code": 3' in result.output


def test_zero_trials_without_evaluation() -> None:
    result = runner.invoke(app, ["--verify", "none", "--trials", "0"], input=SQUARE)
    assert result.exit_code == 0
    assert "verified: skipped" in result.output


def test_eval_seed_from_environment() -> None:
    args = ["--verify", "eval", "--trials", "5"]
    result = runner.invoke(app, args, input=QUINTIC, env={"DETREP_SEED": "17"})
    assert result.exit_code == 0
    assert "verified: yes (eval, 5 trials)" in result.output


def test_runs_are_deterministic() -> None:
    first = runner.invoke(app, ["--form", "tdr"], input=QUINTIC)
    second = runner.invoke(app, ["--form", "tdr"], input=QUINTIC)
    assert first.exit_code == second.exit_code == 0
    assert first.output == second.output


def test_input_file(tmp_path: Path) -> None:
    source = tmp_path / "square.txt"
    source.write_text(SQUARE + "\n", encoding="utf-8")
    result = runner.invoke(app, ["--input", str(source), "--form", "rdr"])
    assert result.exit_code == 0
    assert "dimension: 3" in result.output


def test_missing_input_file(tmp_path: Path) -> None:
    result = runner.invoke(app, ["-i", str(tmp_path / "missing.txt")])
    assert result.exit_code == INPUT_ERROR


def test_json_polynomial_input() -> None:
    text = '{"vars": ["x1", "x2"], "terms": [{"coeff": "1", "exps": [1, 1]}]}'
    result = runner.invoke(app, ["--form", "ndr"], input=text)
    assert result.exit_code == 0
    assert "polynomial: x1*x2" in result.output


def test_latex_output() -> None:
    result = runner.invoke(app, ["--output", "latex"], input=SQUARE)
    assert result.exit_code == 0
    assert "\\begin{bmatrix}" in result.output
    assert "\\end{bmatrix}" in result.output


def test_dump_chain() -> None:
    result = runner.invoke(app, ["--dump-chain"], input=QUINTIC)
    assert result.exit_code == 0
    assert '"kind": "improved"' in result.output


def test_var_order() -> None:
    result = runner.invoke(app, ["--var-order", "x2,x1"], input="x1 + 2*x2")
    assert result.exit_code == 0
    assert "polynomial: 2*x2 + x1" in result.output
    result = runner.invoke(app, ["--var-order", "x1,x2"], input="x3")
    assert result.exit_code == INPUT_ERROR


def test_verbose_logs_to_stderr() -> None:
    result = runner.invoke(app, ["-v"], input=SQUARE)
    assert result.exit_code == 0
    assert "DEBUG detrep." in result.output


def test_json_output_keeps_streams_apart(
    monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
) -> None:
    monkeypatch.setattr(sys, "stdin", io.StringIO(QUINTIC))
    assert run(RunConfig(output="json")) == 0
    captured = capsys.readouterr()
    matrix = PencilDocument.model_validate_json(captured.out).to_pencil()
    assert matrix.form == "RDR"
    assert symbolic_determinant(matrix) == parse_polynomial(QUINTIC)
    assert "dimension: 6" in captured.err
    assert "dimension" not in captured.out


def test_errors_go_to_stderr(
    monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
) -> None:
    monkeypatch.setattr(sys, "stdin", io.StringIO("x1 ^ -2"))
    assert run(RunConfig()) == INPUT_ERROR
    captured = capsys.readouterr()
    assert captured.out == ""
    assert '"code": 1' in captured.err


def test_unexpected_failures_become_error_objects(
    monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
) -> None:
    def broken(*args: object, **kwargs: object) -> None:
        raise KeyError("2")

    monkeypatch.setattr(cli, "represent_verified", broken)
    monkeypatch.setattr(sys, "stdin", io.StringIO(SQUARE))
    assert run(RunConfig()) == INPUT_ERROR
    captured = capsys.readouterr()
    error = json.loads(captured.err.strip().splitlines()[-1])
    assert error["code"] == INPUT_ERROR
    assert error["data"] == {"type": "KeyError"}
    assert captured.out == ""


if __name__ == "__main__":
    pytest.main(["-v", __file__])
