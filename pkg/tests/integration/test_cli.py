# Copyright 2025 The liar-game-lab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import csv
import io
import json
from pathlib import Path

import pytest

from app.cli import main, parse_range, render
from app.utils.config import CACHE_DIR_ENV


@pytest.fixture(autouse=True)
def no_default_cache(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(CACHE_DIR_ENV, raising=False)


def run_json(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, object]:
    code = main([*argv, "--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_parse_range() -> None:
    assert parse_range("5..8") == [5, 6, 7, 8]
    assert parse_range("2,3") == [2, 3]
    assert parse_range("1..2,7") == [1, 2, 7]
    with pytest.raises(ValueError):
        parse_range("a..b")


def test_render_text_and_csv() -> None:
    rows = [{"n": 1, "error": None}, {"n": 2, "error": "x"}]
    assert render(rows, "csv").splitlines() == ["n,error", "1,", "2,x"]
    assert render({"value": 7}, "text") == "value: 7"


def test_solve_counterexample_state(capsys: pytest.CaptureFixture[str]) -> None:
    code, payload = run_json(
        capsys, "solve", "--state", "10,44", "--lies", "1", "--cap", "16", "--all-optimal"
    )
    assert code == 0
    assert isinstance(payload, dict)
    assert payload["value"] == 7
    assert payload["principal"] == "7,9"
    assert "8,6" not in payload["optimal_queries"]


@pytest.mark.parametrize("n, lies, cap, expected", [(8, 0, 8, 3), (14, 1, 2, 14)])
def test_solve_initial_states(
    capsys: pytest.CaptureFixture[str], n: int, lies: int, cap: int, expected: int
) -> None:
    code, payload = run_json(
        capsys, "solve", "--n", str(n), "--lies", str(lies), "--cap", str(cap), "--tree", "--transcript"
    )
    assert code == 0
    assert isinstance(payload, dict)
    assert payload["value"] == expected
    assert payload["tree_depth"] == expected
    assert payload["transcript"]["length"] == expected


def test_bounds_without_exact(capsys: pytest.CaptureFixture[str]) -> None:
    code, payload = run_json(
        capsys, "bounds", "--n", "56", "--cap", "16", "--lies", "1", "--no-exact"
    )
    assert code == 0
    assert isinstance(payload, dict)
    assert payload["theorem2_applicable"] is False
    assert payload["exact"] is None
    assert payload["l_hat"] <= payload["l"] <= payload["l_plus"]


def test_sweep_formats_agree(capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["sweep", "--n", "5..20", "--cap", "2", "--lies", "1"]
    code, rows = run_json(capsys, *argv)
    assert code == 0
    assert isinstance(rows, list)
    assert len(rows) == 16
    assert rows[0]["n"] == 5
    assert rows[0]["error"]
    assert all(row["sandwich_ok"] for row in rows[1:])

    assert main([*argv, "--format", "csv"]) == 0
    table = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert [int(r["n"]) for r in table] == [row["n"] for row in rows]
    assert [r["exact"] for r in table[1:]] == [str(row["exact"]) for row in rows[1:]]


def test_verify_conjecture_group(capsys: pytest.CaptureFixture[str]) -> None:
    code, reports = run_json(
        capsys, "verify", "--only", "conjecture", "--budget", "conjecture_n=20,conjecture_k=4"
    )
    assert code == 0
    assert isinstance(reports, list)
    assert [r["name"] for r in reports] == ["conjecture", "counterexample"]
    assert reports[1]["passed"]


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--n", "6", "--lies", "1", "--cap", "2", "--budget", "max_depth=3"],
        ["solve", "--state", "3,x", "--lies", "1", "--cap", "2"],
        ["solve", "--state", "3,1,0", "--lies", "1", "--cap", "2"],
        ["verify", "--only", "no_such_check"],
        ["bounds", "--n", "5", "--cap", "2", "--lies", "1"],
    ],
)
def test_input_errors_exit_2(capsys: pytest.CaptureFixture[str], argv: list[str]) -> None:
    assert main(argv) == 2
    assert "error:" in capsys.readouterr().err


def test_budget_exceeded_exits_3(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["solve", "--n", "10", "--lies", "1", "--cap", "3", "--budget", "max_total=4"]) == 3
    assert "budget exceeded" in capsys.readouterr().err


def test_cache_round_trip(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    cache = tmp_path / "l1-k2.cache"
    code, cold = run_json(capsys, "solve", "--n", "9", "--lies", "1", "--cap", "2", "--cache", str(cache))
    assert code == 0
    assert isinstance(cold, dict)
    assert cold["new_entries"] > 0
    assert cache.read_text().startswith("liargame-cache v1 l=1 k=2\n")

    code, warm = run_json(capsys, "solve", "--n", "9", "--lies", "1", "--cap", "2", "--cache", str(cache))
    assert isinstance(warm, dict)
    assert warm["value"] == cold["value"]
    assert warm["new_entries"] == 0

    exported = tmp_path / "export.cache"
    code, _ = run_json(capsys, "cache", "export", "--cache", str(cache), "--output", str(exported))
    assert code == 0
    assert exported.read_text() == cache.read_text()

    copy = tmp_path / "copy.cache"
    code, summary = run_json(
        capsys, "cache", "import", "--input", str(exported), "--cache", str(copy)
    )
    assert code == 0
    assert isinstance(summary, dict)
    assert copy.read_text() == cache.read_text()

    code, info = run_json(capsys, "cache", "inspect", "--cache", str(copy))
    assert isinstance(info, dict)
    assert info["lies"] == 1
    assert info["k"] == 2
    assert info["entries"] == summary["entries"]


def test_cache_import_rejects_other_game(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    cache = tmp_path / "l1-k2.cache"
    main(["solve", "--n", "6", "--lies", "1", "--cap", "2", "--cache", str(cache)])
    capsys.readouterr()
    code = main(["cache", "import", "--input", str(cache), "--cache", str(tmp_path / "x"), "--lies", "2"])
    assert code == 2
    assert "l=1" in capsys.readouterr().err


def test_corrupt_cache_is_rejected(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    cache = tmp_path / "bad.cache"
    cache.write_text("liargame-cache v1 l=1 k=2\n3,0=oops\n")
    assert main(["solve", "--n", "3", "--lies", "1", "--cap", "2", "--cache", str(cache)]) == 2
