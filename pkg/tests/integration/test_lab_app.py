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

import logging
from unittest.mock import MagicMock

import pytest

from app.game.core import GameState
from app.lab_app import LiarGameLab, sweep_cell
from app.solver.cache import MemoCache
from app.utils.config import Settings, VerifyBudget
from app.utils.typing import CheckReport, Witness

TINY = VerifyBudget(lies=1, cap=2, total=4, oracle_total=4, sandwich_n=8, weight_n=8,
                    closed_form_n=8, closed_form_k1_n=3, theorem2_n=14,
                    conjecture_n=20, conjecture_k=4)


@pytest.fixture
def lab() -> LiarGameLab:
    """Fixture to create and set up a LiarGameLab instance"""
    app = LiarGameLab(settings=Settings(log_level="DEBUG"))
    app.set_up(batch_spans=False)
    return app


def test_solve_registers_a_report(lab: LiarGameLab, caplog: pytest.LogCaptureFixture) -> None:
    with caplog.at_level(logging.INFO):
        result = lab.solve(GameState(counts=(10, 44)), 16)
    assert result.value == 7
    assert '"log_type": "solve"' in caplog.text
    assert '"principal": "7,9"' in caplog.text


def test_register_report_uses_cloud_logger(lab: LiarGameLab) -> None:
    lab.logger = MagicMock()
    failing = CheckReport(
        name="closed_forms",
        instances=1,
        failures=[Witness(instance={"n": 3}, relation="x == y")],
    )
    lab.register_report(failing)
    entry = lab.logger.log_struct.call_args.args[0]
    assert entry["log_type"] == "verification"
    assert entry["service_name"] == "liar-game-lab"
    assert lab.logger.log_struct.call_args.kwargs["severity"] == "WARNING"


def test_register_report_rejects_unknown_log_type(lab: LiarGameLab) -> None:
    with pytest.raises(ValueError):
        lab.register_report({"value": 1}, log_type="chat")


def test_verify_on_tiny_budget(lab: LiarGameLab) -> None:
    reports = lab.verify(["closed_forms", "theorem"], TINY, workers=2)
    assert [r.name for r in reports] == ["closed_forms", "theorem_sandwiches", "theorem2_equality"]
    assert all(r.passed for r in reports)


def test_bounds_include_exact_value(lab: LiarGameLab) -> None:
    report = lab.bounds(20, 2, 1)
    assert report.exact == 20
    assert report.theorem2_applicable
    assert report.theorem2_value == 20
    assert report.sandwich_violations() == []


def test_sweep_workers_agree(lab: LiarGameLab) -> None:
    serial = lab.sweep([5, 8, 9], [2, 3], [1], workers=1)
    parallel = lab.clone().sweep([5, 8, 9], [2, 3], [1], workers=2)
    assert serial == parallel
    assert [(row.n, row.k) for row in serial] == [(5, 2), (8, 2), (9, 2), (5, 3), (8, 3), (9, 3)]


def test_sweep_cell_reports_errors() -> None:
    row = sweep_cell(6, 3, 1, {}, MemoCache())
    assert row.error is not None
    assert row.exact is None
    row = sweep_cell(9, 2, 1, {"max_total": 4}, MemoCache())
    assert row.error is None
    assert row.exact is None
    assert row.sandwich_ok is None


def test_clone_has_fresh_cache(lab: LiarGameLab) -> None:
    lab.solve(GameState.initial(6, 1), 2)
    other = lab.clone()
    assert len(other.cache) == 0
    assert other.settings == lab.settings
    assert other.solver_budget == lab.solver_budget
