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

import pytest

from app.solver.cache import MemoCache
from app.utils.config import VerifyBudget
from app.utils.errors import DomainError
from app.utils.typing import CheckReport, Witness
from app.verify import (
    ALIASES,
    COVERAGE,
    REGISTRY,
    VerifyContext,
    check_closed_forms,
    check_convexity,
    check_forced_no,
    reproduce_counterexample,
    run_suite,
    select,
    suite_passed,
)

SMALL = VerifyBudget(
    lies=1,
    cap=2,
    total=5,
    oracle_total=4,
    sandwich_n=12,
    weight_n=12,
    closed_form_n=12,
    closed_form_k1_n=4,
    theorem2_n=16,
    conjecture_n=20,
    conjecture_k=4,
)


@pytest.fixture(scope="module")
def ctx() -> VerifyContext:
    """A context with small ranges and one memo cache for the whole module."""
    return VerifyContext(budget=SMALL)


@pytest.mark.parametrize("name", list(REGISTRY))
def test_every_checker_passes_on_small_ranges(name: str, ctx: VerifyContext) -> None:
    report = REGISTRY[name](ctx)
    assert report.name == name
    assert report.instances > 0 or report.skipped > 0
    assert report.passed or report.informational, report.failures[:3]


def test_coverage_names_registered_checkers() -> None:
    covered = {name for names in COVERAGE.values() for name in names}
    assert covered <= set(REGISTRY)
    assert set(REGISTRY) <= covered


def test_select_expands_aliases_in_registry_order() -> None:
    assert select(["conjecture"]) == ["conjecture", "counterexample"]
    assert select(["theorem2_equality", "convexity"]) == [
        name for name in REGISTRY if name in {"theorem2_equality", *ALIASES["convexity"]}
    ]
    assert select(None) == list(REGISTRY)


def test_select_rejects_unknown_names() -> None:
    with pytest.raises(DomainError, match="unknown check"):
        select(["no_such_check"])


def test_run_suite_keeps_registry_order(ctx: VerifyContext) -> None:
    names = ["closed_forms", "weight_identity", "endofgame"]
    reports = run_suite(names, budget=SMALL, workers=3, cache=ctx.cache)
    assert [r.name for r in reports] == select(names)
    assert suite_passed(reports)


def test_convexity_counts_the_excluded_case(ctx: VerifyContext) -> None:
    report = check_convexity(ctx, "restricted")
    assert report.skipped > 0
    assert report.passed


def test_forced_no_skips_total_two_children_on_default_ranges() -> None:
    report = check_forced_no(VerifyContext())
    assert report.failures == []
    assert report.instances > 0
    assert report.skipped > 0


def test_forced_no_skips_state_one_one_with_unit_cap() -> None:
    # (1,1) with k=1: the forced query (1,0) leaves (0,2) behind.
    budget = SMALL.model_copy(update={"cap": 1, "total": 2})
    report = check_forced_no(VerifyContext(budget=budget))
    assert report.failures == []
    assert report.skipped > 0


def test_closed_forms_include_single_candidate_games() -> None:
    budget = SMALL.model_copy(update={"lies": 2, "closed_form_n": 4, "closed_form_k1_n": 8})
    report = check_closed_forms(VerifyContext(budget=budget))
    assert report.failures == []
    assert report.instances == 4 + sum(range(1, 5)) + 3 * 8


def test_convexity_rejects_unknown_variant(ctx: VerifyContext) -> None:
    with pytest.raises(DomainError):
        check_convexity(ctx, "sideways")


def test_counterexample_facts(ctx: VerifyContext) -> None:
    report = reproduce_counterexample(ctx)
    assert report.instances == 6
    assert report.passed


def test_informational_failures_do_not_fail_a_suite() -> None:
    witness = Witness(instance={"state": "3,1"}, relation="x == y", lhs=1, rhs=2)
    informational = CheckReport(name="conjecture", instances=1, failures=[witness], informational=True)
    strict = CheckReport(name="closed_forms", instances=1, failures=[witness])
    assert not informational.passed
    assert suite_passed([informational])
    assert not suite_passed([informational, strict])
    assert CheckReport.model_validate_json(strict.model_dump_json()).failures == [witness]


def test_checkers_share_the_cache() -> None:
    cache = MemoCache()
    run_suite(["closed_forms"], budget=SMALL, cache=cache)
    filled = len(cache)
    assert filled > 0
    run_suite(["closed_forms"], budget=SMALL, cache=cache)
    assert len(cache) == filled
