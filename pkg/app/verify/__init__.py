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

"""Checkers for the structural facts about game values."""

from app.verify.checks import (
    COVERAGE,
    REGISTRY,
    VerifyContext,
    check_block_query_optimal,
    check_closed_forms,
    check_conjecture,
    check_convexity,
    check_endofgame,
    check_forced_no,
    check_large_cap_equivalence,
    check_one_question_diff,
    check_onemorelie,
    check_oracle_equivalence,
    check_ru_estimate,
    check_shift_monotonicity,
    check_theorem2_equality,
    check_theorem_sandwiches,
    check_weight_bound_sandwich,
    check_weight_identity,
    reproduce_counterexample,
)
from app.verify.suite import ALIASES, run_suite, select, suite_passed

__all__ = [
    "ALIASES",
    "COVERAGE",
    "REGISTRY",
    "VerifyContext",
    "check_block_query_optimal",
    "check_closed_forms",
    "check_conjecture",
    "check_convexity",
    "check_endofgame",
    "check_forced_no",
    "check_large_cap_equivalence",
    "check_one_question_diff",
    "check_onemorelie",
    "check_oracle_equivalence",
    "check_ru_estimate",
    "check_shift_monotonicity",
    "check_theorem2_equality",
    "check_theorem_sandwiches",
    "check_weight_bound_sandwich",
    "check_weight_identity",
    "reproduce_counterexample",
    "run_suite",
    "select",
    "suite_passed",
]
