#!/usr/bin/env python3
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

"""
Runs the acceptance criteria locally and prints a PASS/FAIL line for each.

Every criterion builds its own cold cache unless it is about warm caches, so
a failure in one never leaks into another.
"""

import json
import sys
import time
from collections.abc import Callable
from pathlib import Path

sys.path.append(str(Path(__file__).parent))

from app.bounds.formulas import ceil_log2, ru0k_exact, ruk1_exact  # noqa: E402
from app.game.core import GameState, Params  # noqa: E402
from app.solver.cache import MemoCache  # noqa: E402
from app.solver.search import Solver, solve, solve_basic  # noqa: E402
from app.utils.config import VerifyBudget  # noqa: E402
from app.verify.checks import (  # noqa: E402
    VerifyContext,
    check_oracle_equivalence,
    check_theorem_sandwiches,
    reproduce_counterexample,
)
from app.verify.suite import run_suite, suite_passed  # noqa: E402


def counterexample() -> str:
    report = reproduce_counterexample(VerifyContext())
    return "" if report.passed else report.model_dump_json()


def theorem2_equality() -> str:
    solver = Solver(Params(lies=1, cap=2))
    wrong = [n for n in range(14, 21) if solver.value((n, 0)) != n]
    return f"mismatch at n={wrong}" if wrong else ""


def sandwiches() -> str:
    report = check_theorem_sandwiches(VerifyContext())
    return "" if report.passed else report.model_dump_json()


def oracle() -> str:
    report = check_oracle_equivalence(VerifyContext(budget=VerifyBudget(oracle_total=6)))
    return "" if report.passed else report.model_dump_json()


STRUCTURE_SUITES = [
    "convexity",
    "endofgame",
    "onemorelie",
    "one_question_diff",
    "forced_no",
    "block_query_optimal",
    "weight_identity",
    "weight_bound_sandwich",
    "ru_estimate",
]


def structure_suites() -> str:
    reports = run_suite(STRUCTURE_SUITES, workers=4)
    failed = [r.name for r in reports if not r.passed]
    return f"failed: {failed}" if not suite_passed(reports) else ""


def closed_forms() -> str:
    cache = MemoCache()
    problems = []
    for n in range(1, 65):
        for k in range(1, n + 1):
            if Solver(Params(lies=0, cap=k), cache).value((n,)) != ru0k_exact(n, k):
                problems.append(f"RU0^{k}({n})")
        if solve_basic(GameState.initial(n, 0), 0, cache).value != ceil_log2(n):
            problems.append(f"RU0({n})")
    for lies in range(3):
        for n in range(1, 9):
            if Solver(Params(lies=lies, cap=1), cache).value(GameState.initial(n, lies)) != ruk1_exact(n, lies):
                problems.append(f"RU{lies}^1({n})")
    return ", ".join(problems)


def determinism() -> str:
    def payload() -> str:
        facts = [counterexample(), theorem2_equality(), sandwiches()]
        value = solve(GameState(counts=(10, 44)), Params(lies=1, cap=16))
        return json.dumps(
            {"facts": facts, "value": value.value, "optimal": [str(q) for q in value.optimal_queries]},
            sort_keys=True,
        )

    if payload() != payload():
        return "cold-cache payloads differ"
    cache = MemoCache()
    state, params = GameState(counts=(10, 44)), Params(lies=1, cap=16)
    solve(state, params, cache)
    again = solve(state, params, cache)
    return f"warm re-solve added {again.new_entries} entries" if again.new_entries else ""


CRITERIA: dict[str, Callable[[], str]] = {
    "1. conjecture counterexample": counterexample,
    "2. large-n exact value (k=2, l=1, n=14..20)": theorem2_equality,
    "3. bound sandwiches": sandwiches,
    "4. oracle equivalence": oracle,
    "5. structural fact suites": structure_suites,
    "6. closed forms": closed_forms,
    "7. determinism and warm cache": determinism,
}


def main() -> None:
    print("""
    ╔═══════════════════════════════════════════════════════════════════╗
    ║                                                                   ║
    ║   🎲 LIAR GAME ACCEPTANCE CRITERIA 🎲                             ║
    ║                                                                   ║
    ╚═══════════════════════════════════════════════════════════════════╝
    """)
    failures = 0
    for name, criterion in CRITERIA.items():
        print(f"\n🔎 {name}")
        started = time.perf_counter()
        try:
            problem = criterion()
        except Exception as e:
            problem = f"error: {e}"
        elapsed = time.perf_counter() - started
        if problem:
            failures += 1
            print(f"   ❌ FAILED ({elapsed:.1f}s): {problem[:500]}")
        else:
            print(f"   ✅ PASSED ({elapsed:.1f}s)")
    if failures:
        print(f"\n❌ {failures} criteria failed")
        sys.exit(1)
    print("\n🎉 All acceptance criteria passed!")


if __name__ == "__main__":
    main()
