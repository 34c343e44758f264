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

"""Runs registered checkers concurrently over one shared memo cache."""

import logging
from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor

from app.solver.cache import MemoCache
from app.utils.config import SolverBudget, VerifyBudget
from app.utils.errors import DomainError
from app.utils.typing import CheckReport
from app.verify.checks import REGISTRY, VerifyContext

# Selector names that expand to several checkers.
ALIASES: dict[str, tuple[str, ...]] = {
    "convexity": ("convexity_restricted", "convexity_basic"),
    "conjecture": ("conjecture", "counterexample"),
    "theorem": ("theorem_sandwiches", "theorem2_equality"),
}


def select(names: Iterable[str] | None) -> list[str]:
    """Resolves selectors to checker names, in registry order."""
    if not names:
        return list(REGISTRY)
    wanted: set[str] = set()
    for name in names:
        if name in ALIASES:
            wanted.update(ALIASES[name])
        elif name in REGISTRY:
            wanted.add(name)
        else:
            known = ", ".join(sorted(set(REGISTRY) | set(ALIASES)))
            raise DomainError(f"unknown check {name!r}; known checks: {known}")
    return [name for name in REGISTRY if name in wanted]


def run_suite(
    names: Iterable[str] | None = None,
    budget: VerifyBudget | None = None,
    workers: int = 1,
    cache: MemoCache | None = None,
    solver_budget: SolverBudget | None = None,
) -> list[CheckReport]:
    selected = select(names)
    ctx = VerifyContext(
        budget=budget or VerifyBudget(),
        cache=cache if cache is not None else MemoCache(),
        solver_budget=solver_budget or SolverBudget(),
    )
    logging.info(f"Running {len(selected)} checks on {workers} worker(s)")
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        futures = [pool.submit(REGISTRY[name], ctx) for name in selected]
        reports = [future.result() for future in futures]
    failed = [r.name for r in reports if not r.passed and not r.informational]
    logging.info(f"Suite finished: {len(reports) - len(failed)} passed, {len(failed)} failed")
    return reports


def suite_passed(reports: Iterable[CheckReport]) -> bool:
    return all(r.passed or r.informational for r in reports)
