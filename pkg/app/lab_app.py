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

import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any

from google.cloud import logging as google_cloud_logging
from opentelemetry import trace
from opentelemetry.sdk.trace import TracerProvider, export
from pydantic import BaseModel

from app.bounds.formulas import bound_report
from app.game.core import GameState, Params
from app.solver.cache import MemoCache
from app.solver.search import BasicEvaluators, SolveResult, Solver
from app.utils.config import Pruning, Settings, SolverBudget, VerifyBudget
from app.utils.errors import BudgetExceededError, DomainError
from app.utils.tracing import LoggingSpanExporter
from app.utils.typing import BoundReport, CheckReport, StructuredLog, SweepRow
from app.verify.suite import run_suite, suite_passed

tracer = trace.get_tracer(__name__)

# One cache per sweep worker process, reused across the cells it runs.
_WORKER_CACHE: MemoCache | None = None


def bounds_for(
    n: int,
    k: int,
    lies: int,
    cache: MemoCache,
    solver_budget: SolverBudget | None = None,
    with_exact: bool = True,
) -> BoundReport:
    """BoundReport for (n, k, l), with the exact value when the solver can reach it."""
    evaluators = BasicEvaluators(cache, solver_budget)
    exact = None
    notes = []
    if with_exact:
        try:
            exact = Solver(Params(lies=lies, cap=k), cache, budget=solver_budget).value(
                GameState.initial(n, lies)
            )
        except BudgetExceededError as e:
            notes.append(f"exact: {e}")
    report = bound_report(n, k, lies, evaluators.of_n, evaluators.of_state, exact=exact)
    report.notes.extend(notes)
    return report


def sweep_cell(
    n: int,
    k: int,
    lies: int,
    solver_budget: dict[str, int] | None = None,
    cache: MemoCache | None = None,
) -> SweepRow:
    """One sweep row; domain and budget problems become the row's `error`."""
    global _WORKER_CACHE
    if cache is None:
        if _WORKER_CACHE is None:
            _WORKER_CACHE = MemoCache()
        cache = _WORKER_CACHE
    budget = SolverBudget().override(solver_budget or {})
    with tracer.start_as_current_span("sweep.cell") as span:
        span.set_attribute("n", n)
        span.set_attribute("k", k)
        span.set_attribute("lies", lies)
        try:
            report = bounds_for(n, k, lies, cache, budget)
        except (DomainError, BudgetExceededError) as e:
            return SweepRow(n=n, k=k, lies=lies, error=str(e))
        fields = report.model_dump(exclude={"n", "k", "lies", "notes"})
        sandwich_ok = None if report.exact is None else not report.sandwich_violations()
        return SweepRow(n=n, k=k, lies=lies, sandwich_ok=sandwich_ok, **fields)


class LiarGameLab:
    """Application object: one shared memo cache behind every operation."""

    def __init__(
        self,
        settings: Settings | None = None,
        cache: MemoCache | None = None,
        solver_budget: SolverBudget | None = None,
        pruning: Pruning | None = None,
    ) -> None:
        self.settings = settings or Settings.from_env()
        self.cache = cache if cache is not None else MemoCache()
        self.solver_budget = solver_budget or SolverBudget()
        self.pruning = pruning or Pruning()
        self.logger: Any = None

    def set_up(self, batch_spans: bool = True) -> None:
        """Set up logging and tracing for the lab."""
        logging.basicConfig(
            level=self.settings.log_level,
            stream=sys.stderr,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )
        logging_client = None
        if self.settings.cloud_logging:
            logging_client = google_cloud_logging.Client()
            self.logger = logging_client.logger(__name__)
        provider = TracerProvider()
        exporter = LoggingSpanExporter(logging_client=logging_client)
        processor = (
            export.BatchSpanProcessor(exporter)
            if batch_spans
            else export.SimpleSpanProcessor(exporter)
        )
        provider.add_span_processor(processor)
        trace.set_tracer_provider(provider)

    def register_report(
        self, report: BaseModel | dict[str, Any], log_type: str = "verification"
    ) -> None:
        """Collect and log a report as one structured entry."""
        payload = report.model_dump() if isinstance(report, BaseModel) else report
        entry = StructuredLog.model_validate({"payload": payload, "log_type": log_type})
        failed = bool(payload.get("failures")) and not payload.get("informational")
        severity = "WARNING" if failed else "INFO"
        if self.logger is not None:
            self.logger.log_struct(entry.model_dump(), severity=severity)
        else:
            logging.log(
                logging.WARNING if failed else logging.INFO,
                json.dumps(entry.model_dump(), sort_keys=True),
            )

    def register_operations(self) -> dict[str, list[str]]:
        return {"": ["solve", "bounds", "sweep", "verify", "register_report"]}

    def solver(self, lies: int, cap: int) -> Solver:
        return Solver(
            Params(lies=lies, cap=cap), self.cache, pruning=self.pruning, budget=self.solver_budget
        )

    def solve(self, state: GameState, cap: int) -> SolveResult:
        result = self.solver(state.lies, cap).solve(state)
        self.register_report(
            {
                "state": str(state),
                "lies": state.lies,
                "k": cap,
                "value": result.value,
                "principal": str(result.principal) if result.principal else None,
            },
            log_type="solve",
        )
        return result

    def bounds(self, n: int, k: int, lies: int, with_exact: bool = True) -> BoundReport:
        report = bounds_for(n, k, lies, self.cache, self.solver_budget, with_exact)
        self.register_report(report, log_type="bounds")
        return report

    def sweep(
        self,
        n_values: list[int],
        cap_values: list[int],
        lies_values: list[int],
        workers: int = 1,
    ) -> list[SweepRow]:
        """Rows in (l, k, n) order; cells run in worker processes when workers > 1."""
        cells = [(n, k, lies) for lies in lies_values for k in cap_values for n in n_values]
        overrides = self.solver_budget.model_dump()
        if workers <= 1:
            rows = [sweep_cell(n, k, lies, overrides, self.cache) for n, k, lies in cells]
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(sweep_cell, n, k, lies, overrides) for n, k, lies in cells]
                rows = [future.result() for future in futures]
        for row in rows:
            logging.info(f"Sweep cell n={row.n} k={row.k} l={row.lies}: exact={row.exact} error={row.error}")
        return rows

    def verify(
        self,
        names: list[str] | None = None,
        budget: VerifyBudget | None = None,
        workers: int = 1,
    ) -> list[CheckReport]:
        reports = run_suite(names, budget, workers, self.cache, self.solver_budget)
        for report in reports:
            self.register_report(report)
        return reports

    def clone(self) -> "LiarGameLab":
        """Returns a lab with the same configuration and a fresh cache."""
        return self.__class__(
            settings=self.settings,
            solver_budget=self.solver_budget,
            pruning=self.pruning,
        )


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="Run the liar game verification suite")
    parser.add_argument(
        "--only",
        nargs="+",
        default=None,
        help="Checks to run (defaults to all registered checks)",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=4,
        help="Checks run concurrently on this many threads",
    )
    parser.add_argument(
        "--cloud-logging",
        action="store_true",
        help="Send structured reports to Google Cloud Logging",
    )
    args = parser.parse_args()

    settings = Settings.from_env()
    if args.cloud_logging:
        settings = settings.model_copy(update={"cloud_logging": True})

    print("""
    ╔═══════════════════════════════════════════════════════════╗
    ║                                                           ║
    ║   🎲 RUNNING LIAR GAME VERIFICATION SUITE 🎲              ║
    ║                                                           ║
    ╚═══════════════════════════════════════════════════════════╝
    """)

    lab = LiarGameLab(settings=settings)
    lab.set_up()
    results = lab.verify(args.only, workers=args.workers)
    for result in results:
        mark = "PASS" if result.passed else ("INFO" if result.informational else "FAIL")
        print(f"  [{mark}] {result.name}: {result.instances} instances")
    sys.exit(0 if suite_passed(results) else 4)
