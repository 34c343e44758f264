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

"""Executable checks of the structural facts about game values.

Each checker enumerates its instance range, derives both sides of its
relation from the solver or the closed forms, and returns a CheckReport whose
witnesses can be re-run one instance at a time. Checkers never read each
other's results; they only share the memo cache.
"""

import functools
import itertools
import logging
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from typing import Any

from opentelemetry import trace

from app.bounds.formulas import (
    bound_report,
    ceil_log2,
    conjecture_quantities,
    ru0k_exact,
    ru_estimate,
    ruk1_exact,
    state_weight,
    theorem2,
    weight_bound,
)
from app.game.core import (
    Counts,
    GameState,
    Params,
    Query,
    complement,
    format_counts,
    is_admissible,
    query_vectors,
    shift_relax,
    transition,
)
from app.solver.cache import MemoCache
from app.solver.oracle import brute_force_oracle
from app.solver.search import BasicEvaluators, Solver
from app.strategies.policies import block_query, forced_no_query
from app.utils.config import OracleBudget, SolverBudget, VerifyBudget
from app.utils.errors import DomainError
from app.utils.typing import CheckReport, Witness

tracer = trace.get_tracer(__name__)


@dataclass
class VerifyContext:
    """Budgets plus the memo cache shared by every checker of a run."""

    budget: VerifyBudget = field(default_factory=VerifyBudget)
    cache: MemoCache = field(default_factory=MemoCache)
    solver_budget: SolverBudget = field(default_factory=SolverBudget)
    oracle_budget: OracleBudget = field(default_factory=OracleBudget)

    def solver(self, lies: int, cap: int) -> Solver:
        return Solver(Params(lies=lies, cap=cap), self.cache, budget=self.solver_budget)

    def basic(self, lies: int, counts: Counts) -> int:
        return self.solver(lies, max(sum(counts), 1)).value(counts)

    def evaluators(self) -> BasicEvaluators:
        return BasicEvaluators(self.cache, self.solver_budget)


class _Tally:
    def __init__(self, name: str, range_: dict[str, Any], informational: bool = False) -> None:
        self.report = CheckReport(name=name, range=range_, informational=informational)

    def expect(
        self,
        ok: bool,
        instance: dict[str, Any],
        relation: str,
        lhs: int | float | str | None = None,
        rhs: int | float | str | None = None,
    ) -> None:
        self.report.instances += 1
        if not ok:
            self.report.failures.append(
                Witness(instance=instance, relation=relation, lhs=lhs, rhs=rhs)
            )

    def skip(self) -> None:
        self.report.skipped += 1


def _states(lies: int, max_total: int, min_total: int = 2) -> Iterator[Counts]:
    """Count vectors with l+1 components and min_total <= total <= max_total."""
    for counts in itertools.product(range(max_total + 1), repeat=lies + 1):
        if min_total <= sum(counts) <= max_total:
            yield counts


def _initial(n: int, lies: int) -> Counts:
    return (n,) + (0,) * lies


Checker = Callable[[VerifyContext], CheckReport]
REGISTRY: dict[str, Checker] = {}


def checker(name: str) -> Callable[[Checker], Checker]:
    """Registers a checker and wraps it in a `verify.<name>` span."""

    def register(fn: Checker) -> Checker:
        @functools.wraps(fn)
        def run(ctx: VerifyContext | None = None) -> CheckReport:
            ctx = ctx or VerifyContext()
            with tracer.start_as_current_span(f"verify.{name}") as span:
                report = fn(ctx)
                span.set_attribute("instances", report.instances)
                span.set_attribute("failures", len(report.failures))
            logging.info(
                f"Check {name}: {report.instances} instances, "
                f"{len(report.failures)} failures, {report.skipped} skipped"
            )
            return report

        REGISTRY[name] = run
        return run

    return register


# =============================================================================
# CONVEXITY AND MONOTONICITY
# =============================================================================


def check_convexity(ctx: VerifyContext, variant: str = "restricted") -> CheckReport:
    """RU(..x_i..x_j..) <= RU after moving one unit from i down to i-a and one
    from j up to j+a, except when the total is 2 and j+a = l+1."""
    if variant not in ("restricted", "basic"):
        raise DomainError(f"unknown convexity variant {variant!r}")
    b = ctx.budget
    caps = list(range(1, b.cap + 1)) if variant == "restricted" else [b.total]
    tally = _Tally(
        f"convexity_{variant}",
        {"lies": b.lies, "total": b.total, "caps": caps},
    )
    for lies in range(1, b.lies + 1):
        for cap in caps:
            solver = ctx.solver(lies, cap)
            for counts in _states(lies, b.total):
                total = sum(counts)
                for i in range(1, lies + 1):
                    for j in range(i, lies + 1):
                        need = 2 if i == j else 1
                        if counts[i] < 1 or counts[j] < need:
                            continue
                        for a in range(1, i + 1):
                            if j + a > lies + 1:
                                break
                            if total == 2 and a == lies - j + 1:
                                tally.skip()
                                continue
                            spread = GameState(counts=counts)
                            spread = shift_relax(spread, j, j + a)
                            moved = list(spread.counts)
                            moved[i] -= 1
                            moved[i - a] += 1
                            lhs = solver.value(counts)
                            rhs = solver.value(tuple(moved))
                            tally.expect(
                                lhs <= rhs,
                                {"lies": lies, "k": cap, "state": format_counts(counts), "i": i, "j": j, "a": a},
                                "RU(state) <= RU(spread state)",
                                lhs,
                                rhs,
                            )
    return tally.report


@checker("convexity_restricted")
def _convexity_restricted(ctx: VerifyContext) -> CheckReport:
    return check_convexity(ctx, "restricted")


@checker("convexity_basic")
def _convexity_basic(ctx: VerifyContext) -> CheckReport:
    return check_convexity(ctx, "basic")


@checker("shift_monotonicity")
def check_shift_monotonicity(ctx: VerifyContext) -> CheckReport:
    """Moving a candidate to a later component never raises the value."""
    b = ctx.budget
    tally = _Tally("shift_monotonicity", {"lies": b.lies, "cap": b.cap, "total": b.total})
    for lies in range(1, b.lies + 1):
        for cap in range(1, b.cap + 1):
            solver = ctx.solver(lies, cap)
            for counts in _states(lies, b.total):
                state = GameState(counts=counts)
                for source in range(lies + 1):
                    if not counts[source]:
                        continue
                    for target in range(source + 1, lies + 2):
                        shifted = shift_relax(state, source, target).counts
                        lhs = solver.value(shifted)
                        rhs = solver.value(counts)
                        tally.expect(
                            lhs <= rhs,
                            {"lies": lies, "k": cap, "state": format_counts(counts), "from": source, "to": target},
                            "RU(shifted) <= RU(state)",
                            lhs,
                            rhs,
                        )
    return tally.report


@checker("endofgame")
def check_endofgame(ctx: VerifyContext) -> CheckReport:
    """A single candidate at component i beside a >= 1 at component l forces
    l-i+1 more queries; a lone last component of size >= 2 forces one."""
    b = ctx.budget
    tally = _Tally("endofgame", {"lies": b.lies, "cap": b.cap, "total": b.total})
    for lies in range(1, b.lies + 1):
        for cap in range(1, b.cap + 1):
            solver = ctx.solver(lies, cap)
            for a in range(1, b.total):
                for i in range(lies + 1):
                    counts = [0] * (lies + 1)
                    if i == lies:
                        if a < 2:
                            continue
                        counts[lies] = a
                        need = 1
                    else:
                        counts[i] = 1
                        counts[lies] = a
                        need = lies - i + 1
                    value = solver.value(tuple(counts))
                    tally.expect(
                        value >= need,
                        {"lies": lies, "k": cap, "state": format_counts(counts)},
                        "RU(state) >= l-i+1",
                        value,
                        need,
                    )
    return tally.report


@checker("onemorelie")
def check_onemorelie(ctx: VerifyContext) -> CheckReport:
    """One extra lie costs at least floor(n/k) more queries."""
    b = ctx.budget
    tally = _Tally("onemorelie", {"lies": b.lies, "cap": b.cap, "total": b.total})
    for lies in range(b.lies):
        for cap in range(1, b.cap + 1):
            fewer = ctx.solver(lies, cap)
            more = ctx.solver(lies + 1, cap)
            for n in range(max(2, cap), b.total + 1):
                lhs = more.value(_initial(n, lies + 1))
                rhs = fewer.value(_initial(n, lies)) + n // cap
                tally.expect(
                    lhs >= rhs,
                    {"lies": lies, "k": cap, "n": n},
                    "RU_{l+1}(n) >= RU_l(n) + floor(n/k)",
                    lhs,
                    rhs,
                )
    return tally.report


@checker("one_question_diff")
def check_one_question_diff(ctx: VerifyContext) -> CheckReport:
    """RU_l(y, n-y, 0..) - RU_l(x, n-x, 0..) <= 1 for 0 < x < y <= 2x (Basic game)."""
    b = ctx.budget
    tally = _Tally("one_question_diff", {"lies": b.lies, "total": b.total})
    for lies in range(b.lies + 1):
        for n in range(2, b.total + 1):
            for x in range(1, n + 1):
                for y in range(x + 1, min(2 * x, n) + 1):
                    if lies == 0:
                        # The second group is out of play without lies.
                        low, high = (x,), (y,)
                    else:
                        low = (x, n - x) + (0,) * (lies - 1)
                        high = (y, n - y) + (0,) * (lies - 1)
                    diff = ctx.basic(lies, high) - ctx.basic(lies, low)
                    tally.expect(
                        diff <= 1,
                        {"lies": lies, "n": n, "x": x, "y": y},
                        "RU(y, n-y) - RU(x, n-x) <= 1",
                        diff,
                        1,
                    )
    return tally.report


# =============================================================================
# WEIGHTS
# =============================================================================


@checker("weight_identity")
def check_weight_identity(ctx: VerifyContext) -> CheckReport:
    """w_q(s) = w_{q-1}(yes) + w_{q-1}(no) for every query and q >= 1."""
    b = ctx.budget
    tally = _Tally("weight_identity", {"lies": b.lies, "total": b.total, "q": b.total})
    for lies in range(b.lies + 1):
        for counts in _states(lies, b.total):
            for asks in query_vectors(counts, sum(counts) - 1):
                yes, no = transition(counts, asks)
                for q in range(1, b.total + 1):
                    lhs = state_weight(counts, q)
                    rhs = state_weight(yes, q - 1) + state_weight(no, q - 1)
                    tally.expect(
                        lhs == rhs,
                        {"state": format_counts(counts), "query": format_counts(asks), "q": q},
                        "w_q(s) == w_{q-1}(yes) + w_{q-1}(no)",
                        lhs,
                        rhs,
                    )
    return tally.report


@checker("weight_bound_sandwich")
def check_weight_bound_sandwich(ctx: VerifyContext) -> CheckReport:
    """W_l(n) <= RU_l(n) <= W_l(n) + l."""
    b = ctx.budget
    tally = _Tally("weight_bound_sandwich", {"lies": b.lies, "n": b.weight_n})
    for lies in range(b.lies + 1):
        for n in range(1, b.weight_n + 1):
            w = weight_bound(n, lies)
            exact = ctx.basic(lies, _initial(n, lies))
            tally.expect(
                w <= exact <= w + lies,
                {"lies": lies, "n": n},
                "W <= RU <= W + l",
                exact,
                f"[{w}, {w + lies}]",
            )
    return tally.report


@checker("ru_estimate")
def check_ru_estimate(ctx: VerifyContext) -> CheckReport:
    b = ctx.budget
    tally = _Tally("ru_estimate", {"lies": [1, 2], "n": b.weight_n})
    for lies in (1, 2):
        if lies > b.lies:
            break
        for n in range(2, b.weight_n + 1):
            lower, upper = ru_estimate(n, lies)
            exact = ctx.basic(lies, _initial(n, lies))
            tally.expect(
                lower <= exact <= upper,
                {"lies": lies, "n": n},
                "lower estimate <= RU <= upper estimate",
                exact,
                f"[{lower:.4f}, {upper:.4f}]",
            )
    return tally.report


# =============================================================================
# STRATEGY FACTS
# =============================================================================


@checker("forced_no")
def check_forced_no(ctx: VerifyContext) -> CheckReport:
    """The forced-NO vector minimizes the NO-child's value over every admissible
    query. Skipped: instances where the forced vector asks the whole live set,
    and instances whose forced NO-child has total 2 (the convexity exception)."""
    b = ctx.budget
    tally = _Tally("forced_no", {"lies": b.lies, "cap": b.cap, "total": b.total})
    for lies in range(b.lies + 1):
        for cap in range(1, b.cap + 1):
            solver = ctx.solver(lies, cap)
            params = Params(lies=lies, cap=cap)
            for counts in _states(lies, b.total):
                state = GameState(counts=counts)
                forced = forced_no_query(state, params)
                forced_no = transition(counts, forced.asks)[1]
                if not is_admissible(state, forced, params) or sum(forced_no) == 2:
                    tally.skip()
                    continue
                best = min(
                    solver.value(transition(counts, asks)[1])
                    for asks in query_vectors(counts, params.effective_cap(sum(counts)))
                )
                got = solver.value(forced_no)
                tally.expect(
                    got == best,
                    {"lies": lies, "k": cap, "state": format_counts(counts), "query": str(forced)},
                    "RU(NO-child of forced query) == min over queries",
                    got,
                    best,
                )
    return tally.report


@checker("block_query_optimal")
def check_block_query_optimal(ctx: VerifyContext) -> CheckReport:
    """With x0 >= 2k the block query (k, 0, ..., 0) is optimal and its NO-child
    is the harder one."""
    b = ctx.budget
    tally = _Tally("block_query_optimal", {"lies": b.lies, "cap": b.cap, "total": b.total})
    for lies in range(b.lies + 1):
        for cap in range(1, b.cap + 1):
            solver = ctx.solver(lies, cap)
            params = Params(lies=lies, cap=cap)
            for counts in _states(lies, b.total):
                if counts[0] < 2 * cap:
                    continue
                query = block_query(GameState(counts=counts), params)
                yes, no = transition(counts, query.asks)
                value = solver.value(counts)
                v_yes, v_no = solver.value(yes), solver.value(no)
                instance = {"lies": lies, "k": cap, "state": format_counts(counts)}
                tally.expect(1 + v_no == value, instance, "1 + RU(NO-child) == RU(state)", 1 + v_no, value)
                tally.expect(v_no >= v_yes, instance, "RU(NO-child) >= RU(YES-child)", v_no, v_yes)
    return tally.report


# =============================================================================
# CLOSED FORMS AND CROSS-CHECKS
# =============================================================================


@checker("closed_forms")
def check_closed_forms(ctx: VerifyContext) -> CheckReport:
    b = ctx.budget
    tally = _Tally(
        "closed_forms",
        {"n": b.closed_form_n, "k1_lies": b.lies, "k1_n": b.closed_form_k1_n},
    )
    for n in range(1, b.closed_form_n + 1):
        for cap in range(1, n + 1):
            exact = ctx.solver(0, cap).value((n,))
            formula = ru0k_exact(n, cap)
            tally.expect(exact == formula, {"lies": 0, "k": cap, "n": n}, "RU_0^k(n) == formula", exact, formula)
        exact = ctx.basic(0, (n,))
        tally.expect(exact == ceil_log2(n), {"lies": 0, "n": n}, "RU_0(n) == ceil(log2 n)", exact, ceil_log2(n))
    for lies in range(b.lies + 1):
        solver = ctx.solver(lies, 1)
        for n in range(1, b.closed_form_k1_n + 1):
            exact = solver.value(_initial(n, lies))
            formula = ruk1_exact(n, lies)
            tally.expect(exact == formula, {"lies": lies, "k": 1, "n": n}, "RU_l^1(n) == formula", exact, formula)
    return tally.report


@checker("oracle_equivalence")
def check_oracle_equivalence(ctx: VerifyContext) -> CheckReport:
    b = ctx.budget
    tally = _Tally("oracle_equivalence", {"lies": b.lies, "cap": b.cap, "total": b.oracle_total})
    for lies in range(b.lies + 1):
        for cap in range(1, b.cap + 1):
            params = Params(lies=lies, cap=cap)
            solver = ctx.solver(lies, cap)
            for counts in _states(lies, b.oracle_total, min_total=0):
                exact = solver.value(counts)
                oracle = brute_force_oracle(GameState(counts=counts), params, budget=ctx.oracle_budget)
                tally.expect(
                    exact == oracle,
                    {"lies": lies, "k": cap, "state": format_counts(counts)},
                    "solve == oracle",
                    exact,
                    oracle,
                )
    return tally.report


@checker("large_cap_equivalence")
def check_large_cap_equivalence(ctx: VerifyContext) -> CheckReport:
    """For k >= floor(n/2) the cap never binds: RU_l^k(n) = RU_l(n)."""
    b = ctx.budget
    tally = _Tally("large_cap_equivalence", {"lies": b.lies, "total": b.total})
    for lies in range(b.lies + 1):
        for n in range(2, b.total + 1):
            basic = ctx.basic(lies, _initial(n, lies))
            for cap in range(max(1, n // 2), n + 1):
                capped = ctx.solver(lies, cap).value(_initial(n, lies))
                tally.expect(capped == basic, {"lies": lies, "k": cap, "n": n}, "RU_l^k(n) == RU_l(n)", capped, basic)
        # Complements: the YES-child of q is the NO-child of its complement.
        for counts in _states(lies, b.total):
            state = GameState(counts=counts)
            for asks in query_vectors(counts, sum(counts) - 1):
                flipped = complement(state, Query(asks=asks))
                yes = transition(counts, asks)[0]
                no_of_flipped = transition(counts, flipped.asks)[1]
                tally.expect(
                    yes == no_of_flipped,
                    {"lies": lies, "state": format_counts(counts), "query": format_counts(asks)},
                    "YES-child(q) == NO-child(complement of q)",
                    format_counts(yes),
                    format_counts(no_of_flipped),
                )
    return tally.report


# =============================================================================
# SANDWICHES
# =============================================================================


def _sandwich_triples(b: VerifyBudget) -> list[tuple[int, int, int]]:
    triples = [
        (n, k, lies)
        for k in (2, 3)
        for lies in (1, 2)
        if lies <= b.lies
        for n in range(2 * k + 2, b.sandwich_n + 1)
    ]
    triples.append((b.conjecture_n, b.conjecture_k, 1))
    return triples


@checker("theorem_sandwiches")
def check_theorem_sandwiches(ctx: VerifyContext) -> CheckReport:
    """L, L-hat and L-tilde sandwiches, plus the large-n value where it applies."""
    b = ctx.budget
    tally = _Tally(
        "theorem_sandwiches",
        {"caps": [2, 3], "lies": [1, 2], "n": b.sandwich_n, "extra": [b.conjecture_n, b.conjecture_k, 1]},
    )
    evaluators = ctx.evaluators()
    for n, k, lies in _sandwich_triples(b):
        exact = ctx.solver(lies, k).value(_initial(n, lies))
        report = bound_report(n, k, lies, evaluators.of_n, evaluators.of_state, exact=exact)
        instance = {"n": n, "k": k, "lies": lies}
        if report.l_tilde is None:
            tally.skip()
        violations = report.sandwich_violations()
        tally.expect(
            not violations,
            instance,
            "; ".join(violations) or "all sandwiches",
            exact,
            report.model_dump_json(include={"l", "l_plus", "l_hat", "l_tilde", "theorem2_value"}),
        )
    return tally.report


@checker("theorem2_equality")
def check_theorem2_equality(ctx: VerifyContext) -> CheckReport:
    """Exact value equals the large-n formula wherever the threshold is met (k=2, l=1)."""
    b = ctx.budget
    tally = _Tally("theorem2_equality", {"k": 2, "lies": 1, "n": b.theorem2_n})
    solver = ctx.solver(1, 2)
    for n in range(6, b.theorem2_n + 1):
        applicable, value = theorem2(n, 2, 1)
        if not applicable:
            tally.skip()
            continue
        exact = solver.value((n, 0))
        tally.expect(exact == value, {"n": n, "k": 2, "lies": 1}, "RU_1^2(n) == formula", exact, value)
    return tally.report


# =============================================================================
# OPTIMAL-QUERY CONJECTURE
# =============================================================================


def _conjecture_row(solver: Solver, a: int, b: int, k: int) -> tuple[int, int, int, int] | None:
    """(C, chi0, chi1, predicted value), or None when a chi is undefined."""
    big_c, chi0, chi1 = conjecture_quantities(a, b, k, lambda x0, x1: solver.value((x0, x1)))
    if chi0 is None or chi1 is None:
        return None
    predicted = max(big_c, 1 + solver.value((a - chi0, b - chi1 + chi0)))
    return big_c, chi0, chi1, predicted


@checker("conjecture")
def check_conjecture(ctx: VerifyContext) -> CheckReport:
    """Tabulates the conjectured value formula along optimal play from (n, 0).

    Informational: disagreements are listed but do not fail a run.
    """
    b = ctx.budget
    k, n = b.conjecture_k, b.conjecture_n
    tally = _Tally("conjecture", {"k": k, "n": n, "lies": 1}, informational=True)
    solver = ctx.solver(1, k)
    depth = solver.value((n, 0))
    for _, (a, rest) in solver.reachable_under_optimal_play((n, 0), depth):
        if a + rest < 2 or not 2 * k > a:
            tally.skip()
            continue
        row = _conjecture_row(solver, a, rest, k)
        if row is None:
            tally.skip()
            continue
        _, chi0, chi1, predicted = row
        truth = solver.value((a, rest))
        tally.expect(
            predicted == truth,
            {"state": format_counts((a, rest)), "k": k, "chi": format_counts((chi0, chi1))},
            "conjectured value == RU",
            predicted,
            truth,
        )
    return tally.report


@checker("counterexample")
def reproduce_counterexample(ctx: VerifyContext) -> CheckReport:
    """The state (10, 44) with k = 16 and one lie refutes the conjectured optimal query."""
    k, a, b = 16, 10, 44
    tally = _Tally("counterexample", {"state": "10,44", "k": k, "lies": 1, "start": "56,0"})
    solver = ctx.solver(1, k)
    instance = {"state": "10,44", "k": k, "lies": 1}
    value = solver.value((a, b))
    tally.expect(value == 7, instance, "RU(10,44) == 7", value, 7)
    big_c, chi0, chi1 = conjecture_quantities(a, b, k, lambda x0, x1: solver.value((x0, x1)))
    tally.expect(big_c == 7, instance, "C == 7", big_c, 7)
    chi = format_counts((chi0, chi1)) if chi0 is not None and chi1 is not None else "undefined"
    tally.expect(chi == "8,6", instance, "(chi0, chi1) == (8, 6)", chi, "8,6")
    conjectured = solver.is_optimal((a, b), (8, 6))
    tally.expect(not conjectured, instance, "(8, 6) is not optimal", str(conjectured), "False")
    actual = solver.is_optimal((a, b), (7, 9))
    tally.expect(actual, instance, "(7, 9) is optimal", str(actual), "True")
    reached = {
        counts: level for level, counts in solver.reachable_under_optimal_play((56, 0), 3)
    }
    tally.expect(
        (a, b) in reached,
        {"start": "56,0", "k": k, "lies": 1},
        "(10, 44) reachable within three optimal queries",
        reached.get((a, b)),
        3,
    )
    return tally.report


# Structural fact -> checkers exercising it.
COVERAGE: dict[str, tuple[str, ...]] = {
    "convexity (restricted game)": ("convexity_restricted",),
    "convexity (basic game)": ("convexity_basic",),
    "shift monotonicity": ("shift_monotonicity",),
    "end of game": ("endofgame",),
    "one more lie": ("onemorelie",),
    "one question difference": ("one_question_diff",),
    "weight halving identity": ("weight_identity",),
    "weight bound sandwich": ("weight_bound_sandwich",),
    "logarithmic estimate": ("ru_estimate",),
    "forced NO answer": ("forced_no",),
    "best question": ("block_query_optimal",),
    "restricted lower bound sandwich": ("theorem_sandwiches",),
    "weight-based sandwich": ("theorem_sandwiches",),
    "two-component sandwich": ("theorem_sandwiches",),
    "large n exact value": ("theorem_sandwiches", "theorem2_equality"),
    "known closed forms": ("closed_forms",),
    "complements and large caps": ("large_cap_equivalence",),
    "brute-force agreement": ("oracle_equivalence",),
    "optimal query conjecture": ("conjecture", "counterexample"),
}
