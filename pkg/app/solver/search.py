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

"""Exact minimax over game states.

V(s) = 0 when at most one candidate is live, otherwise
V(s) = 1 + min over admissible q of max(V(yes-child), V(no-child)).

The search is fail-soft: `_search(counts, limit)` returns the exact value when
it is below `limit` and otherwise some lower bound >= `limit`. Exact values and
lower bounds go to a shared MemoCache. Pruning layers:

  alpha        abandon a query once one child already reaches the current best
  lower_bound  skip queries whose children's weight bounds already lose, and
               stop scanning once a query meets the state's weight bound
  ordering     try a weight-balanced query before the lexicographic sweep

Values never depend on which layers are on.
"""

import logging
import time
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from math import comb

from opentelemetry import trace

from app.bounds.formulas import binom_le, state_weight, state_weight_bound
from app.game.core import (
    Counts,
    GameState,
    Params,
    Query,
    format_counts,
    is_admissible,
    query_vectors,
    transition,
)
from app.solver.cache import Key, MemoCache, cache_key
from app.utils.config import Pruning, SolverBudget, TreeBudget
from app.utils.errors import BudgetExceededError, DomainError

tracer = trace.get_tracer(__name__)

UNBOUNDED = 1 << 30


@dataclass(frozen=True)
class SolveResult:
    state: GameState
    value: int
    optimal_queries: tuple[Query, ...]
    principal: Query | None
    new_entries: int = 0


@dataclass
class StrategyNode:
    """Decision tree node: the query to ask here and the subtree per answer."""

    state: GameState
    query: Query | None = None
    yes: "StrategyNode | None" = None
    no: "StrategyNode | None" = None

    def depth(self) -> int:
        if self.query is None:
            return 0
        return 1 + max(child.depth() for child in self.children())

    def children(self) -> list["StrategyNode"]:
        return [child for child in (self.yes, self.no) if child is not None]

    def node_count(self) -> int:
        return 1 + sum(child.node_count() for child in self.children())

    def path_lengths(self) -> Iterator[int]:
        if self.query is None:
            yield 0
            return
        for child in self.children():
            for length in child.path_lengths():
                yield length + 1


def _balanced_query(counts: Counts, cap: int, target: int) -> Counts | None:
    """A query whose children both fit the weight budget of `target - 1` moves.

    Greedy on the per-component weight gains; returns None when the greedy
    fill cannot balance the two children.
    """
    lies = len(counts) - 1
    level = target - 1
    if level < 0:
        return None
    gains = [comb(level, lies - i) for i in range(lies + 1)]
    base = sum(x * binom_le(level, lies - i - 1) for i, x in enumerate(counts))
    budget = 1 << level
    room = budget - base
    need = state_weight(counts, target) - budget - base
    if room < 0 or need > room:
        return None
    asks = [0] * (lies + 1)
    size = acc = 0
    for i in sorted(range(lies + 1), key=lambda j: -gains[j]):
        if gains[i] == 0 or size == cap:
            break
        take = min(counts[i], cap - size, (room - acc) // gains[i])
        asks[i] = take
        size += take
        acc += take * gains[i]
    if size == 0 or acc < need:
        return None
    return tuple(asks)


def _lead_then(lead: Counts, queries: Iterable[Counts]) -> Iterator[Counts]:
    yield lead
    for q in queries:
        if q != lead:
            yield q


class Solver:
    """Exact value oracle for one game family (l, k) over a shared cache."""

    def __init__(
        self,
        params: Params,
        cache: MemoCache | None = None,
        *,
        pruning: Pruning | None = None,
        budget: SolverBudget | None = None,
    ) -> None:
        self.params = params
        self.cache = cache if cache is not None else MemoCache()
        self.pruning = pruning or Pruning()
        self.budget = budget or SolverBudget()
        self._lies = params.lies
        self._cap = params.cap

    # -------------------------------------------------------------------------
    # public API
    # -------------------------------------------------------------------------

    def counts_of(self, state: GameState | Iterable[int]) -> Counts:
        counts = state.counts if isinstance(state, GameState) else tuple(state)
        if len(counts) != self._lies + 1:
            raise DomainError(
                f"state {format_counts(counts)} has {len(counts)} components, l={self._lies} needs {self._lies + 1}"
            )
        if any(x < 0 for x in counts):
            raise DomainError(f"negative component in {format_counts(counts)}")
        if self._lies > self.budget.max_lies or sum(counts) > self.budget.max_total:
            raise BudgetExceededError(
                f"state {format_counts(counts)} with l={self._lies} exceeds the solver budget "
                f"(total <= {self.budget.max_total}, l <= {self.budget.max_lies})"
            )
        return counts

    def value(self, state: GameState | Iterable[int]) -> int:
        return self._search(self.counts_of(state), UNBOUNDED)

    def is_optimal(self, state: GameState | Iterable[int], query: Query | Counts) -> bool:
        """Both children of `query` are solvable within value - 1 moves."""
        counts = self.counts_of(state)
        asks = query.asks if isinstance(query, Query) else tuple(query)
        if not is_admissible(GameState(counts=counts), Query(asks=asks), self.params):
            return False
        value = self._search(counts, UNBOUNDED)
        return self._achieves(counts, asks, value, value)

    def principal(self, state: GameState | Iterable[int]) -> Query | None:
        """The lexicographically smallest optimal query."""
        counts = self.counts_of(state)
        total = sum(counts)
        if total <= 1:
            return None
        value = self._search(counts, UNBOUNDED)
        for asks in query_vectors(counts, min(self._cap, total - 1)):
            if self._achieves(counts, asks, value, value):
                return Query(asks=asks)
        raise AssertionError(f"no optimal query at {format_counts(counts)}")

    def solve(self, state: GameState | Iterable[int]) -> SolveResult:
        counts = self.counts_of(state)
        game_state = state if isinstance(state, GameState) else GameState(counts=counts)
        with tracer.start_as_current_span("solver.solve") as span:
            span.set_attribute("lies", self._lies)
            span.set_attribute("cap", self._cap)
            span.set_attribute("state", format_counts(counts))
            started = time.perf_counter()
            before = len(self.cache)
            value = self._search(counts, UNBOUNDED)
            total = sum(counts)
            optimal: tuple[Query, ...] = ()
            if total > 1:
                # Exact child values, so a reloaded cache file answers without new entries.
                optimal = tuple(
                    Query(asks=asks)
                    for asks in query_vectors(counts, min(self._cap, total - 1))
                    if self._achieves(counts, asks, value, UNBOUNDED)
                )
            new_entries = len(self.cache) - before
            span.set_attribute("value", value)
            span.set_attribute("optimal_queries", [str(q) for q in optimal])
            span.set_attribute("new_entries", new_entries)
            logging.debug(
                f"Solved {format_counts(counts)} (l={self._lies}, k={self._cap}) = {value} "
                f"in {time.perf_counter() - started:.3f}s, {new_entries} new entries"
            )
            return SolveResult(
                state=game_state,
                value=value,
                optimal_queries=optimal,
                principal=optimal[0] if optimal else None,
                new_entries=new_entries,
            )

    def extract_strategy(
        self, state: GameState | Iterable[int], budget: TreeBudget | None = None
    ) -> StrategyNode:
        """Decision tree following the principal query at every node."""
        budget = budget or TreeBudget()
        counts = self.counts_of(state)
        built = 0

        def build(node_counts: Counts, excluded: int) -> StrategyNode:
            nonlocal built
            built += 1
            if built > budget.max_nodes:
                raise BudgetExceededError(f"strategy tree exceeds {budget.max_nodes} nodes")
            node_state = GameState(counts=node_counts, excluded=excluded)
            query = self.principal(node_counts)
            if query is None:
                return StrategyNode(state=node_state)
            yes, no = transition(node_counts, query.asks)
            return StrategyNode(
                state=node_state,
                query=query,
                yes=build(yes, excluded + node_counts[-1] - query.asks[-1]),
                no=build(no, excluded + query.asks[-1]),
            )

        with tracer.start_as_current_span("solver.extract_strategy") as span:
            span.set_attribute("state", format_counts(counts))
            excluded = state.excluded if isinstance(state, GameState) else 0
            tree = build(counts, excluded)
            span.set_attribute("nodes", built)
            return tree

    def reachable_under_optimal_play(
        self, state: GameState | Iterable[int], depth: int
    ) -> list[tuple[int, Counts]]:
        """States reached by any optimal query and either answer within `depth` moves.

        Returns (first depth, counts) pairs in breadth-first, lexicographic order.
        """
        start = self.counts_of(state)
        seen: dict[Counts, int] = {start: 0}
        frontier = [start]
        for level in range(1, depth + 1):
            found: set[Counts] = set()
            for counts in frontier:
                total = sum(counts)
                if total <= 1:
                    continue
                value = self._search(counts, UNBOUNDED)
                for asks in query_vectors(counts, min(self._cap, total - 1)):
                    if not self._achieves(counts, asks, value, value):
                        continue
                    for child in transition(counts, asks):
                        if sum(child) >= 1 and child not in seen:
                            found.add(child)
            frontier = sorted(found)
            for child in frontier:
                seen[child] = level
        return sorted(((d, c) for c, d in seen.items()), key=lambda item: (item[0], item[1]))

    # -------------------------------------------------------------------------
    # search
    # -------------------------------------------------------------------------

    def _achieves(self, counts: Counts, asks: Counts, value: int, limit: int) -> bool:
        for child in transition(counts, asks):
            if self._search(child, limit) > value - 1:
                return False
        return True

    def _key(self, counts: Counts) -> Key:
        return cache_key(self._lies, self._cap, counts)

    def _floor(self, counts: Counts) -> int:
        if sum(counts) <= 1:
            return 0
        key = self._key(counts)
        exact = self.cache.exact.get(key)
        if exact is not None:
            return exact
        return max(state_weight_bound(counts), self.cache.lower.get(key, 0))

    def _ordered(self, counts: Counts, cap: int, target: int) -> Iterable[Counts]:
        pruning = self.pruning
        if pruning.convexity_normalized and counts[0] >= 2 * cap and sum(counts) != 2:
            return ((cap,) + (0,) * self._lies,)
        queries = query_vectors(counts, cap)
        if not pruning.ordering:
            return queries
        lead = _balanced_query(counts, cap, target)
        if lead is None:
            return queries
        return _lead_then(lead, queries)

    def _store(self, key: Key, value: int) -> int:
        if self.cache.size() >= self.budget.max_entries:
            raise BudgetExceededError(
                f"memo cache reached {self.budget.max_entries} entries (l={self._lies}, k={self._cap})"
            )
        return self.cache.put(key, value)

    def _search(self, counts: Counts, limit: int) -> int:
        total = sum(counts)
        if total <= 1:
            return 0
        cap = min(self._cap, total - 1)
        key = (self._lies, cap, counts)
        cache = self.cache
        known = cache.exact.get(key)
        if known is not None:
            return known

        use_alpha = self.pruning.alpha
        use_bound = self.pruning.lower_bound
        lo = state_weight_bound(counts) if use_bound else 1
        lo = max(lo, 1, cache.lower.get(key, 0))
        if lo >= limit:
            return lo

        best = UNBOUNDED
        floor = UNBOUNDED
        for asks in self._ordered(counts, cap, lo):
            yes, no = transition(counts, asks)
            bound = best if best < limit else limit
            if use_bound:
                f_yes = self._floor(yes)
                f_no = self._floor(no)
                hint = 1 + (f_yes if f_yes > f_no else f_no)
                if hint >= bound:
                    if hint < floor:
                        floor = hint
                    continue
                first, second = (yes, no) if f_yes >= f_no else (no, yes)
            else:
                first, second = no, yes
            if use_alpha:
                child_limit = bound - 1
                r1 = self._search(first, child_limit)
                if r1 >= child_limit:
                    floor = min(floor, 1 + r1)
                    continue
                r2 = self._search(second, child_limit)
                if r2 >= child_limit:
                    floor = min(floor, 1 + r2)
                    continue
                candidate = 1 + max(r1, r2)
            else:
                candidate = 1 + max(
                    self._search(first, UNBOUNDED), self._search(second, UNBOUNDED)
                )
                if candidate >= bound:
                    floor = min(floor, candidate)
                    continue
            best = candidate
            if best <= lo:
                break

        if best < limit:
            return self._store(key, best)
        result = max(lo, floor)
        cache.raise_lower(key, result)
        return result


# =============================================================================
# MODULE-LEVEL ENTRY POINTS
# =============================================================================


def solve(
    state: GameState,
    params: Params,
    cache: MemoCache | None = None,
    *,
    pruning: Pruning | None = None,
    budget: SolverBudget | None = None,
) -> SolveResult:
    return Solver(params, cache, pruning=pruning, budget=budget).solve(state)


def solve_basic(
    state: GameState,
    lies: int,
    cache: MemoCache | None = None,
    *,
    budget: SolverBudget | None = None,
) -> SolveResult:
    """Solves the Basic game: any subset may be asked (cap = live total)."""
    return Solver(Params.basic(lies, state.total()), cache, budget=budget).solve(state)


def basic_value(lies: int, counts: Counts, cache: MemoCache, budget: SolverBudget | None = None) -> int:
    return Solver(Params.basic(lies, sum(counts)), cache, budget=budget).value(counts)


@dataclass
class BasicEvaluators:
    """Basic-game evaluators in the shapes the bounds module expects."""

    cache: MemoCache = field(default_factory=MemoCache)
    budget: SolverBudget | None = None

    def of_n(self, lies: int, n: int) -> int:
        return basic_value(lies, (n,) + (0,) * lies, self.cache, self.budget)

    def of_state(self, lies: int, counts: Counts) -> int:
        return basic_value(lies, counts, self.cache, self.budget)


def extract_strategy(
    state: GameState, params: Params, cache: MemoCache | None = None
) -> StrategyNode:
    return Solver(params, cache).extract_strategy(state)


def reachable_under_optimal_play(
    start: GameState, params: Params, depth: int, cache: MemoCache | None = None
) -> list[tuple[int, Counts]]:
    return Solver(params, cache).reachable_under_optimal_play(start, depth)


def audit_cache(
    cache: MemoCache,
    params: Params | None = None,
    budget: SolverBudget | None = None,
) -> list[tuple[Key, int, int]]:
    """Recomputes exact entries on a cold cache; returns (key, cached, fresh) mismatches.

    With `params`, only the entries of that game family are audited.
    """
    cold = MemoCache()
    mismatches = []
    for key, cached in sorted(cache.exact.items()):
        lies, cap, counts = key
        if params is not None and (lies, cap) != (params.lies, params.effective_cap(sum(counts))):
            continue
        fresh = Solver(Params(lies=lies, cap=cap), cold, budget=budget).value(counts)
        if fresh != cached:
            mismatches.append((key, cached, fresh))
    if mismatches:
        logging.warning(f"Cache audit found {len(mismatches)} mismatching entries")
    return mismatches
