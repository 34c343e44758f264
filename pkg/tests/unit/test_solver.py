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

import itertools

import pytest

from app.bounds.formulas import ceil_log2, state_weight_bound
from app.game.core import GameState, Params, Query, enumerate_queries, shift_relax
from app.solver.cache import MemoCache
from app.solver.oracle import brute_force_oracle
from app.solver.search import (
    BasicEvaluators,
    Solver,
    audit_cache,
    extract_strategy,
    reachable_under_optimal_play,
    solve,
    solve_basic,
)
from app.utils.config import OracleBudget, Pruning, SolverBudget, TreeBudget
from app.utils.errors import BudgetExceededError, DomainError, OracleDepthExceeded


@pytest.fixture(scope="module")
def shared_cache() -> MemoCache:
    """One memo cache reused by every solver in this module."""
    return MemoCache()


def small_states(lies: int, max_total: int) -> list[tuple[int, ...]]:
    return [
        c
        for c in itertools.product(range(max_total + 1), repeat=lies + 1)
        if sum(c) <= max_total
    ]


def test_solve_binary_search() -> None:
    result = solve(GameState(counts=(8,)), Params(lies=0, cap=8))
    assert result.value == 3


def test_solve_counterexample_state(shared_cache: MemoCache) -> None:
    result = solve(GameState(counts=(10, 44)), Params(lies=1, cap=16), shared_cache)
    assert result.value == 7
    assert result.principal == Query(asks=(7, 9))
    assert Query(asks=(7, 9)) in result.optimal_queries
    assert Query(asks=(8, 6)) not in result.optimal_queries


def test_solve_two_candidates_one_lie() -> None:
    assert solve(GameState(counts=(1, 1)), Params(lies=1, cap=2)).value == 2


def test_terminal_states_have_value_zero() -> None:
    for counts in [(0, 0), (1, 0), (0, 1)]:
        result = solve(GameState(counts=counts), Params(lies=1, cap=3))
        assert result.value == 0
        assert result.optimal_queries == ()
        assert result.principal is None


def test_solve_basic_matches_ceil_log2(shared_cache: MemoCache) -> None:
    for n in range(1, 65):
        assert solve_basic(GameState.initial(n, 0), 0, shared_cache).value == ceil_log2(n)


def test_basic_one_lie_two_candidates() -> None:
    assert solve_basic(GameState.initial(2, 1), 1).value == 3


def test_every_optimal_query_achieves_the_value(shared_cache: MemoCache) -> None:
    solver = Solver(Params(lies=1, cap=3), shared_cache)
    result = solver.solve((4, 3))
    assert result.optimal_queries
    for query in result.optimal_queries:
        assert solver.is_optimal((4, 3), query)
    for query in enumerate_queries(GameState(counts=(4, 3)), solver.params):
        if query not in result.optimal_queries:
            assert not solver.is_optimal((4, 3), query)


def test_is_optimal_rejects_inadmissible_queries(shared_cache: MemoCache) -> None:
    solver = Solver(Params(lies=1, cap=2), shared_cache)
    assert not solver.is_optimal((3, 1), (3, 0))
    assert not solver.is_optimal((3, 1), (0, 0))
    assert not solver.is_optimal((1, 0), (1, 0))


@pytest.mark.parametrize("lies", [0, 1, 2])
@pytest.mark.parametrize("cap", [1, 2, 3])
def test_oracle_equivalence(lies: int, cap: int, shared_cache: MemoCache) -> None:
    solver = Solver(Params(lies=lies, cap=cap), shared_cache)
    for counts in small_states(lies, 5):
        oracle = brute_force_oracle(GameState(counts=counts), Params(lies=lies, cap=cap))
        assert solver.value(counts) == oracle, f"mismatch at {counts}"


def test_oracle_examples() -> None:
    assert brute_force_oracle(GameState(counts=(2,)), Params(lies=0, cap=1)) == 1
    assert brute_force_oracle(GameState(counts=(0, 2)), Params(lies=1, cap=1)) == 1


def test_oracle_limits() -> None:
    with pytest.raises(BudgetExceededError):
        brute_force_oracle(GameState(counts=(9,)), Params(lies=0, cap=2))
    with pytest.raises(OracleDepthExceeded):
        brute_force_oracle(GameState(counts=(6, 0)), Params(lies=1, cap=1), depth_limit=3)
    with pytest.raises(DomainError):
        brute_force_oracle(GameState(counts=(2, 0)), Params(lies=0, cap=1))
    big = OracleBudget(max_total=12)
    assert brute_force_oracle(GameState(counts=(12,)), Params(lies=0, cap=4), budget=big) == 4


@pytest.mark.parametrize(
    "pruning",
    [
        Pruning(alpha=False, lower_bound=False, ordering=False),
        Pruning(alpha=True, lower_bound=False, ordering=False),
        Pruning(alpha=False, lower_bound=True, ordering=True),
        Pruning(convexity_normalized=True),
    ],
)
def test_pruning_layers_do_not_change_values(pruning: Pruning, shared_cache: MemoCache) -> None:
    for lies, cap in [(1, 2), (2, 3)]:
        reference = Solver(Params(lies=lies, cap=cap), shared_cache)
        plain = Solver(Params(lies=lies, cap=cap), MemoCache(), pruning=pruning)
        for counts in small_states(lies, 7):
            assert plain.value(counts) == reference.value(counts), f"{pruning} at {counts}"


def test_values_respect_the_weight_bound(shared_cache: MemoCache) -> None:
    solver = Solver(Params(lies=2, cap=3), shared_cache)
    for counts in small_states(2, 8):
        solver.value(counts)
    for (_, _, counts), value in shared_cache.exact.items():
        assert value >= state_weight_bound(counts)


def test_cap_monotonicity(shared_cache: MemoCache) -> None:
    for counts in small_states(1, 8):
        values = [Solver(Params(lies=1, cap=k), shared_cache).value(counts) for k in (1, 2, 3, 8)]
        assert values == sorted(values, reverse=True)


def test_shift_monotonicity(shared_cache: MemoCache) -> None:
    solver = Solver(Params(lies=2, cap=2), shared_cache)
    for counts in small_states(2, 6):
        state = GameState(counts=counts)
        for source in range(3):
            if counts[source]:
                for target in range(source + 1, 4):
                    assert solver.value(shift_relax(state, source, target)) <= solver.value(state)


def test_value_ignores_excluded_count() -> None:
    solver = Solver(Params(lies=1, cap=2))
    assert solver.value(GameState(counts=(3, 2), excluded=5)) == solver.value((3, 2))


def test_warm_cache_adds_no_entries() -> None:
    cache = MemoCache()
    state, params = GameState(counts=(10, 44)), Params(lies=1, cap=16)
    first = solve(state, params, cache)
    assert first.new_entries > 0
    again = solve(state, params, cache)
    assert again.new_entries == 0
    assert again.optimal_queries == first.optimal_queries


def test_extract_strategy_binary_search() -> None:
    tree = extract_strategy(GameState(counts=(8,)), Params(lies=0, cap=8))
    assert tree.depth() == 3
    assert set(tree.path_lengths()) == {3}


def test_extract_strategy_paths(shared_cache: MemoCache) -> None:
    solver = Solver(Params(lies=1, cap=2), shared_cache)
    value = solver.value((4, 1))
    tree = solver.extract_strategy((4, 1))
    lengths = list(tree.path_lengths())
    assert max(lengths) == value == tree.depth()
    assert all(length <= value for length in lengths)


def test_extract_strategy_root_query(shared_cache: MemoCache) -> None:
    solver = Solver(Params(lies=1, cap=16), shared_cache)
    assert solver.principal((10, 44)) == Query(asks=(7, 9))


def test_extract_strategy_budget() -> None:
    solver = Solver(Params(lies=1, cap=2))
    with pytest.raises(BudgetExceededError):
        solver.extract_strategy((6, 0), TreeBudget(max_nodes=5))


def test_reachable_under_optimal_play() -> None:
    start = GameState(counts=(4, 0))
    reached = reachable_under_optimal_play(start, Params(lies=1, cap=2), 2)
    assert reached[0] == (0, (4, 0))
    depths = [depth for depth, _ in reached]
    assert depths == sorted(depths)
    assert max(depths) <= 2
    assert len({counts for _, counts in reached}) == len(reached)


def test_budget_limits() -> None:
    with pytest.raises(BudgetExceededError):
        Solver(Params(lies=1, cap=2), budget=SolverBudget(max_total=4)).value((5, 0))
    with pytest.raises(BudgetExceededError):
        Solver(Params(lies=1, cap=2), budget=SolverBudget(max_entries=3)).value((8, 0))
    with pytest.raises(DomainError):
        Solver(Params(lies=1, cap=2)).value((5,))


def test_audit_cache_finds_corruption() -> None:
    cache = MemoCache()
    solver = Solver(Params(lies=1, cap=2), cache)
    solver.value((5, 0))
    assert audit_cache(cache) == []
    key = next(iter(cache.exact))
    cache.exact[key] += 1
    mismatches = audit_cache(cache, Params(lies=1, cap=2))
    assert [m[0] for m in mismatches] == [key]


def test_basic_evaluators(shared_cache: MemoCache) -> None:
    evaluators = BasicEvaluators(shared_cache)
    assert evaluators.of_n(1, 2) == 3
    assert evaluators.of_n(0, 16) == 4
    assert evaluators.of_state(0, (2,)) == 1
    assert evaluators.of_state(1, (2, 0)) == evaluators.of_n(1, 2)
