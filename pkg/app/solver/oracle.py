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

"""Brute-force reference values for tiny games.

Shares nothing with the solver beyond the transition rule: queries come from a
plain itertools.product sweep and values from round-by-round backward
induction over every reachable state (no memo cache, no pruning, no query
order). A state is solvable in t rounds iff it is terminal or some query sends
both children into the set solvable in t - 1 rounds.
"""

import itertools
import logging

from app.game.core import Counts, GameState, Params, format_counts, transition
from app.utils.config import OracleBudget
from app.utils.errors import BudgetExceededError, DomainError, OracleDepthExceeded


def _queries(counts: Counts, cap: int) -> list[Counts]:
    total = sum(counts)
    ranges = [range(x + 1) for x in counts]
    return [
        q
        for q in itertools.product(*ranges)
        if 1 <= sum(q) <= min(cap, total - 1)
    ]


def _reachable(start: Counts, cap: int) -> dict[Counts, list[tuple[Counts, Counts]]]:
    moves: dict[Counts, list[tuple[Counts, Counts]]] = {}
    stack = [start]
    while stack:
        counts = stack.pop()
        if counts in moves:
            continue
        if sum(counts) <= 1:
            moves[counts] = []
            continue
        moves[counts] = [transition(counts, q) for q in _queries(counts, cap)]
        for pair in moves[counts]:
            stack.extend(child for child in pair if child not in moves)
    return moves


def brute_force_oracle(
    state: GameState,
    params: Params,
    depth_limit: int | None = None,
    budget: OracleBudget | None = None,
) -> int:
    """Game value of `state` under `params` by exhaustive backward induction."""
    budget = budget or OracleBudget()
    limit = depth_limit if depth_limit is not None else budget.depth_limit
    counts = state.counts
    if len(counts) != params.lies + 1:
        raise DomainError(f"state {state} does not have l+1={params.lies + 1} components")
    if state.total() > budget.max_total or params.lies > budget.max_lies or params.cap > budget.max_cap:
        raise BudgetExceededError(
            f"oracle instance {state} (l={params.lies}, k={params.cap}) exceeds "
            f"total <= {budget.max_total}, l <= {budget.max_lies}, k <= {budget.max_cap}"
        )

    moves = _reachable(counts, params.cap)
    solved: dict[Counts, int] = {s: 0 for s, options in moves.items() if not options}
    rounds = 0
    while counts not in solved:
        rounds += 1
        if rounds > limit:
            raise OracleDepthExceeded(
                f"oracle exceeded depth {limit} at {format_counts(counts)}"
            )
        newly = [
            s
            for s, options in moves.items()
            if s not in solved
            and any(yes in solved and no in solved for yes, no in options)
        ]
        for s in newly:
            solved[s] = rounds
    logging.debug(f"Oracle solved {state} over {len(moves)} reachable states")
    return solved[counts]
