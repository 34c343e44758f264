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

"""Questioner and Responder policies."""

from collections.abc import Sequence

from app.bounds.formulas import state_weight_bound
from app.game.core import Answer, Counts, GameState, Params, Query, transition
from app.solver.search import Solver
from app.strategies.elements import ElementBoard
from app.strategies.simulate import QuestionerPolicy, ResponderPolicy, Transcript
from app.utils.errors import DomainError, ScriptExhaustedError, SimulationError

# =============================================================================
# QUERY RULES
# =============================================================================


def greedy_lowest(state: GameState, params: Params) -> Query:
    """Fills min(k, total - 1) asks from the first non-zero component onward."""
    room = params.effective_cap(state.total())
    asks = []
    for x in state.counts:
        take = max(0, min(x, room))
        asks.append(take)
        room -= take
    return Query(asks=tuple(asks))


def forced_no_query(state: GameState, params: Params) -> Query:
    """q_i = min{x_i, k - Σ_{j<i} x_j}, clamped at zero."""
    asks = []
    before = 0
    for x in state.counts:
        asks.append(max(0, min(x, params.cap - before)))
        before += x
    return Query(asks=tuple(asks))


def block_query(state: GameState, params: Params) -> Query:
    """(k, 0, ..., 0); only defined when x0 >= 2k."""
    if state.counts[0] < 2 * params.cap:
        raise DomainError(f"block query needs x0 >= 2k, got x0={state.counts[0]}, k={params.cap}")
    return Query(asks=(params.cap,) + (0,) * state.lies)


# =============================================================================
# QUESTIONERS
# =============================================================================


def greedy_policy() -> QuestionerPolicy:
    return QuestionerPolicy("greedy_lowest", lambda state, params, _: greedy_lowest(state, params))


def optimal_policy(solver: Solver) -> QuestionerPolicy:
    """Asks the principal (lexicographically smallest optimal) query."""

    def choose(state: GameState, params: Params, _: Transcript) -> Query:
        query = solver.principal(state)
        if query is None:
            raise SimulationError(f"no query at terminal state {state}", policy="optimal")
        return query

    return QuestionerPolicy("optimal", choose)


def lowest_first_policy(solver: Solver) -> QuestionerPolicy:
    """Greedy lowest-first asks until the first YES or until only the last
    component is live, then optimal play."""

    def choose(state: GameState, params: Params, history: Transcript) -> Query:
        switched = any(m.answer is Answer.YES for m in history.moves) or not any(
            state.counts[:-1]
        )
        if not switched:
            return greedy_lowest(state, params)
        query = solver.principal(state)
        assert query is not None
        return query

    return QuestionerPolicy("lowest_first", choose)


# =============================================================================
# RESPONDERS
# =============================================================================


def _pick(yes_score: float, no_score: float) -> Answer:
    return Answer.YES if yes_score > no_score else Answer.NO


def adversary_policy(solver: Solver) -> ResponderPolicy:
    """Answers toward the child with the larger game value; ties go to NO."""

    def choose(state: GameState, params: Params, query: Query, _: Transcript) -> Answer:
        yes, no = transition(state.counts, query.asks)
        return _pick(solver.value(yes), solver.value(no))

    return ResponderPolicy("adversary", choose)


def _weight_score(counts: Counts) -> int:
    return state_weight_bound(counts) if sum(counts) else -1


def weight_adversary() -> ResponderPolicy:
    """Answers toward the child with the larger weight bound; ties go to NO.

    The two children's weights at level q-1 add up to the parent's weight at
    level q, so the bound drops by at most one per answer.
    """

    def choose(state: GameState, params: Params, query: Query, _: Transcript) -> Answer:
        yes, no = transition(state.counts, query.asks)
        return _pick(_weight_score(yes), _weight_score(no))

    return ResponderPolicy("weight_adversary", choose)


def scripted_responder(answers: Sequence[Answer]) -> ResponderPolicy:
    script = tuple(answers)

    def choose(state: GameState, params: Params, query: Query, history: Transcript) -> Answer:
        if history.length >= len(script):
            raise ScriptExhaustedError(
                f"script of {len(script)} answers exhausted at {state}", policy="scripted"
            )
        return script[history.length]

    return ResponderPolicy("scripted", choose)


def _replay(history: Transcript) -> ElementBoard:
    board = ElementBoard.from_state(history.start)
    for move in history.moves:
        board.answer(board.realize(move.query), move.answer)
    return board


def honest_responder(
    secret: int, lie_rounds: Sequence[int] = (), lie_budget: int = 0
) -> ResponderPolicy:
    """Answers truthfully about element `secret` except on the 0-based
    rounds in `lie_rounds`.

    The element board is rebuilt from the transcript on every call, so the
    responder holds no state of its own.
    """
    rounds = frozenset(lie_rounds)
    if len(rounds) > lie_budget:
        raise DomainError(f"{len(rounds)} lie rounds exceed the lie budget {lie_budget}")

    def choose(state: GameState, params: Params, query: Query, history: Transcript) -> Answer:
        if lie_budget > params.lies:
            raise SimulationError(
                f"lie budget {lie_budget} exceeds l={params.lies}", policy="honest"
            )
        board = _replay(history)
        if not 1 <= secret <= board.size:
            raise SimulationError(f"secret {secret} is not among 1..{board.size}", policy="honest")
        truth = secret in board.realize(query)
        if history.length in rounds:
            truth = not truth
        return Answer.YES if truth else Answer.NO

    def finish(transcript: Transcript, params: Params) -> None:
        board = _replay(transcript)
        if board.live() != [secret]:
            raise SimulationError(
                f"game ended on {board.live()} but the secret is {secret}", policy="honest"
            )

    return ResponderPolicy("honest", choose, finish)
