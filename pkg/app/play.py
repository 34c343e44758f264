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

"""Interactive terminal game over element IDs 1..n."""

from collections.abc import Callable

from app.game.core import Answer, Params, is_admissible
from app.solver.search import Solver
from app.strategies.elements import ElementBoard
from app.strategies.policies import adversary_policy
from app.strategies.simulate import Transcript
from app.utils.errors import InvalidQueryError

YES_WORDS = {"y", "yes"}
NO_WORDS = {"n", "no"}
QUIT_WORDS = {"q", "quit", "exit"}


def _finish(board: ElementBoard, asked: int, output: Callable[[str], None]) -> None:
    live = board.live()
    output(f"The secret element is {live[0]}, found with {asked} questions.")


def play_as_responder(
    solver: Solver,
    n: int,
    input_fn: Callable[[str], str] = input,
    output: Callable[[str], None] = print,
) -> int:
    """The tool asks optimal queries; the human answers y/n."""
    params = solver.params
    board = ElementBoard.initial(n, params.lies)
    output(
        f"Think of an element 1..{n}. You may lie at most {params.lies} times; "
        f"each question names at most {params.cap} elements. "
        f"I need at most {solver.value(board.counts())} questions."
    )
    asked = 0
    while board.state().total() > 1:
        query = solver.principal(board.counts())
        assert query is not None
        elements = sorted(board.realize(query))
        reply = input_fn(f"Q{asked + 1}: is it one of {' '.join(map(str, elements))}? [y/n] ").strip().lower()
        if reply in QUIT_WORDS:
            output("Bye.")
            return asked
        if reply == "state":
            output(board.describe())
            continue
        if reply not in YES_WORDS | NO_WORDS:
            output("Please answer y or n (or 'state', 'quit').")
            continue
        board.answer(elements, Answer.YES if reply in YES_WORDS else Answer.NO)
        asked += 1
    _finish(board, asked, output)
    _confirm(board, params.lies, input_fn, output)
    return asked


def _confirm(
    board: ElementBoard,
    lies: int,
    input_fn: Callable[[str], str],
    output: Callable[[str], None],
) -> None:
    """A denied guess means the answers were consistent with no element under
    the lie budget."""
    guess = board.live()[0]
    while True:
        reply = input_fn(f"Was it {guess}? [y/n] ").strip().lower()
        if reply in YES_WORDS:
            return
        if reply in NO_WORDS:
            output(f"Warning: more than {lies} lies were told; the answers rule out every other element.")
            return
        if reply in QUIT_WORDS:
            output("Bye.")
            return
        output("Please answer y or n.")


def _parse_elements(text: str) -> list[int]:
    return [int(token) for token in text.replace(",", " ").split()]


def play_as_questioner(
    solver: Solver,
    n: int,
    input_fn: Callable[[str], str] = input,
    output: Callable[[str], None] = print,
) -> int:
    """The human types element IDs; the tool answers adversarially."""
    params: Params = solver.params
    board = ElementBoard.initial(n, params.lies)
    responder = adversary_policy(solver)
    history = Transcript(start=board.state())
    output(
        f"I picked an element 1..{n} and may lie {params.lies} times. Ask about at most "
        f"{params.cap} elements per question by typing their IDs. Optimal play needs "
        f"{solver.value(board.counts())} questions."
    )
    asked = 0
    while board.state().total() > 1:
        reply = input_fn(f"Q{asked + 1}: elements? ").strip().lower()
        if reply in QUIT_WORDS:
            output("Bye.")
            return asked
        if reply == "state":
            output(board.describe())
            continue
        try:
            elements = _parse_elements(reply)
            query = board.query_of(elements)
        except (ValueError, InvalidQueryError) as e:
            output(f"Could not read that question: {e}")
            continue
        state = board.state()
        if query.size() > params.cap:
            output(f"Too many elements: at most k={params.cap} per question.")
            continue
        if not is_admissible(state, query, params):
            output("Ask about at least one live element and not all of them.")
            continue
        answer = responder(state, params, query, history)
        board.answer(elements, answer)
        asked += 1
        output(f"Answer: {answer.value}")
    _finish(board, asked, output)
    return asked


def run_play(
    solver: Solver,
    n: int,
    role: str = "responder",
    input_fn: Callable[[str], str] = input,
    output: Callable[[str], None] = print,
) -> int:
    play = play_as_questioner if role == "questioner" else play_as_responder
    try:
        return play(solver, n, input_fn, output)
    except (EOFError, KeyboardInterrupt):
        output("Bye.")
        return 0
