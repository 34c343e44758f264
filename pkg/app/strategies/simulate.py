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

"""Game driver: plays a Questioner policy against a Responder policy."""

import logging
from collections.abc import Callable
from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict, Field

from app.game.core import Answer, GameState, Params, Query, apply_answer, is_admissible, is_terminal
from app.utils.errors import InvalidQueryError, SimulationError
from app.utils.typing import MoveRecord, TranscriptRecord


class Move(BaseModel):
    model_config = ConfigDict(frozen=True)

    query: Query
    answer: Answer
    state: GameState


class Transcript(BaseModel):
    """A played game; `moves[i].state` is the state after the i-th answer."""

    start: GameState
    moves: list[Move] = Field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.moves)

    @property
    def outcome(self) -> GameState:
        return self.moves[-1].state if self.moves else self.start

    def to_record(self) -> TranscriptRecord:
        return TranscriptRecord(
            start=str(self.start),
            moves=[
                MoveRecord(q=str(m.query), a=m.answer.value, state=str(m.state))
                for m in self.moves
            ],
            length=self.length,
        )


@dataclass(frozen=True)
class QuestionerPolicy:
    name: str
    choose: Callable[[GameState, Params, Transcript], Query]

    def __call__(self, state: GameState, params: Params, history: Transcript) -> Query:
        return self.choose(state, params, history)


@dataclass(frozen=True)
class ResponderPolicy:
    """Picks an answer; `finish` may validate the completed transcript."""

    name: str
    choose: Callable[[GameState, Params, Query, Transcript], Answer]
    finish: Callable[[Transcript, Params], None] | None = None

    def __call__(
        self, state: GameState, params: Params, query: Query, history: Transcript
    ) -> Answer:
        return self.choose(state, params, query, history)


def simulate(
    questioner: QuestionerPolicy,
    responder: ResponderPolicy,
    start: GameState,
    params: Params,
    stop_after: int | None = None,
) -> Transcript:
    """Plays until the state is terminal, or for `stop_after` moves at most.

    Every query must be admissible; the potential then strictly decreases,
    so the loop always terminates.
    """
    if len(start.counts) != params.lies + 1:
        raise SimulationError(f"start {start} does not have {params.lies + 1} components")
    transcript = Transcript(start=start)
    state = start
    while not is_terminal(state):
        if stop_after is not None and transcript.length >= stop_after:
            return transcript
        query = questioner(state, params, transcript)
        if not isinstance(query, Query) or not is_admissible(state, query, params):
            raise SimulationError(
                f"inadmissible query {query} at {state} (k={params.cap})", policy=questioner.name
            )
        answer = responder(state, params, query, transcript)
        if not isinstance(answer, Answer):
            raise SimulationError(f"answer {answer!r} is not YES or NO", policy=responder.name)
        try:
            state = apply_answer(state, query, answer)
        except InvalidQueryError as e:
            raise SimulationError(str(e), policy=questioner.name) from e
        transcript.moves.append(Move(query=query, answer=answer, state=state))
    if responder.finish is not None:
        responder.finish(transcript, params)
    logging.debug(
        f"{questioner.name} vs {responder.name} from {start}: {transcript.length} moves"
    )
    return transcript
