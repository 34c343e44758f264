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

"""State and query model of the size-capped Rényi–Ulam liar game.

A state is the vector (x0, ..., xl) where xi counts the candidates that have
received exactly i NO answers; candidates with l+1 NO answers are excluded
and only tracked as a single count. A query names how many candidates of each
component are asked. Everything here is a pure function of its arguments.
"""

from collections.abc import Iterator, Sequence
from enum import Enum
from functools import lru_cache

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, field_validator

from app.utils.errors import DomainError, InvalidQueryError, ParseError

Counts = tuple[int, ...]


class Answer(str, Enum):
    YES = "YES"
    NO = "NO"


class Params(BaseModel):
    """Lie budget and query-size cap of one game family.

    A cap at least as large as the candidate count models the Basic game.
    """

    model_config = ConfigDict(frozen=True)

    lies: NonNegativeInt
    cap: PositiveInt

    def effective_cap(self, total: int) -> int:
        return min(self.cap, total - 1)

    @classmethod
    def basic(cls, lies: int, total: int) -> "Params":
        return cls(lies=lies, cap=max(total, 1))


class GameState(BaseModel):
    model_config = ConfigDict(frozen=True)

    counts: Counts = Field(min_length=1)
    excluded: NonNegativeInt = 0

    @field_validator("counts")
    @classmethod
    def _non_negative(cls, value: Counts) -> Counts:
        if any(x < 0 for x in value):
            raise ValueError(f"negative component in {format_counts(value)}")
        return value

    @classmethod
    def initial(cls, n: int, lies: int) -> "GameState":
        """The starting state (n, 0, ..., 0)."""
        return cls(counts=(n,) + (0,) * lies)

    @classmethod
    def parse(cls, text: str, lies: int | None = None) -> "GameState":
        counts = parse_counts(text)
        if lies is not None and len(counts) != lies + 1:
            raise ParseError(
                f"expected {lies + 1} components, got {len(counts)}",
                column=1,
            )
        return cls(counts=counts)

    @property
    def lies(self) -> int:
        return len(self.counts) - 1

    def total(self) -> int:
        return sum(self.counts)

    def __str__(self) -> str:
        return format_counts(self.counts)


class Query(BaseModel):
    model_config = ConfigDict(frozen=True)

    asks: Counts = Field(min_length=1)

    @field_validator("asks")
    @classmethod
    def _non_negative(cls, value: Counts) -> Counts:
        if any(q < 0 for q in value):
            raise ValueError(f"negative ask in {format_counts(value)}")
        return value

    @classmethod
    def parse(cls, text: str) -> "Query":
        return cls(asks=parse_counts(text))

    def size(self) -> int:
        return sum(self.asks)

    def __str__(self) -> str:
        return format_counts(self.asks)


# =============================================================================
# TEXT LITERALS
# =============================================================================


def format_counts(vector: Sequence[int]) -> str:
    return ",".join(str(v) for v in vector)


def parse_counts(text: str, line: int = 1) -> Counts:
    """Parses "x0,x1,...,xl" (decimal, no spaces)."""
    if not text:
        raise ParseError("empty vector literal", line=line, column=1)
    values = []
    column = 1
    for field in text.split(","):
        if not field.isdigit() or not field.isascii():
            raise ParseError(f"expected a non-negative integer, got {field!r}", line, column)
        values.append(int(field))
        column += len(field) + 1
    return tuple(values)


# =============================================================================
# TRANSITIONS
# =============================================================================


def transition(counts: Counts, asks: Counts) -> tuple[Counts, Counts]:
    """Returns the (YES, NO) successor count vectors; no validation."""
    yes = (asks[0],) + tuple(
        asks[i] + counts[i - 1] - asks[i - 1] for i in range(1, len(counts))
    )
    no = (counts[0] - asks[0],) + tuple(
        counts[i] - asks[i] + asks[i - 1] for i in range(1, len(counts))
    )
    return yes, no


def check_query(state: GameState, query: Query) -> None:
    if len(query.asks) != len(state.counts):
        raise InvalidQueryError(
            f"query {query} has {len(query.asks)} components, state {state} has {len(state.counts)}"
        )
    for i, (q, x) in enumerate(zip(query.asks, state.counts, strict=True)):
        if q > x:
            raise InvalidQueryError(f"q{i}={q} exceeds x{i}={x} (query {query} at {state})")


def apply_answer(state: GameState, query: Query, answer: Answer) -> GameState:
    check_query(state, query)
    yes, no = transition(state.counts, query.asks)
    if answer is Answer.YES:
        dropped = state.counts[-1] - query.asks[-1]
        return GameState(counts=yes, excluded=state.excluded + dropped)
    return GameState(counts=no, excluded=state.excluded + query.asks[-1])


def children(state: GameState, query: Query) -> tuple[GameState, GameState]:
    """(YES-child, NO-child) of `query` at `state`, excluded counts included."""
    return apply_answer(state, query, Answer.YES), apply_answer(state, query, Answer.NO)


def complement(state: GameState, query: Query) -> Query:
    """The query asking every live candidate `query` leaves out.

    Its NO-child is the YES-child of `query`, so in the Basic game asking
    more than half the live set is never needed.
    """
    check_query(state, query)
    return Query(asks=tuple(x - q for x, q in zip(state.counts, query.asks, strict=True)))


def is_terminal(state: GameState) -> bool:
    # A vacuous state (total 0) is terminal too.
    return state.total() <= 1


def is_admissible(state: GameState, query: Query, params: Params) -> bool:
    if len(query.asks) != len(state.counts) or len(state.counts) != params.lies + 1:
        return False
    if any(q > x for q, x in zip(query.asks, state.counts, strict=True)):
        return False
    return 1 <= query.size() <= params.effective_cap(state.total())


def potential(counts: Sequence[int]) -> int:
    """Σ (l+1-i)·xi; strictly decreases in both children of any admissible query."""
    top = len(counts)
    return sum((top - i) * x for i, x in enumerate(counts))


def shift_relax(state: GameState, source: int, target: int) -> GameState:
    """Moves one candidate from component `source` to a later component.

    `target == l+1` drops it into the excluded count. Such a move never makes
    the state harder for the Questioner.
    """
    lies = state.lies
    if not 0 <= source < target <= lies + 1:
        raise DomainError(f"need 0 <= from < to <= {lies + 1}, got from={source}, to={target}")
    if state.counts[source] < 1:
        raise DomainError(f"component {source} of {state} is empty")
    counts = list(state.counts)
    counts[source] -= 1
    excluded = state.excluded
    if target == lies + 1:
        excluded += 1
    else:
        counts[target] += 1
    return GameState(counts=tuple(counts), excluded=excluded)


# =============================================================================
# QUERY ENUMERATION
# =============================================================================


def _fill(counts: Counts, index: int, room: int) -> Iterator[Counts]:
    if index == len(counts):
        yield ()
        return
    for v in range(min(counts[index], room) + 1):
        for rest in _fill(counts, index + 1, room - v):
            yield (v, *rest)


@lru_cache(maxsize=8192)
def query_vectors(counts: Counts, limit: int) -> tuple[Counts, ...]:
    """All vectors with 0 <= qi <= xi and 1 <= Σq <= limit, lexicographically."""
    if limit < 1:
        return ()
    return tuple(q for q in _fill(counts, 0, limit) if any(q))


def enumerate_queries(state: GameState, params: Params) -> list[Query]:
    if is_terminal(state):
        return []
    limit = params.effective_cap(state.total())
    return [Query(asks=q) for q in query_vectors(state.counts, limit)]
