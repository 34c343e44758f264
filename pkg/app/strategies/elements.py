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

"""Element-level view of a game: which candidate sits in which component."""

from collections.abc import Iterable

from app.game.core import Answer, Counts, GameState, Query, format_counts
from app.utils.errors import DomainError, InvalidQueryError


class ElementBoard:
    """Candidates 1..n with the number of NO answers each one has received.

    A query vector is realized by the lowest IDs of each component, so the
    same vector always names the same elements for a given board.
    """

    def __init__(self, lies: int, marks: dict[int, int]) -> None:
        self.lies = lies
        self._marks = dict(marks)

    @classmethod
    def initial(cls, n: int, lies: int) -> "ElementBoard":
        if n < 1:
            raise DomainError(f"need at least one element, got n={n}")
        return cls(lies, {element: 0 for element in range(1, n + 1)})

    @classmethod
    def from_state(cls, state: GameState) -> "ElementBoard":
        """IDs are handed out component by component, lowest first."""
        marks: dict[int, int] = {}
        element = 1
        for component, size in enumerate(state.counts):
            for _ in range(size):
                marks[element] = component
                element += 1
        for _ in range(state.excluded):
            marks[element] = state.lies + 1
            element += 1
        return cls(state.lies, marks)

    @property
    def size(self) -> int:
        return len(self._marks)

    def component_of(self, element: int) -> int:
        return self._marks[element]

    def members(self, component: int) -> list[int]:
        return sorted(e for e, mark in self._marks.items() if mark == component)

    def live(self) -> list[int]:
        return sorted(e for e, mark in self._marks.items() if mark <= self.lies)

    def counts(self) -> Counts:
        tally = [0] * (self.lies + 1)
        for mark in self._marks.values():
            if mark <= self.lies:
                tally[mark] += 1
        return tuple(tally)

    def state(self) -> GameState:
        excluded = sum(1 for mark in self._marks.values() if mark > self.lies)
        return GameState(counts=self.counts(), excluded=excluded)

    def realize(self, query: Query) -> frozenset[int]:
        if len(query.asks) != self.lies + 1:
            raise InvalidQueryError(f"query {query} does not have {self.lies + 1} components")
        chosen: list[int] = []
        for component, ask in enumerate(query.asks):
            members = self.members(component)
            if ask > len(members):
                raise InvalidQueryError(
                    f"q{component}={ask} exceeds the {len(members)} elements of component {component}"
                )
            chosen.extend(members[:ask])
        return frozenset(chosen)

    def query_of(self, elements: Iterable[int]) -> Query:
        """The count vector of a set of live element IDs."""
        asks = [0] * (self.lies + 1)
        for element in set(elements):
            mark = self._marks.get(element)
            if mark is None:
                raise InvalidQueryError(f"unknown element {element} (IDs run 1..{self.size})")
            if mark > self.lies:
                raise InvalidQueryError(f"element {element} is already excluded")
            asks[mark] += 1
        return Query(asks=tuple(asks))

    def answer(self, asked: Iterable[int], answer: Answer) -> None:
        """Marks every live element the answer contradicts."""
        asked = set(asked)
        for element, mark in self._marks.items():
            if mark > self.lies:
                continue
            if (element in asked) != (answer is Answer.YES):
                self._marks[element] = mark + 1

    def describe(self) -> str:
        lines = []
        for component in range(self.lies + 1):
            members = self.members(component)
            lines.append(f"  {component} NO: {' '.join(map(str, members)) or '-'}")
        lines.append(f"  excluded: {' '.join(map(str, self.members(self.lies + 1))) or '-'}")
        lines.append(f"  state: {format_counts(self.counts())}")
        return "\n".join(lines)
