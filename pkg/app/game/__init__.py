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

"""Game model: states, queries and the exact transition rules."""

from app.game.core import (
    Answer,
    Counts,
    GameState,
    Params,
    Query,
    apply_answer,
    check_query,
    children,
    complement,
    enumerate_queries,
    format_counts,
    is_admissible,
    is_terminal,
    parse_counts,
    potential,
    query_vectors,
    shift_relax,
    transition,
)

__all__ = [
    "Answer",
    "Counts",
    "GameState",
    "Params",
    "Query",
    "apply_answer",
    "check_query",
    "children",
    "complement",
    "enumerate_queries",
    "format_counts",
    "is_admissible",
    "is_terminal",
    "parse_counts",
    "potential",
    "query_vectors",
    "shift_relax",
    "transition",
]
