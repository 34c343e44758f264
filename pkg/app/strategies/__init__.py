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

"""Questioner/Responder policies, the element board and the game driver."""

from app.strategies.elements import ElementBoard
from app.strategies.policies import (
    adversary_policy,
    block_query,
    forced_no_query,
    greedy_lowest,
    greedy_policy,
    honest_responder,
    lowest_first_policy,
    optimal_policy,
    scripted_responder,
    weight_adversary,
)
from app.strategies.simulate import Move, QuestionerPolicy, ResponderPolicy, Transcript, simulate

__all__ = [
    "ElementBoard",
    "Move",
    "QuestionerPolicy",
    "ResponderPolicy",
    "Transcript",
    "adversary_policy",
    "block_query",
    "forced_no_query",
    "greedy_lowest",
    "greedy_policy",
    "honest_responder",
    "lowest_first_policy",
    "optimal_policy",
    "scripted_responder",
    "simulate",
    "weight_adversary",
]
