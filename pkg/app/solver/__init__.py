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

"""Exact game values: memoized minimax, its cache file and a brute-force oracle."""

from app.solver.cache import (
    MemoCache,
    cache_key,
    dump_cache,
    header_params,
    load_cache,
    parse_cache,
    save_cache,
)
from app.solver.oracle import brute_force_oracle
from app.solver.search import (
    BasicEvaluators,
    SolveResult,
    Solver,
    StrategyNode,
    audit_cache,
    basic_value,
    extract_strategy,
    reachable_under_optimal_play,
    solve,
    solve_basic,
)

__all__ = [
    "BasicEvaluators",
    "MemoCache",
    "SolveResult",
    "Solver",
    "StrategyNode",
    "audit_cache",
    "basic_value",
    "brute_force_oracle",
    "cache_key",
    "dump_cache",
    "extract_strategy",
    "header_params",
    "load_cache",
    "parse_cache",
    "reachable_under_optimal_play",
    "save_cache",
    "solve",
    "solve_basic",
]
