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

import os
from pathlib import Path
from typing import TypeVar

from pydantic import BaseModel, ConfigDict, PositiveInt

# Environment knobs
CACHE_DIR_ENV = "LIARGAME_CACHE_DIR"
LOG_LEVEL_ENV = "LIARGAME_LOG_LEVEL"
CLOUD_LOGGING_ENV = "LIARGAME_CLOUD_LOGGING"

SERVICE_NAME = "liar-game-lab"
CACHE_VERSION = "v1"


_B = TypeVar("_B", bound="_Budget")


class _Budget(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    def override(self: _B, pairs: dict[str, int]) -> _B:
        """Returns a copy with `pairs` applied, validated like the original."""
        return type(self).model_validate(self.model_dump() | pairs)


class SolverBudget(_Budget):
    """Limits for the memoized solver."""

    max_total: PositiveInt = 64
    max_lies: PositiveInt = 3
    max_entries: PositiveInt = 2_000_000


class OracleBudget(_Budget):
    """Limits for the brute-force oracle."""

    max_total: PositiveInt = 8
    max_lies: PositiveInt = 2
    max_cap: PositiveInt = 4
    depth_limit: PositiveInt = 64


class TreeBudget(_Budget):
    max_nodes: PositiveInt = 200_000


class VerifyBudget(_Budget):
    """Enumeration ranges for the verification suites."""

    lies: PositiveInt = 2
    cap: PositiveInt = 3
    total: PositiveInt = 8
    oracle_total: PositiveInt = 6
    sandwich_n: PositiveInt = 24
    weight_n: PositiveInt = 40
    closed_form_n: PositiveInt = 64
    closed_form_k1_n: PositiveInt = 8
    conjecture_k: PositiveInt = 16
    conjecture_n: PositiveInt = 56
    theorem2_n: PositiveInt = 20


class Pruning(BaseModel):
    """Switches for the solver's pruning layers.

    Values never depend on `ordering`; `convexity_normalized` is an
    experimental mode that must agree with the default one.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    alpha: bool = True
    lower_bound: bool = True
    ordering: bool = True
    convexity_normalized: bool = False


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    cache_dir: Path | None = None
    log_level: str = "INFO"
    cloud_logging: bool = False

    @classmethod
    def from_env(cls) -> "Settings":
        cache_dir = os.environ.get(CACHE_DIR_ENV)
        return cls(
            cache_dir=Path(cache_dir) if cache_dir else None,
            log_level=os.environ.get(LOG_LEVEL_ENV, "INFO").upper(),
            cloud_logging=os.environ.get(CLOUD_LOGGING_ENV, "")
            in ("1", "true", "True"),
        )

    def default_cache_path(self, lies: int, cap: int) -> Path | None:
        """Cache file used when no explicit path is given."""
        if self.cache_dir is None:
            return None
        return self.cache_dir / f"l{lies}-k{cap}.cache"


def parse_budget_pairs(items: list[str]) -> dict[str, int]:
    """Parses repeated `key=value` overrides such as `total=6`."""
    pairs: dict[str, int] = {}
    for item in items:
        for chunk in item.split(","):
            if not chunk:
                continue
            key, sep, value = chunk.partition("=")
            if not sep:
                raise ValueError(f"budget override {chunk!r} is not key=value")
            pairs[key.strip()] = int(value)
    return pairs
