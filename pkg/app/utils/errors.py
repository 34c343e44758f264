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

"""Exception types shared by every module of the lab."""


class LiarGameError(Exception):
    """Base class for all errors raised by the lab."""


class InvalidQueryError(LiarGameError, ValueError):
    """A query vector does not fit the state it is posed at."""


class DomainError(LiarGameError, ValueError):
    """Parameters fall outside the domain of a formula."""


class ParseError(LiarGameError, ValueError):
    """A state or query literal could not be parsed."""

    def __init__(self, message: str, line: int = 1, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class BudgetExceededError(LiarGameError, RuntimeError):
    """The requested computation does not fit the configured budget."""


class OracleDepthExceeded(BudgetExceededError):
    """The brute-force oracle hit its depth limit before the root resolved."""


class SimulationError(LiarGameError, RuntimeError):
    """A policy misbehaved during a simulated game."""

    def __init__(self, message: str, policy: str | None = None) -> None:
        super().__init__(f"{policy}: {message}" if policy else message)
        self.policy = policy


class ScriptExhaustedError(SimulationError):
    """A scripted responder ran out of answers."""


class CacheFormatError(LiarGameError, ValueError):
    """A cache persistence file is malformed or belongs to other parameters."""

    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line
