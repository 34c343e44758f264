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
from typing import (
    Any,
    Literal,
)

from pydantic import (
    BaseModel,
    Field,
    PositiveInt,
    computed_field,
    field_validator,
    model_validator,
)


class BoundReport(BaseModel):
    """Every computable bound for one (n, k, l) triple."""

    n: int
    k: int
    lies: int
    l: int  # noqa: E741
    l_plus: int
    l_hat: int
    l_tilde: int | None = None
    theorem2_applicable: bool = False
    theorem2_value: int | None = None
    exact: int | None = None
    notes: list[str] = Field(default_factory=list)

    def sandwich_violations(self) -> list[str]:
        """Sandwich relations that fail against `exact` (empty when unknown)."""
        if self.exact is None:
            return []
        v = self.exact
        checks = {
            "l <= exact <= l+lies+1": self.l <= v <= self.l + self.lies + 1,
            "l_hat <= exact <= l_hat+2*lies+1": self.l_hat <= v <= self.l_hat + 2 * self.lies + 1,
            "l_hat <= l <= l_plus": self.l_hat <= self.l <= self.l_plus,
            "l_plus <= exact": self.l_plus <= v,
        }
        if self.l_tilde is not None:
            checks["l_tilde <= exact <= l_tilde+lies"] = self.l_tilde <= v <= self.l_tilde + self.lies
            checks["l_plus <= l_tilde"] = self.l_plus <= self.l_tilde
        if self.theorem2_applicable:
            checks["theorem2_value == exact"] = self.theorem2_value == v
        return [name for name, ok in checks.items() if not ok]


class SweepRow(BaseModel):
    """One sweep cell; bound columns are null when the cell failed."""

    n: int
    k: int
    lies: int
    l: int | None = None  # noqa: E741
    l_plus: int | None = None
    l_hat: int | None = None
    l_tilde: int | None = None
    theorem2_applicable: bool | None = None
    theorem2_value: int | None = None
    exact: int | None = None
    sandwich_ok: bool | None = None
    error: str | None = None


class Witness(BaseModel):
    """A failing instance: its inputs and both sides of the violated relation."""

    instance: dict[str, Any]
    relation: str
    lhs: int | float | str | None = None
    rhs: int | float | str | None = None


class CheckReport(BaseModel):
    name: str
    range: dict[str, Any] = Field(default_factory=dict)
    instances: int = 0
    skipped: int = 0
    failures: list[Witness] = Field(default_factory=list)
    informational: bool = False

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return not self.failures


class MoveRecord(BaseModel):
    q: str
    a: Literal["YES", "NO"]
    state: str


class TranscriptRecord(BaseModel):
    start: str
    moves: list[MoveRecord]
    length: int

    @model_validator(mode="after")
    def _length_matches(self) -> "TranscriptRecord":
        if self.length != len(self.moves):
            raise ValueError(f"length {self.length} != {len(self.moves)} moves")
        return self


class RunConfig(BaseModel):
    """Validated command-line configuration for one subcommand."""

    subcommand: Literal["solve", "bounds", "sweep", "verify", "cache", "play"]
    lies: int | None = Field(default=None, ge=0)
    cap: PositiveInt | None = None
    n: PositiveInt | None = None
    state: str | None = None
    n_values: list[int] = Field(default_factory=list)
    cap_values: list[int] = Field(default_factory=list)
    lies_values: list[int] = Field(default_factory=list)
    cache_path: str | None = None
    output_format: Literal["json", "csv", "text"] = "text"
    budget: dict[str, PositiveInt] = Field(default_factory=dict)
    workers: PositiveInt = 1
    only: list[str] = Field(default_factory=list)

    @field_validator("n_values", "cap_values", "lies_values")
    @classmethod
    def _sorted_unique(cls, value: list[int]) -> list[int]:
        return sorted(set(value))

    @model_validator(mode="after")
    def _sweep_ranges(self) -> "RunConfig":
        if self.subcommand == "sweep" and not (
            self.n_values and self.cap_values and self.lies_values
        ):
            raise ValueError("sweep needs non-empty n, k and l ranges")
        return self


class StructuredLog(BaseModel):
    """Envelope for reports sent to the structured log sink."""

    payload: dict[str, Any]
    log_type: Literal["bounds", "verification", "sweep", "solve"] = "verification"
    service_name: Literal["liar-game-lab"] = "liar-game-lab"
