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

"""Closed-form bounds on game values."""

from app.bounds.formulas import (
    BasicEvaluator,
    BasicStateEvaluator,
    binom_le,
    bound_L,
    bound_L_hat,
    bound_L_plus,
    bound_L_tilde,
    bound_report,
    ceil_log2,
    ch,
    conjecture_quantities,
    relaxed_weight_bound,
    remainder_m,
    ru0k_exact,
    ru_estimate,
    ruk1_exact,
    state_weight,
    state_weight_bound,
    theorem2,
    theorem2_threshold,
    two_component_state,
    weight_bound,
)

__all__ = [
    "BasicEvaluator",
    "BasicStateEvaluator",
    "binom_le",
    "bound_L",
    "bound_L_hat",
    "bound_L_plus",
    "bound_L_tilde",
    "bound_report",
    "ceil_log2",
    "ch",
    "conjecture_quantities",
    "relaxed_weight_bound",
    "remainder_m",
    "ru0k_exact",
    "ru_estimate",
    "ruk1_exact",
    "state_weight",
    "state_weight_bound",
    "theorem2",
    "theorem2_threshold",
    "two_component_state",
    "weight_bound",
]
