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

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.bounds.formulas import (
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
from app.utils.errors import BudgetExceededError, DomainError

# Basic-game values small enough to tabulate by hand.
BASIC = {(0, 2): 1, (1, 2): 3, (0, 3): 2, (1, 3): 5}


def fake_basic(lies: int, n: int) -> int:
    return BASIC[(lies, n)]


@pytest.mark.parametrize("n, k, i, expected", [(10, 3, 1, 1), (56, 16, 2, 0), (7, 7, 3, 0)])
def test_remainder_m(n: int, k: int, i: int, expected: int) -> None:
    assert remainder_m(n, k, i) == expected


@pytest.mark.parametrize("q, lies, expected", [(5, 0, 1), (5, 1, 6), (10, 2, 56), (3, -1, 0)])
def test_binom_le(q: int, lies: int, expected: int) -> None:
    assert binom_le(q, lies) == expected


@pytest.mark.parametrize(
    "counts, q, expected",
    [((1, 0), 3, 4), ((0, 0, 1), 7, 1), ((0, 0, 0, 1), 0, 1), ((2, 2), 4, 12)],
)
def test_state_weight(counts: tuple[int, ...], q: int, expected: int) -> None:
    assert state_weight(counts, q) == expected


@pytest.mark.parametrize("n, lies, expected", [(8, 0, 3), (4, 1, 5), (2, 2, 5), (1, 3, 0)])
def test_weight_bound(n: int, lies: int, expected: int) -> None:
    assert weight_bound(n, lies) == expected


def test_weight_bound_is_the_least_q() -> None:
    for lies in range(3):
        for n in range(1, 200):
            w = weight_bound(n, lies)
            assert n * binom_le(w, lies) <= 2**w
            if w > 0:
                assert n * binom_le(w - 1, lies) > 2 ** (w - 1)


@pytest.mark.parametrize("counts, expected", [((1, 0), 0), ((0, 2), 1), ((2, 2), 4)])
def test_state_weight_bound(counts: tuple[int, ...], expected: int) -> None:
    assert state_weight_bound(counts) == expected


def test_state_weight_bound_of_empty_state() -> None:
    with pytest.raises(DomainError):
        state_weight_bound((0, 0))


@pytest.mark.parametrize("x, expected", [(1, 0), (2, 1), (5, 3), (8, 3), (9, 4)])
def test_ceil_log2(x: int, expected: int) -> None:
    assert ceil_log2(x) == expected


@pytest.mark.parametrize("n, k, expected", [(10, 3, 4), (64, 16, 7), (8, 8, 3)])
def test_ru0k_exact(n: int, k: int, expected: int) -> None:
    assert ru0k_exact(n, k) == expected


def test_ru0k_exact_rejects_large_cap() -> None:
    with pytest.raises(DomainError):
        ru0k_exact(3, 4)


@pytest.mark.parametrize("n, lies, expected", [(5, 0, 4), (3, 1, 5), (2, 2, 5), (1, 0, 0), (1, 1, 0), (1, 2, 0)])
def test_ruk1_exact(n: int, lies: int, expected: int) -> None:
    assert ruk1_exact(n, lies) == expected


def test_ru_estimate() -> None:
    lower, upper = ru_estimate(2, 1)
    assert lower == pytest.approx(2.0)
    assert upper == pytest.approx(5.0)
    lower, _ = ru_estimate(8, 2)
    assert lower == pytest.approx(5.0)
    with pytest.raises(DomainError):
        ru_estimate(1, 1)
    with pytest.raises(DomainError):
        ru_estimate(4, 0)


@given(st.integers(1, 5000), st.integers(0, 4))
def test_relaxed_weight_bound_dominates(n: int, lies: int) -> None:
    relaxed = relaxed_weight_bound(n, lies)
    assert math.ceil(relaxed - 1e-9) >= weight_bound(n, lies)
    assert n <= 2**relaxed / (relaxed + 1) ** lies * (1 + 1e-9)


def test_relaxed_weight_bound_without_lies_is_log2() -> None:
    assert relaxed_weight_bound(8, 0) == pytest.approx(3.0)
    assert relaxed_weight_bound(1, 2) == 0.0


def test_bound_l_family() -> None:
    assert bound_L(14, 2, 1, fake_basic) == max(6 + 3, 13 + 1)
    assert bound_L_hat(14, 2, 1) == max(6 + weight_bound(2, 1), 13 + weight_bound(2, 0))
    assert bound_L_plus(14, 2, 1, fake_basic) == 14
    # l = 0 is the single term floor(n/k) - 1 + RU_0(k).
    assert bound_L(14, 3, 0, fake_basic) == 14 // 3 - 1 + 2
    assert bound_L_hat(14, 3, 0) == 14 // 3 - 1 + ceil_log2(3)


def test_bound_l_domain() -> None:
    with pytest.raises(DomainError):
        bound_L(5, 2, 1, fake_basic)
    with pytest.raises(DomainError):
        bound_L_hat(10, 1, 1)


def test_two_component_state() -> None:
    assert two_component_state(56, 16, 1, 0) == (24, 32)
    assert two_component_state(14, 2, 1, 1) == (2,)
    assert two_component_state(20, 3, 2, 0) == (5, 15, 0)


def test_bound_l_tilde_last_term() -> None:
    values = {(1, (2, 12)): 8, (0, (2,)): 1}
    assert bound_L_tilde(14, 2, 1, lambda lies, counts: values[(lies, counts)]) == 14


def test_bound_l_tilde_propagates_budget() -> None:
    def too_big(lies: int, counts: tuple[int, ...]) -> int:
        raise BudgetExceededError("too big")

    with pytest.raises(BudgetExceededError):
        bound_L_tilde(14, 2, 1, too_big)


def test_theorem2() -> None:
    assert theorem2_threshold(2, 1) == 14
    assert theorem2(14, 2, 1) == (True, 14)
    assert theorem2(13, 2, 1) == (False, None)
    assert theorem2(56, 16, 1) == (False, None)


def test_ch() -> None:
    assert ch(10, 44) == 7
    with pytest.raises(DomainError):
        ch(1, 0)


def test_conjecture_quantities_domain() -> None:
    with pytest.raises(DomainError):
        conjecture_quantities(40, 10, 16, lambda a, b: 0)


def test_bound_report_records_infeasible_l_tilde() -> None:
    def too_big(lies: int, counts: tuple[int, ...]) -> int:
        raise BudgetExceededError("state too large")

    report = bound_report(14, 2, 1, fake_basic, too_big, exact=14)
    assert report.l_tilde is None
    assert report.notes and "state too large" in report.notes[0]
    assert report.theorem2_applicable
    assert report.theorem2_value == 14
    assert report.sandwich_violations() == []


def test_bound_report_flags_violations() -> None:
    report = bound_report(14, 2, 1, fake_basic, lambda lies, counts: 0, exact=30)
    assert "l <= exact <= l+lies+1" in report.sandwich_violations()
