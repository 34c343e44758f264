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

"""Closed-form quantities: weights, weight bounds and the L-family of bounds.

Every min{q : ...} scan is done on exact integers. Only `ru_estimate`,
`relaxed_weight_bound` and the applicability threshold of the large-n formula
use floating point, and the threshold is rounded up before it is compared.
"""

import logging
import math
from collections.abc import Callable, Sequence
from functools import lru_cache

from opentelemetry import trace

from app.utils.errors import BudgetExceededError, DomainError
from app.utils.typing import BoundReport

tracer = trace.get_tracer(__name__)

# Exact Basic-game evaluators supplied by the solver module.
BasicEvaluator = Callable[[int, int], int]
BasicStateEvaluator = Callable[[int, tuple[int, ...]], int]


def ceil_log2(x: int) -> int:
    """⌈log2 x⌉ for x >= 1, via the bit length of x-1."""
    if x < 1:
        raise DomainError(f"ceil_log2 needs x >= 1, got {x}")
    return (x - 1).bit_length()


def remainder_m(n: int, k: int, i: int) -> int:
    """m_i, the remainder of n·i divided by k."""
    if k < 1 or i < 1:
        raise DomainError(f"need k >= 1 and i >= 1, got k={k}, i={i}")
    return (n * i) % k


@lru_cache(maxsize=4096)
def binom_le(q: int, lies: int) -> int:
    """Σ_{j<=lies} C(q, j); zero for a negative `lies`."""
    return sum(math.comb(q, j) for j in range(lies + 1))


def state_weight(counts: Sequence[int], q: int) -> int:
    lies = len(counts) - 1
    return sum(binom_le(q, lies - i) * x for i, x in enumerate(counts))


def weight_bound(n: int, lies: int) -> int:
    """W_l(n) = min{q : n·Σ_{j<=l} C(q, j) <= 2^q}."""
    if n < 1:
        raise DomainError(f"weight bound needs n >= 1, got {n}")
    q = 0
    while n * binom_le(q, lies) > 1 << q:
        q += 1
    return q


@lru_cache(maxsize=1 << 16)
def state_weight_bound(counts: tuple[int, ...]) -> int:
    """Smallest q with w_q(state) <= 2^q; a lower bound on the state's value."""
    if sum(counts) < 1:
        raise DomainError("the weight bound of an empty state is undefined")
    q = 0
    while state_weight(counts, q) > 1 << q:
        q += 1
    return q


def relaxed_weight_bound(n: int, lies: int) -> float:
    """Smallest real q >= 0 with n <= 2^q / (q+1)^lies.

    Since Σ_{j<=l} C(q, j) <= (q+1)^l, its ceiling is never below W_l(n).
    """
    if n < 1:
        raise DomainError(f"relaxed weight bound needs n >= 1, got {n}")

    if n == 1:
        return 0.0

    def slack(q: float) -> float:
        return q - lies * math.log2(q + 1) - math.log2(n)

    # slack is negative up to its minimum at q+1 = lies/ln 2 and increasing
    # after it, so the root lies to the right.
    lo = max(0.0, lies / math.log(2) - 1)
    hi = max(1.0, 2 * lo)
    while slack(hi) < 0:
        hi *= 2
    for _ in range(200):
        mid = (lo + hi) / 2
        if slack(mid) < 0:
            lo = mid
        else:
            hi = mid
    return hi


def ru0k_exact(n: int, k: int) -> int:
    """RU_0^k(n) = ⌊n/k⌋ - 1 + ⌈log2(k + m1)⌉."""
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got n={n}, k={k}")
    return n // k - 1 + ceil_log2(k + remainder_m(n, k, 1))


def ruk1_exact(n: int, lies: int) -> int:
    """RU_l^1(n) = (l+1)n - 1 for n >= 2; a single candidate needs no question."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if n == 1:
        return 0
    return (lies + 1) * n - 1


def _l_log_l(lies: int) -> float:
    return 0.0 if lies <= 1 else lies * math.log2(lies)


def ru_estimate(n: int, lies: int) -> tuple[float, float]:
    """Closed-form sandwich for RU_l(n), l >= 1, n >= 2 (base-2 logarithms)."""
    if n < 2 or lies < 1:
        raise DomainError(f"need n >= 2 and l >= 1, got n={n}, l={lies}")
    head = math.log2(n) + lies * math.log2(math.log2(2 * n))
    return head - _l_log_l(lies), head + 2 * _l_log_l(lies) + lies + 2


def _check_restricted_domain(n: int, k: int) -> None:
    if not 1 < k < n // 2:
        raise DomainError(f"need 1 < k < floor(n/2), got n={n}, k={k}")


def _block_term(n: int, k: int, p: int) -> int:
    return (p + 1) * n // k - 1


def bound_L(n: int, k: int, lies: int, ru_basic: BasicEvaluator) -> int:
    """max_p ⌊(p+1)n/k⌋ - 1 + RU_{l-p}(k)."""
    _check_restricted_domain(n, k)
    return max(_block_term(n, k, p) + ru_basic(lies - p, k) for p in range(lies + 1))


def bound_L_plus(n: int, k: int, lies: int, ru_basic: BasicEvaluator) -> int:
    """The variant with RU_{l-p}(k + m_{p+1}) in place of RU_{l-p}(k)."""
    _check_restricted_domain(n, k)
    return max(
        _block_term(n, k, p) + ru_basic(lies - p, k + remainder_m(n, k, p + 1))
        for p in range(lies + 1)
    )


def bound_L_hat(n: int, k: int, lies: int) -> int:
    """max_p ⌊(p+1)n/k⌋ - 1 + W_{l-p}(k); always computable."""
    _check_restricted_domain(n, k)
    return max(_block_term(n, k, p) + weight_bound(k, lies - p) for p in range(lies + 1))


def two_component_state(n: int, k: int, lies: int, p: int) -> tuple[int, ...]:
    """(k + m_{p+1}, n - k - m_{p+1}, 0, ..., 0) with l-p+1 components.

    With no lie left the second group is already out of play, so the state
    collapses to the single component (k + m_{p+1}).
    """
    head = k + remainder_m(n, k, p + 1)
    left = lies - p
    if left == 0:
        return (head,)
    return (head, n - head) + (0,) * (left - 1)


def bound_L_tilde(n: int, k: int, lies: int, ru_basic_state: BasicStateEvaluator) -> int:
    """max_p ⌊(p+1)n/k⌋ - 1 + RU_{l-p}(k + m_{p+1}, n - k - m_{p+1}, 0, ..., 0).

    Raises BudgetExceededError (from the evaluator) when a state is too large.
    """
    _check_restricted_domain(n, k)
    return max(
        _block_term(n, k, p) + ru_basic_state(lies - p, two_component_state(n, k, lies, p))
        for p in range(lies + 1)
    )


def theorem2_threshold(k: int, lies: int) -> int:
    """Smallest integer n at which the large-n exact formula is known to hold."""
    if k < 2 or lies < 1:
        raise DomainError(f"need k >= 2 and l >= 1, got k={k}, l={lies}")
    loglog = math.log2(math.log2(2 * k))
    parts = (
        k * (lies + 5),
        k * (loglog + 6),
        k * (loglog + 2 * math.log2(lies) + 5),
    )
    return max(math.ceil(part) for part in parts)


def theorem2(n: int, k: int, lies: int) -> tuple[bool, int | None]:
    """Applicability and value of ⌊(l+1)n/k⌋ - 1 + ⌈log2(k + m_{l+1})⌉."""
    _check_restricted_domain(n, k)
    if n < theorem2_threshold(k, lies):
        return False, None
    return True, (lies + 1) * n // k - 1 + ceil_log2(k + remainder_m(n, k, lies + 1))


def ch(a: int, b: int) -> int:
    """min{q : (q+1)a + b <= 2^q}."""
    if a < 0 or b < 0 or a + b < 2:
        raise DomainError(f"need a, b >= 0 and a + b >= 2, got a={a}, b={b}")
    q = 0
    while (q + 1) * a + b > 1 << q:
        q += 1
    return q


def conjecture_quantities(
    a: int, b: int, k: int, ru1k: Callable[[int, int], int]
) -> tuple[int, int | None, int | None]:
    """(C, χ0, χ1) for the one-lie state (a, b).

    `ru1k(x0, x1)` must be the exact one-lie value with cap k. χ0 or χ1 is
    None when no admissible value satisfies its predicate.
    """
    if k < 1 or not 2 * k > a or a + b < 2 or a < 0 or b < 0:
        raise DomainError(f"need 2k > a and a + b >= 2, got a={a}, b={b}, k={k}")
    m = 2 * a + b
    big_c = max(ch(a, b), ru0k_exact(m, min(k, m)))
    chi0 = next(
        (x for x in range(min(a, k), -1, -1) if ru1k(x, a - x) <= big_c - 1),
        None,
    )
    if chi0 is None:
        return big_c, None, None
    chi1 = next(
        (
            y
            for y in range(min(b, k - chi0), -1, -1)
            if ru1k(chi0, y + a - chi0) <= big_c - 1
        ),
        None,
    )
    return big_c, chi0, chi1


def bound_report(
    n: int,
    k: int,
    lies: int,
    ru_basic: BasicEvaluator,
    ru_basic_state: BasicStateEvaluator,
    exact: int | None = None,
) -> BoundReport:
    """Collects every bound for one (n, k, l) triple."""
    with tracer.start_as_current_span("bounds.report") as span:
        span.set_attribute("n", n)
        span.set_attribute("k", k)
        span.set_attribute("lies", lies)
        notes: list[str] = []
        try:
            l_tilde: int | None = bound_L_tilde(n, k, lies, ru_basic_state)
        except BudgetExceededError as e:
            logging.info(f"L-tilde infeasible for n={n}, k={k}, l={lies}: {e}")
            l_tilde = None
            notes.append(f"l_tilde: {e}")
        if lies >= 1:
            applicable, value = theorem2(n, k, lies)
        else:
            applicable, value = False, None
        return BoundReport(
            n=n,
            k=k,
            lies=lies,
            l=bound_L(n, k, lies, ru_basic),
            l_plus=bound_L_plus(n, k, lies, ru_basic),
            l_hat=bound_L_hat(n, k, lies),
            l_tilde=l_tilde,
            theorem2_applicable=applicable,
            theorem2_value=value,
            exact=exact,
            notes=notes,
        )
