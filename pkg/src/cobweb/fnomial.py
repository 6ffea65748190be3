"""Exact big-integer F-factorials and F-nomial coefficients, plus ballot and
Catalan path counts backed by a brute-force string oracle.

Everything is exact integer arithmetic; there are no floating-point paths.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceeded, IndexOutOfDomain, NonIntegral
from .sequences import FSequence

__all__ = [
    "FNomialTable",
    "BallotCount",
    "catalan",
    "ballot",
    "dominated_strings_brute",
    "BRUTE_LENGTH_BUDGET",
]

# Exhaustive string-enumeration bound for the oracle (2^(n+k)-style work).
BRUTE_LENGTH_BUDGET = 28


class FNomialTable:
    """Memoized exact F_n! values for one sequence.

    F_0! = 1 and F_n! = F_1 * F_2 * ... * F_n.  The memo grows on demand
    under a lock and is never evicted, so concurrent queries are safe and
    deterministic.
    """

    def __init__(self, seq: FSequence) -> None:
        self.seq = seq
        self._fact: list[int] = [1]
        self._lock = threading.Lock()

    def f_factorial(self, n: int) -> int:
        """F_n!, exactly."""
        if n < 0:
            raise IndexOutOfDomain(f"factorial index must be >= 0, got {n}")
        if n >= len(self._fact):
            with self._lock:
                while len(self._fact) <= n:
                    self._fact.append(self._fact[-1] * self.seq.value(len(self._fact)))
        return self._fact[n]

    def fnomial(self, n: int, k: int) -> int:
        """The coefficient (n over k)_F = F_n!/(F_k! F_{n-k}!); 0 outside 0 <= k <= n.

        The quotient is computed exactly and checked for divisibility rather
        than assumed: sequences that are not GCD-morphic can make it
        non-integral, which raises NonIntegral.
        """
        if k < 0 or k > n:
            return 0
        num = self.f_factorial(n)
        den = self.f_factorial(k) * self.f_factorial(n - k)
        q, r = divmod(num, den)
        if r:
            raise NonIntegral(num, den)
        return q


@dataclass(frozen=True)
class BallotCount:
    """Count of 0-dominated binary strings with n zeros and k ones."""

    k: int
    n: int
    count: int


def catalan(n: int) -> int:
    """The n-th Catalan number, C(2n, n)/(n + 1)."""
    if n < 0:
        raise ValueError(f"catalan index must be >= 0, got {n}")
    return math.comb(2 * n, n) // (n + 1)


def ballot(k: int, n: int) -> BallotCount:
    """Ballot number: 0-dominated strings with n zeros and k ones.

    Closed form ((n - k + 1)/(n + 1)) * C(n + k, k) for k <= n, zero
    otherwise; pinned to dominated_strings_brute by the test suite.
    """
    if k < 0 or n < 0:
        raise ValueError(f"ballot arguments must be >= 0, got k={k}, n={n}")
    if k > n:
        return BallotCount(k, n, 0)
    q, r = divmod((n - k + 1) * math.comb(n + k, k), n + 1)
    assert r == 0, (k, n)
    return BallotCount(k, n, q)


def dominated_strings_brute(k: int, n: int) -> int:
    """Oracle: count 0-dominated strings with n zeros and k ones by explicit
    enumeration of every arrangement.

    A string is 0-dominated when every prefix holds at least as many 0's as
    1's.  With the ones at sorted positions p_1 < ... < p_k, the prefix
    through p_j holds j ones and p_j + 1 - j zeros, so domination is
    p_j >= 2j - 1 for every j.
    """
    if k < 0 or n < 0:
        raise ValueError(f"string counts need k, n >= 0, got k={k}, n={n}")
    if n + k > BRUTE_LENGTH_BUDGET:
        raise BudgetExceeded(
            f"string length {n + k} exceeds the enumeration budget {BRUTE_LENGTH_BUDGET}"
        )
    count = 0
    for ones in combinations(range(n + k), k):
        if all(p >= 2 * j - 1 for j, p in enumerate(ones, 1)):
            count += 1
    return count
