"""The layer poset over labels (l, m) ordered componentwise, its size, rank
and chain formulas, Stirling-like numbers of both kinds, and Bell-like sums.

Two natural readings of the element set exist and both are supported as an
explicit mode:

* strict - {(l, m) : 0 <= l <= k, l < m <= n}; matches the closed size
  formula (n - k)(k + 1) + k(k + 1)/2 and the rank form l + m - 1.
* weak - adds the diagonal and (0, 0) as bottom: {(l, m) : 0 <= l <= k,
  l <= m <= n}; matches the ballot / Catalan maximal-chain counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, NamedTuple

from .errors import InvalidBounds, UndefinedRank
from .fnomial import ballot
from .poset import FinitePoset, WhitneyVector, build_poset, maximal_chains, whitney

__all__ = [
    "GridElement",
    "GridPoset",
    "GridMode",
    "build_grid",
    "size_formula",
    "grid_rank",
    "stirling2_grid",
    "stirling2_closed",
    "stirling1_grid",
    "bell_grid",
    "grid_chain_count",
    "grid_whitney",
]

GridMode = Literal["strict", "weak"]


class GridElement(NamedTuple):
    """A layer label (l, m)."""

    l: int
    m: int

    def __str__(self) -> str:
        return f"({self.l},{self.m})"


@dataclass(frozen=True)
class GridPoset:
    k: int
    n: int
    mode: GridMode
    poset: FinitePoset


def _check_bounds(k: int, n: int, mode: GridMode) -> None:
    if mode not in ("strict", "weak"):
        raise ValueError(f"mode must be 'strict' or 'weak', got {mode!r}")
    if k < 0 or n < k:
        raise InvalidBounds(f"need 0 <= k <= n, got k={k}, n={n}")
    if mode == "strict" and k == n:
        raise InvalidBounds(f"strict mode needs k < n, got k=n={k}")


def _elements(k: int, n: int, mode: GridMode) -> list[GridElement]:
    if mode == "strict":
        return [GridElement(l, m) for l in range(k + 1) for m in range(l + 1, n + 1)]
    return [GridElement(l, m) for l in range(k + 1) for m in range(l, n + 1)]


def build_grid(k: int, n: int, mode: GridMode = "strict") -> GridPoset:
    """The poset of labels (l, m) under the componentwise order.

    The order is generated by unit steps (l, m) -> (l+1, m) and
    (l, m) -> (l, m+1) inside the element set; covers and ranks come out of
    the generic engine.
    """
    _check_bounds(k, n, mode)
    els = _elements(k, n, mode)
    have = set(els)
    pairs: list[tuple[GridElement, GridElement]] = []
    for e in els:
        up = GridElement(e.l + 1, e.m)
        if up in have:
            pairs.append((e, up))
        right = GridElement(e.l, e.m + 1)
        if right in have:
            pairs.append((e, right))
    return GridPoset(k, n, mode, build_poset(els, pairs))


def size_formula(k: int, n: int) -> int:
    """(n - k)(k + 1) + k(k + 1)/2: the strict element count, in closed form."""
    if k < 0 or n < k:
        raise InvalidBounds(f"need 0 <= k <= n, got k={k}, n={n}")
    return (n - k) * (k + 1) + k * (k + 1) // 2


def grid_rank(e: GridElement) -> int:
    """Closed-form rank l + m - 1 of a strict label (l < m)."""
    if e.l < 0 or e.m < 0:
        raise InvalidBounds(f"labels need l, m >= 0, got {e}")
    if e.l >= e.m:
        raise UndefinedRank(f"rank l + m - 1 is defined for l < m only, got {e}")
    return e.l + e.m - 1


def stirling2_grid(k_rank: int, l: int, m: int) -> int:
    """Second-kind Stirling-like number: strict labels (a, b) with
    a + b - 1 = k_rank, counted one by one along the slant a + b = k_rank + 1."""
    if l < 0 or m < l:
        raise InvalidBounds(f"need 0 <= l <= m, got l={l}, m={m}")
    target = k_rank + 1
    count = 0
    for a in range(l + 1):
        b = target - a
        if a < b <= m:
            count += 1
    return count


def stirling2_closed(k_rank: int, l: int, m: int) -> int:
    """Closed form for stirling2_grid: the slant a + b = k_rank + 1 clipped to
    the strict grid gives max(0, min(l, ceil((k_rank+1)/2) - 1) - max(0, k_rank+1-m) + 1)."""
    if l < 0 or m < l:
        raise InvalidBounds(f"need 0 <= l <= m, got l={l}, m={m}")
    target = k_rank + 1
    hi = min(l, (target + 1) // 2 - 1)
    lo = max(0, target - m)
    return max(0, hi - lo + 1)


@lru_cache(maxsize=128)
def _strict_whitney(l: int, m: int, kind: Literal["second", "first"]) -> WhitneyVector:
    return whitney(build_grid(l, m, "strict").poset, kind)


def grid_whitney(l: int, m: int, kind: Literal["second", "first"] = "second") -> WhitneyVector:
    """Whitney vector of the strict grid, via the generic poset engine."""
    if l < 0 or m <= l:
        raise InvalidBounds(f"strict grid needs 0 <= l < m, got l={l}, m={m}")
    return _strict_whitney(l, m, kind)


def stirling1_grid(k_rank: int, l: int, m: int) -> int:
    """First-kind Stirling-like number: sum of mu((0,1), pi) over the rank-k_rank
    elements of the strict grid, via the Möbius engine."""
    vec = grid_whitney(l, m, "first").values
    if 0 <= k_rank < len(vec):
        return vec[k_rank]
    return 0


def bell_grid(l: int, m: int) -> int:
    """Bell-like number of the strict grid: the Whitney numbers of the second
    kind summed over all ranks; equal to size_formula(l, m)."""
    if l < 0 or m <= l:
        raise InvalidBounds(f"need 0 <= l < m, got l={l}, m={m}")
    return sum(stirling2_grid(k, l, m) for k in range(l + m))


def grid_chain_count(
    k: int, n: int, mode: GridMode = "strict", method: Literal["brute", "closed"] = "closed"
) -> int:
    """Number of maximal chains of the grid.

    `brute` counts saturated paths through the generic engine; `closed`
    evaluates the ballot form ((n-k+1)/(n+1)) C(n+k, k) in weak mode and the
    strictly-dominated variant ((n-k)/n) C(n+k-1, k) in strict mode.  The two
    methods are pinned to each other by the test suite.
    """
    _check_bounds(k, n, mode)
    if method == "brute":
        count = maximal_chains(build_grid(k, n, mode).poset, "count")
        assert isinstance(count, int)
        return count
    if method == "closed":
        if mode == "weak":
            return ballot(k, n).count
        q, r = divmod((n - k) * math.comb(n + k - 1, k), n)
        assert r == 0, (k, n)
        return q
    raise ValueError(f"method must be 'brute' or 'closed', got {method!r}")
