"""Cobweb Hasse diagrams over an F-sequence: level s holds F_s vertices and
consecutive levels are joined completely, so any two vertices on different
levels are comparable.  Includes layer slices, chain counts, and DOT export.

Levels are 1-based here; that is a fixed convention of this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Mapping, NamedTuple

from .errors import BudgetExceeded, InvalidBounds
from .poset import FinitePoset, build_poset, maximal_chains
from .sequences import FSequence

__all__ = [
    "CobwebVertex",
    "CobwebPoset",
    "build_cobweb",
    "layer_subposet",
    "layer_chain_count",
    "to_dot",
    "VERTEX_BUDGET",
]

VERTEX_BUDGET = 10_000


class CobwebVertex(NamedTuple):
    """Vertex j on level s (1 <= j <= F_s)."""

    s: int
    j: int

    def __str__(self) -> str:
        return f"({self.s},{self.j})"


@dataclass(frozen=True)
class CobwebPoset:
    seq: FSequence
    level_max: int
    widths: tuple[int, ...]  # widths[s-1] = F_s
    poset: FinitePoset

    def level_of(self) -> dict[CobwebVertex, int]:
        """Vertex -> level map, e.g. for DOT rank grouping."""
        return {v: v.s for v in self.poset.elements}


def _slice_vertices_and_pairs(
    widths: list[int], lo: int, hi: int
) -> tuple[list[CobwebVertex], list[tuple[CobwebVertex, CobwebVertex]]]:
    vertices = [
        CobwebVertex(s, j) for s in range(lo, hi + 1) for j in range(1, widths[s - 1] + 1)
    ]
    pairs = [
        (CobwebVertex(s, i), CobwebVertex(s + 1, j))
        for s in range(lo, hi)
        for i in range(1, widths[s - 1] + 1)
        for j in range(1, widths[s] + 1)
    ]
    return vertices, pairs


def build_cobweb(seq: FSequence, level_max: int) -> CobwebPoset:
    """Levels 1..level_max with complete bipartite covers between neighbours."""
    if level_max < 1:
        raise InvalidBounds(f"need level_max >= 1, got {level_max}")
    widths: list[int] = []
    total = 0
    for s in range(1, level_max + 1):
        total += (w := seq.value(s))
        if total > VERTEX_BUDGET:
            raise BudgetExceeded(
                f"cobweb over {seq.name!r} needs more than {VERTEX_BUDGET} vertices "
                f"by level {s}"
            )
        widths.append(w)
    vertices, pairs = _slice_vertices_and_pairs(widths, 1, level_max)
    return CobwebPoset(seq, level_max, tuple(widths), build_poset(vertices, pairs))


def layer_subposet(c: CobwebPoset, k: int, n: int) -> FinitePoset:
    """The induced subposet on levels k..n (1 <= k < n <= level_max)."""
    if not 1 <= k < n <= c.level_max:
        raise InvalidBounds(
            f"need 1 <= k < n <= {c.level_max}, got k={k}, n={n}"
        )
    vertices, pairs = _slice_vertices_and_pairs(list(c.widths), k, n)
    return build_poset(vertices, pairs)


def layer_chain_count(
    c: CobwebPoset, k: int, n: int, method: str = "closed"
) -> int:
    """Maximal chains of the levels-k..n slice: one vertex per level, so the
    closed count is the product of the level widths."""
    if method == "closed":
        if not 1 <= k < n <= c.level_max:
            raise InvalidBounds(f"need 1 <= k < n <= {c.level_max}, got k={k}, n={n}")
        return prod(c.widths[s - 1] for s in range(k, n + 1))
    if method == "brute":
        count = maximal_chains(layer_subposet(c, k, n), "count")
        assert isinstance(count, int)
        return count
    raise ValueError(f"method must be 'brute' or 'closed', got {method!r}")


def _quote(label: object) -> str:
    text = str(label).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{text}"'


def to_dot(
    poset: FinitePoset,
    levels: Mapping[object, int] | None = None,
    name: str = "poset",
) -> str:
    """Render a poset as a DOT digraph: one node per element, one edge per
    cover oriented upward, and (when `levels` is given) rank=same groups so
    layout engines reproduce the layered displays.

    Output is byte-deterministic: nodes in insertion order, edges in
    element-index order.
    """
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    if levels is not None and len(poset):
        by_level: dict[int, list[object]] = {}
        for el in poset.elements:
            by_level.setdefault(levels[el], []).append(el)
        for level in sorted(by_level):
            members = " ".join(f"{_quote(el)};" for el in by_level[level])
            lines.append(f"  {{ rank=same; {members} }}")
    else:
        for el in poset.elements:
            lines.append(f"  {_quote(el)};")
    for x, y in poset.covers:
        lines.append(f"  {_quote(x)} -> {_quote(y)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
