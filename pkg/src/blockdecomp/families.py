"""Small named graphs and seeded random graphs used by tests, docs and the corpus."""
from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, build_graph

__all__ = [
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "empty_graph",
    "grid_graph",
    "bowtie",
    "random_graph",
    "mixed_order_example",
]


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def grid_graph(rows: int, cols: int) -> Graph:
    """Row-major ids: vertex (i, j) is ``i * cols + j``."""
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return build_graph(rows * cols, edges)


def bowtie() -> Graph:
    """Two triangles sharing vertex 2."""
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def mixed_order_example(k: int = 4):
    """Graph with a small k-block that no nested system can keep apart
    together with the two (k+1)-blocks beside it.

    Built from cliques T = K^(k/2-1), L, R = K^(k/2), M = K^(k/2+2) and
    X, Y = K^(9k): T is joined to L and R, M to X and Y, L to X and R to Y.
    Returns ``(graph, parts)`` with ``parts`` mapping those names to vertex sets.
    """
    if k < 4 or k % 2:
        raise ValueError("k must be even and at least 4")
    h = k // 2
    sizes = {"T": h - 1, "L": h, "R": h, "M": h + 2, "X": 9 * k, "Y": 9 * k}
    parts, start = {}, 0
    for name in ("T", "L", "R", "M", "X", "Y"):
        parts[name] = frozenset(range(start, start + sizes[name]))
        start += sizes[name]
    edges = set()
    for p in parts.values():
        edges.update(combinations(sorted(p), 2))
    for a, b in (("T", "L"), ("T", "R"), ("M", "X"), ("M", "Y"), ("L", "X"), ("R", "Y")):
        edges.update((min(u, v), max(u, v)) for u in parts[a] for v in parts[b])
    return build_graph(start, sorted(edges)), parts
