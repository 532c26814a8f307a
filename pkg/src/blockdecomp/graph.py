"""Simple undirected graphs, components, vertex cuts and automorphisms.

Vertices are the integers ``0..n-1``. Everything here is immutable and
deterministic: ties are always broken towards the smallest vertex ids.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

VertexSet = frozenset  # frozenset[int]; serialized as a sorted list
Permutation = tuple  # tuple[int, ...]; image[v] is where v goes

__all__ = [
    "Graph",
    "GraphError",
    "AdjacencyError",
    "ContainmentError",
    "build_graph",
    "components",
    "min_vertex_cut",
    "min_set_separator",
    "local_connectivity",
    "automorphisms",
    "compose",
    "invert",
    "image",
]


class GraphError(ValueError):
    """Malformed graph input. ``edge`` holds the offending pair when known."""

    def __init__(self, message, edge=None):
        super().__init__(message)
        self.edge = edge


class AdjacencyError(ValueError):
    pass


class ContainmentError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple
    adj: tuple = field(compare=False, repr=False, hash=False)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(range(self.n))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """The image of this graph under the vertex map ``v -> perm[v]``."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __len__(self):
        return self.n


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    seen = set()
    for e in edges:
        u, v = (int(x) for x in e)
        if u == v:
            raise GraphError(f"self-loop at vertex {u}", edge=(u, v))
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}", edge=(u, v))
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge ({u}, {v})", edge=(u, v))
        seen.add(key)
    adj = [set() for _ in range(n)]
    for u, v in seen:
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(sorted(seen)), tuple(frozenset(a) for a in adj))


def components(g: Graph, removed: Iterable[int] = ()) -> list:
    """Connected components of ``g - removed``, ordered by least member."""
    removed = frozenset(removed)
    seen = set(removed)
    out = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    queue.append(y)
        out.append(frozenset(comp))
    return out


# -- vertex-capacitated flow -------------------------------------------------
#
# Vertex v is split into v_in = 2v and v_out = 2v + 1 joined by an arc of
# capacity 1 (or "big" for uncuttable vertices). Graph edges become big arcs
# u_out -> v_in in both directions. A super source feeds every source's
# in-node and every sink's out-node drains into a super sink, so the minimum
# cut is a set of vertices meeting every source-sink path, sources and sinks
# included unless they are uncuttable.


def _max_flow(g, sources, sinks, uncuttable=frozenset(), removed=frozenset(), limit=None):
    """Return ``(value, reachable)``; value is None if no finite cut exists."""
    n = g.n
    big = n + 1
    src, snk = 2 * n, 2 * n + 1
    res = [dict() for _ in range(2 * n + 2)]

    def arc(a, b, c):
        res[a][b] = res[a].get(b, 0) + c
        res[b].setdefault(a, 0)

    for v in g.vertices:
        if v in removed:
            continue
        arc(2 * v, 2 * v + 1, big if v in uncuttable else 1)
        for w in g.adj[v]:
            if w not in removed:
                arc(2 * v + 1, 2 * w, big)
    for v in sources:
        if v not in removed:
            arc(src, 2 * v, big)
    for v in sinks:
        if v not in removed:
            arc(2 * v + 1, snk, big)

    flow = 0
    while limit is None or flow < limit:
        parent = {src: None}
        queue = deque([src])
        while queue and snk not in parent:
            x = queue.popleft()
            for y, c in res[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if snk not in parent:
            break
        path = []
        y = snk
        while parent[y] is not None:
            path.append((parent[y], y))
            y = parent[y]
        push = min(res[a][b] for a, b in path)
        if push >= big:
            return None, None
        for a, b in path:
            res[a][b] -= push
            res[b][a] += push
        flow += push
        if flow >= big:
            return None, None

    reach = {src}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y, c in res[x].items():
            if c > 0 and y not in reach:
                reach.add(y)
                queue.append(y)
    return flow, reach


def _flow_value(g, sources, sinks, uncuttable=frozenset(), removed=frozenset(), limit=None):
    return _max_flow(g, sources, sinks, uncuttable, removed, limit)[0]


def _lex_least_cut(g, sources, sinks, uncuttable, size):
    """Lexicographically least vertex cut of the given minimum size.

    Greedy on ascending vertex ids: ``w`` belongs to some minimum cut of the
    current graph exactly when deleting it lowers the flow by one, and every
    minimum cut through the chosen prefix only uses larger ids.
    """
    chosen = []
    remaining = size
    for w in g.vertices:
        if remaining == 0:
            break
        if w in uncuttable:
            continue
        val = _flow_value(g, sources, sinks, uncuttable, frozenset(chosen + [w]))
        if val == remaining - 1:
            chosen.append(w)
            remaining -= 1
    assert remaining == 0, "greedy cut reconstruction failed"
    return frozenset(chosen)


def min_vertex_cut(g: Graph, u: int, v: int):
    """Minimum ``u``-``v`` vertex cut as ``(size, cut)``.

    Raises AdjacencyError when ``u == v`` or ``uv`` is an edge, since no
    internal cut exists then.
    """
    if u == v or g.has_edge(u, v):
        raise AdjacencyError(f"vertices {u} and {v} are equal or adjacent")
    ends = frozenset((u, v))
    size = _flow_value(g, [u], [v], uncuttable=ends)
    return size, _lex_least_cut(g, [u], [v], ends, size)


def local_connectivity(g: Graph, u: int, v: int, limit=None):
    """Number of internally disjoint u-v paths, capped at ``limit``.

    Returns None for adjacent (or equal) vertices, which no cut separates.
    """
    if u == v or g.has_edge(u, v):
        return None
    return _flow_value(g, [u], [v], uncuttable=frozenset((u, v)), limit=limit)


def min_set_separator(g: Graph, x: Iterable[int], y: Iterable[int]):
    """Smallest vertex set meeting every x-y path, as ``(size, cut)``.

    Vertices of ``x`` and ``y`` may themselves be cut; ``x & y`` always is.
    """
    x, y = frozenset(x), frozenset(y)
    if x <= y or y <= x:
        raise ContainmentError("one vertex set contains the other")
    size = _flow_value(g, x, y)
    return size, _lex_least_cut(g, x, y, frozenset(), size)


# -- automorphisms -----------------------------------------------------------


def _refined_colours(g: Graph) -> list:
    colours = [g.degree(v) for v in g.vertices]
    while True:
        sig = [(colours[v], tuple(sorted(colours[w] for w in g.adj[v]))) for v in g.vertices]
        index = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [index[s] for s in sig]
        if len(index) == len(set(colours)):
            return new
        colours = new


def automorphisms(g: Graph) -> list:
    """All automorphisms of ``g`` in lexicographic order (identity first).

    Backtracking over colour-refined classes; intended for n up to about 20.
    """
    n = g.n
    if n == 0:
        return [()]
    colours = _refined_colours(g)
    class_size = {}
    for c in colours:
        class_size[c] = class_size.get(c, 0) + 1

    # assign vertices adjacent to already placed ones early, for pruning
    order = []
    placed = set()
    while len(order) < n:
        rest = [v for v in g.vertices if v not in placed]
        v = min(rest, key=lambda w: (-len(g.adj[w] & placed), class_size[colours[w]], w))
        order.append(v)
        placed.add(v)

    found = []
    img = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            found.append(tuple(img))
            return
        v = order[i]
        for w in g.vertices:
            if used[w] or colours[w] != colours[v]:
                continue
            ok = True
            for u in order[:i]:
                if (u in g.adj[v]) != (img[u] in g.adj[w]):
                    ok = False
                    break
            if ok:
                img[v] = w
                used[w] = True
                extend(i + 1)
                used[w] = False
        img[v] = -1

    extend(0)
    found.sort()
    return found


def compose(p: Sequence[int], q: Sequence[int]) -> tuple:
    """The map ``v -> p[q[v]]`` (apply q first)."""
    return tuple(p[q[v]] for v in range(len(q)))


def invert(p: Sequence[int]) -> tuple:
    out = [0] * len(p)
    for v, w in enumerate(p):
        out[w] = v
    return tuple(out)


def image(p: Sequence[int], vertices: Iterable[int]) -> frozenset:
    return frozenset(p[v] for v in vertices)
