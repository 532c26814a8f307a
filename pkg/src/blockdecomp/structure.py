"""Nested separation systems, their structure trees and tree-decompositions.

For a nested system N, two separations are equivalent when they are equal or
the inverse of the first is an immediate predecessor of the second. The
classes are the nodes of a tree whose edges are the inverse pairs; the part
of a node is the intersection of the first sides of its members.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph
from .separations import (
    InvalidSystemError,
    Separation,
    SeparationSet,
    lt,
    separates,
    sorted_separations,
)

__all__ = [
    "NestedSystem",
    "StructureTree",
    "TreeDecomposition",
    "NodeKind",
    "ContractionReport",
    "equiv",
    "structure_tree",
    "part",
    "node_kind",
    "is_inseparable",
    "n_blocks",
    "tree_decomposition",
    "induced_separations",
    "delete_separation",
    "refinement_map",
    "refines",
    "is_exceptional_hub",
]


class NestedSystem(SeparationSet):
    """A separation system whose members are pairwise nested."""

    def _check(self):
        super()._check()
        pair = self.crossing_pair()
        if pair is not None:
            s, t = pair
            raise InvalidSystemError(f"separations {s} and {t} cross", witness=pair)


def _member(n: NestedSystem, s: Separation):
    if s not in n:
        raise KeyError(f"{s} is not in the system")


def _is_predecessor(seps, s: Separation, t: Separation) -> bool:
    """``s < t`` with nothing of ``seps`` strictly between them."""
    if not lt(s, t):
        return False
    return not any(lt(s, m) and lt(m, t) for m in seps)


def equiv(n: NestedSystem, s1: Separation, s2: Separation) -> bool:
    _member(n, s1)
    _member(n, s2)
    return s1 == s2 or _is_predecessor(n.separations, s1.inverse(), s2)


@dataclass(frozen=True)
class StructureTree:
    """``nodes[i]`` is a class; ``edges[j] = (x, y, s)`` with ``s`` in x and its inverse in y."""

    system: NestedSystem
    nodes: tuple
    edges: tuple

    def node_of(self, s: Separation) -> int:
        for i, x in enumerate(self.nodes):
            if s in x:
                return i
        raise KeyError(f"{s} is not in the system")

    def degree(self, i: int) -> int:
        return sum((x == i) + (y == i) for x, y, _ in self.edges)

    def neighbours(self, i: int) -> list:
        out = [y for x, y, _ in self.edges if x == i] + [x for x, y, _ in self.edges if y == i]
        return sorted(out)


class _UnionFind:
    def __init__(self, n):
        self.up = list(range(n))

    def find(self, a):
        while self.up[a] != a:
            self.up[a] = self.up[self.up[a]]
            a = self.up[a]
        return a

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.up[max(a, b)] = min(a, b)


def _check_tree(count: int, pairs) -> None:
    assert len(pairs) == count - 1, f"{count} nodes but {len(pairs)} edges"
    uf = _UnionFind(count)
    for x, y in pairs:
        assert uf.find(x) != uf.find(y), f"edge {x}-{y} closes a cycle"
        uf.union(x, y)


def structure_tree(n: NestedSystem) -> StructureTree:
    seps = sorted_separations(n.separations)
    if not seps:
        return StructureTree(n, (frozenset(),), ())
    index = {s: i for i, s in enumerate(seps)}
    below = [[lt(s, t) for t in seps] for s in seps]

    def pred(i, j):
        return below[i][j] and not any(below[i][m] and below[m][j] for m in range(len(seps)))

    uf = _UnionFind(len(seps))
    for i, s in enumerate(seps):
        inv = index[s.inverse()]
        for j in range(len(seps)):
            if pred(inv, j):
                uf.union(i, j)
    groups = {}
    for i in range(len(seps)):
        groups.setdefault(uf.find(i), []).append(i)
    classes = sorted(groups.values())  # each group is ascending, so this orders by least member
    for members in classes:
        for i in members:
            for j in members:
                # the relation is already transitive: union-find added nothing
                assert i == j or pred(index[seps[i].inverse()], j), "~ is not transitive"
                assert i == j or not (below[i][j] or below[j][i]), "equivalent members comparable"
    node = {}
    for x, members in enumerate(classes):
        for i in members:
            node[i] = x
    edges = []
    for i, s in enumerate(seps):
        j = index[s.inverse()]
        if i < j:
            edges.append((node[i], node[j], s))
    _check_tree(len(classes), [(x, y) for x, y, _ in edges])
    nodes = tuple(frozenset(seps[i] for i in members) for members in classes)
    return StructureTree(n, nodes, tuple(edges))


def part(n: NestedSystem, x: Iterable[Separation]) -> frozenset:
    x = list(x)
    out = n.graph.vertex_set
    for s in x:
        out = out & s.a
    return out


def is_inseparable(system: Iterable[Separation], x: Iterable[int]) -> bool:
    x = frozenset(x)
    return not any(separates(s, x) for s in system)


@dataclass(frozen=True)
class NodeKind:
    block: bool
    hub: bool

    def label(self) -> str:
        if self.block and self.hub:
            return "block+hub"
        return "block" if self.block else "hub"


def node_kind(n: NestedSystem, x: Iterable[Separation]) -> NodeKind:
    x = frozenset(x)
    p = part(n, x)
    assert is_inseparable(n, p), "part is separated by the system"
    maximal = all(not is_inseparable(n, p | {v}) for v in n.graph.vertex_set - p)
    hub = any(p == s.separator for s in x)
    assert maximal or hub
    return NodeKind(maximal, hub)


@dataclass(frozen=True)
class TreeDecomposition:
    """Parts indexed by tree node; ``edges[j] = (x, y)``.

    ``separations[j]``, when present, is the generating separation of edge j,
    oriented with the class of node x.
    """

    graph: Graph
    parts: tuple
    edges: tuple
    separations: tuple = ()
    kinds: tuple = ()

    def adhesion_sets(self) -> list:
        return [self.parts[x] & self.parts[y] for x, y in self.edges]

    def adhesion(self) -> int:
        return max((len(s) for s in self.adhesion_sets()), default=0)

    def neighbours(self, i: int) -> list:
        return sorted([y for x, y in self.edges if x == i] + [x for x, y in self.edges if y == i])

    def path(self, i: int, j: int) -> list:
        """Edge indices on the tree path from node i to node j."""
        back = {i: None}
        queue = deque([i])
        while queue:
            x = queue.popleft()
            for e, (p, q) in enumerate(self.edges):
                for a, b in ((p, q), (q, p)):
                    if a == x and b not in back:
                        back[b] = (x, e)
                        queue.append(b)
        out = []
        while back[j] is not None:
            j, e = back[j]
            out.append(e)
        return out[::-1]

    def part_containing(self, x: Iterable[int]) -> list:
        x = frozenset(x)
        return [i for i, p in enumerate(self.parts) if x <= p]


def tree_decomposition(n: NestedSystem) -> TreeDecomposition:
    t = structure_tree(n)
    parts = tuple(part(n, x) for x in t.nodes)
    kinds = tuple(node_kind(n, x) for x in t.nodes)
    return TreeDecomposition(
        n.graph,
        parts,
        tuple((x, y) for x, y, _ in t.edges),
        tuple(s for _, _, s in t.edges),
        kinds,
    )


def n_blocks(n: NestedSystem) -> list:
    """The maximal N-inseparable vertex sets, which are the block-node parts."""
    td = tree_decomposition(n)
    blocks = {p for p, k in zip(td.parts, td.kinds) if k.block}
    return sorted(blocks, key=lambda b: tuple(sorted(b)))


def _edge_sides(td: TreeDecomposition, e: int):
    x, y = td.edges[e]
    side = {x}
    queue = deque([x])
    while queue:
        a = queue.popleft()
        for f, (p, q) in enumerate(td.edges):
            if f == e:
                continue
            for u, v in ((p, q), (q, p)):
                if u == a and v not in side:
                    side.add(v)
                    queue.append(v)
    return side, set(range(len(td.parts))) - side


def _oriented_induced(td: TreeDecomposition) -> list:
    """Per edge ``(x, y)``: the separation with x's side first."""
    out = []
    for e in range(len(td.edges)):
        left, right = _edge_sides(td, e)
        a = frozenset().union(*(td.parts[i] for i in left))
        b = frozenset().union(*(td.parts[i] for i in right))
        out.append(Separation(a, b, td.graph))
    return out


def induced_separations(td: TreeDecomposition) -> frozenset:
    out = set()
    for s in _oriented_induced(td):
        out.add(s)
        out.add(s.inverse())
    return frozenset(out)


@dataclass(frozen=True)
class ContractionReport:
    removed: Separation
    x: frozenset
    y: frozenset
    z: frozenset
    v_x: frozenset
    v_y: frozenset
    v_z: frozenset
    nodes_ok: bool
    z_ok: bool
    parts_ok: bool
    edges_ok: bool

    @property
    def holds(self) -> bool:
        return self.nodes_ok and self.z_ok and self.parts_ok and self.edges_ok


def delete_separation(n: NestedSystem, s: Separation):
    """``N - {s, s^-1}`` together with a check that its tree is a contraction."""
    _member(n, s)
    e = {s, s.inverse()}
    smaller = NestedSystem(n.graph, n.separations - e)
    old, new = structure_tree(n), structure_tree(smaller)
    x = old.nodes[old.node_of(s)]
    y = old.nodes[old.node_of(s.inverse())]
    merged = (x | y) - e
    others = [v for v in old.nodes if v != x and v != y]
    nodes_new = set(new.nodes)
    if merged:
        z = new.nodes[new.node_of(next(iter(merged)))]
    else:
        z = frozenset()
    nodes_ok = nodes_new - {z} == set(others) and len(new.nodes) == len(old.nodes) - 1
    z_ok = z == merged
    v_x, v_y, v_z = part(n, x), part(n, y), part(smaller, z)
    parts_ok = v_z == v_x | v_y

    def labelled(tree, rename):
        return {
            (rename(tree.nodes[a]), rename(tree.nodes[b]), t)
            for a, b, t in tree.edges
        }

    def squash(node):
        return z if node in (x, y) else node

    old_edges = {(a, b, t) for a, b, t in labelled(old, squash) if t not in e}
    edges_ok = old_edges == labelled(new, lambda v: v)
    report = ContractionReport(s, x, y, z, v_x, v_y, v_z, nodes_ok, z_ok, parts_ok, edges_ok)
    return smaller, report


def refinement_map(coarse: TreeDecomposition, fine: TreeDecomposition):
    """Map each fine node to the coarse node it contracts into, or None.

    Fine edges whose induced separation is not induced by ``coarse`` are
    contracted; each remaining group of fine nodes must then match a coarse
    node by its outward-oriented separations, with equal part unions.
    """
    if coarse.graph != fine.graph:
        return None
    coarse_ind = _oriented_induced(coarse)
    fine_ind = _oriented_induced(fine)
    keep = set(coarse_ind) | {s.inverse() for s in coarse_ind}
    if len(keep) != 2 * len(coarse_ind):
        return None
    uf = _UnionFind(len(fine.parts))
    for (x, y), s in zip(fine.edges, fine_ind):
        if s not in keep:
            uf.union(x, y)
    labels = {}
    for (x, y), s in zip(fine.edges, fine_ind):
        if s in keep:
            labels.setdefault(uf.find(x), set()).add(s)
            labels.setdefault(uf.find(y), set()).add(s.inverse())
    c_labels = [set() for _ in coarse.parts]
    for (x, y), s in zip(coarse.edges, coarse_ind):
        c_labels[x].add(s)
        c_labels[y].add(s.inverse())
    by_label = {frozenset(lab): i for i, lab in enumerate(c_labels)}
    if len(by_label) != len(coarse.parts):
        return None
    roots = sorted({uf.find(i) for i in range(len(fine.parts))})
    if len(roots) != len(coarse.parts):
        return None
    target = {}
    for r in roots:
        i = by_label.get(frozenset(labels.get(r, ())))
        if i is None:
            return None
        target[r] = i
    mapping = tuple(target[uf.find(i)] for i in range(len(fine.parts)))
    for i, p in enumerate(coarse.parts):
        union = frozenset().union(*(fine.parts[j] for j in range(len(fine.parts)) if mapping[j] == i))
        if union != p:
            return None
    return mapping


def refines(coarse: TreeDecomposition, fine: TreeDecomposition) -> bool:
    return refinement_map(coarse, fine) is not None


def is_exceptional_hub(tree: StructureTree, i: int) -> bool:
    """Degree-2 hub pattern ``{(A,B), (C,D)}`` with ``B == C`` and ``D < A``."""
    x = list(tree.nodes[i])
    if len(x) != 2:
        return False
    for s, t in (x, x[::-1]):
        if s.b == t.a and t.b < s.a:
            return True
    return False
