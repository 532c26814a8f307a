"""Separations of a graph and how pairs of them relate.

A separation is an ordered pair ``(A, B)`` of vertex sets with ``A | B = V``
and no edge between ``A - B`` and ``B - A``. Pairs of separations are
compared with ``(A, B) <= (C, D)  iff  A <= C and B >= D``.

Corners of the cross-diagram of ``(A, B)`` and ``(C, D)`` are named by the
two sides they come from, first separation first: ``"AC"``, ``"AD"``,
``"BC"``, ``"BD"``. ``"AC"`` and ``"BD"`` are opposite, as are ``"AD"`` and
``"BC"``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph

__all__ = [
    "Separation",
    "SeparationError",
    "CrossDiagram",
    "CORNERS",
    "make_separation",
    "is_proper",
    "is_tight",
    "le",
    "lt",
    "nested",
    "cross_diagram",
    "corner_separation",
    "separates",
    "weakly_separates",
    "properly_separates",
    "is_small",
    "sort_key",
    "sorted_separations",
    "transport",
    "SeparationSet",
    "InvalidSystemError",
]

CORNERS = ("AC", "AD", "BC", "BD")
OPPOSITE = {"AC": "BD", "BD": "AC", "AD": "BC", "BC": "AD"}


class SeparationError(ValueError):
    pass


@dataclass(frozen=True)
class Separation:
    a: frozenset
    b: frozenset
    host: Graph | None = field(default=None, compare=False, repr=False, hash=False)

    @property
    def separator(self) -> frozenset:
        return self.a & self.b

    @property
    def order(self) -> int:
        return len(self.a & self.b)

    def inverse(self) -> "Separation":
        return Separation(self.b, self.a, self.host)

    def key(self):
        return (self.order, tuple(sorted(self.a)), tuple(sorted(self.b)))

    def __lt__(self, other):
        return self.key() < other.key()

    def __str__(self):
        a = ",".join(map(str, sorted(self.a)))
        b = ",".join(map(str, sorted(self.b)))
        return f"({{{a}}}, {{{b}}})"


def sort_key(s: Separation):
    return s.key()


def sorted_separations(seps: Iterable[Separation]) -> list:
    """Canonical listing: by order, then sorted first side, then second."""
    return sorted(seps, key=sort_key)


def make_separation(g: Graph, a: Iterable[int], b: Iterable[int]) -> Separation:
    a, b = frozenset(a), frozenset(b)
    if a | b != g.vertex_set:
        missing = sorted(g.vertex_set - (a | b))
        raise SeparationError(f"sides do not cover the graph; missing {missing}")
    for u in a - b:
        for v in g.adj[u]:
            if v in b and v not in a:
                raise SeparationError(f"edge ({u}, {v}) crosses the separation")
    return Separation(a, b, g)


def is_proper(s: Separation) -> bool:
    return bool(s.a - s.b) and bool(s.b - s.a)


def is_tight(s: Separation, g: Graph | None = None) -> bool:
    """Every separator vertex has neighbours in both ``A - B`` and ``B - A``."""
    g = g if g is not None else s.host
    left, right = s.a - s.b, s.b - s.a
    return all(g.adj[v] & left and g.adj[v] & right for v in s.separator)


def le(s1: Separation, s2: Separation) -> bool:
    return s1.a <= s2.a and s1.b >= s2.b


def lt(s1: Separation, s2: Separation) -> bool:
    return s1 != s2 and le(s1, s2)


def nested(s1: Separation, s2: Separation) -> bool:
    inv = s2.inverse()
    return le(s1, s2) or le(s2, s1) or le(s1, inv) or le(inv, s1)


@dataclass(frozen=True)
class CrossDiagram:
    s1: Separation
    s2: Separation
    centre: frozenset
    corners: dict
    links: dict  # frozenset({corner, corner}) -> link set, adjacent corners only
    interiors: dict
    boundaries: dict

    def corner_links(self, name: str) -> list:
        return [v for k, v in self.links.items() if name in k]

    def is_nested(self) -> bool:
        """Empty-corner characterization: some corner lies inside the centre."""
        return any(self.corners[c] <= self.centre for c in CORNERS)


def cross_diagram(s1: Separation, s2: Separation) -> CrossDiagram:
    sides = {"A": s1.a, "B": s1.b, "C": s2.a, "D": s2.b}
    centre = s1.a & s1.b & s2.a & s2.b
    corners = {c: sides[c[0]] & sides[c[1]] for c in CORNERS}
    links = {}
    for c1 in CORNERS:
        for c2 in CORNERS:
            if c1 < c2 and OPPOSITE[c1] != c2:
                links[frozenset((c1, c2))] = (corners[c1] & corners[c2]) - centre
    interiors, boundaries = {}, {}
    for c in CORNERS:
        own = [v for k, v in links.items() if c in k]
        boundaries[c] = centre | own[0] | own[1]
        interiors[c] = corners[c] - boundaries[c]
    d = CrossDiagram(s1, s2, centre, corners, links, interiors, boundaries)
    # both characterizations of nestedness must agree
    assert d.is_nested() == nested(s1, s2)
    sep_union = s1.separator | s2.separator
    for c in CORNERS:
        assert boundaries[c] == corners[c] & sep_union
    return d


def corner_separation(d: CrossDiagram, which: str) -> Separation:
    """``(corner, union of the other three corners)``."""
    if which not in d.corners:
        raise KeyError(f"unknown corner {which!r}; expected one of {CORNERS}")
    rest = frozenset().union(*(d.corners[c] for c in CORNERS if c != which))
    return Separation(d.corners[which], rest, d.s1.host)


def separates(s: Separation, i: Iterable[int]) -> bool:
    i = frozenset(i)
    return bool(i & (s.a - s.b)) and bool(i & (s.b - s.a))


def weakly_separates(s: Separation, i0: Iterable[int], i1: Iterable[int]) -> bool:
    i0, i1 = frozenset(i0), frozenset(i1)
    return (i0 <= s.a and i1 <= s.b) or (i1 <= s.a and i0 <= s.b)


def properly_separates(s: Separation, i0: Iterable[int], i1: Iterable[int]) -> bool:
    i0, i1 = frozenset(i0), frozenset(i1)
    sep = s.separator
    return weakly_separates(s, i0, i1) and not i0 <= sep and not i1 <= sep


def is_small(x: Iterable[int], system: Iterable[Separation]) -> bool:
    x = frozenset(x)
    return any(x <= s.separator for s in system)


def transport(s: Separation, perm, host: Graph | None = None) -> Separation:
    """Image of ``s`` under the vertex map ``v -> perm[v]``."""
    return Separation(frozenset(perm[v] for v in s.a), frozenset(perm[v] for v in s.b), host)


class InvalidSystemError(ValueError):
    """A separation set violates its invariants; ``witness`` names the culprit."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SeparationSet:
    """A symmetric set of proper separations of one graph (not necessarily nested)."""

    def __init__(self, graph: Graph, separations: Iterable[Separation] = ()):
        self.graph = graph
        self.separations = frozenset(Separation(s.a, s.b, graph) for s in separations)
        self._check()

    def _check(self):
        for s in self.separations:
            if not is_proper(s):
                raise InvalidSystemError(f"improper separation {s}", witness=s)
            if s.inverse() not in self.separations:
                raise InvalidSystemError(f"inverse of {s} missing", witness=s)

    def __iter__(self):
        return iter(sorted_separations(self.separations))

    def __len__(self):
        return len(self.separations)

    def __contains__(self, s):
        return s in self.separations

    def __eq__(self, other):
        if isinstance(other, SeparationSet):
            return self.separations == other.separations
        return NotImplemented

    def __hash__(self):
        return hash(self.separations)

    def __repr__(self):
        return f"{type(self).__name__}({len(self)} separations)"

    def crossing_pair(self):
        """Some pair of crossing members, or None."""
        seps = list(self)
        for i, s in enumerate(seps):
            for t in seps[i + 1:]:
                if not nested(s, t):
                    return s, t
        return None

    def is_nested(self) -> bool:
        return self.crossing_pair() is None

    def transport(self, perm, graph: Graph):
        return type(self)(graph, (transport(s, perm, graph) for s in self.separations))
