"""Brute-force reference implementations, straight from the definitions.

Nothing here imports the fast paths; vertex sets are bitmasks and
separations are ``(a, b)`` pairs of frozensets. Every routine refuses graphs
above its size guard instead of truncating.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Any, Callable, Iterable

import numpy as np

from .graph import Graph, automorphisms

__all__ = [
    "OracleReport",
    "OracleSizeError",
    "enumerate_all_separations",
    "brute_k_blocks",
    "brute_kappa",
    "brute_min_vertex_cut",
    "brute_is_K_robust",
    "brute_extract_nested",
    "verify_td",
    "verify_invariance",
    "act",
]


class OracleSizeError(ValueError):
    pass


@dataclass(frozen=True)
class OracleReport:
    name: str
    instance: str
    agree: bool
    counterexample: Any = field(default=None)

    def __post_init__(self):
        if self.agree != (self.counterexample is None):
            raise ValueError("a report carries a counterexample exactly when it disagrees")

    def line(self) -> str:
        status = "ok" if self.agree else "FAIL"
        tail = "" if self.agree else f": {self.counterexample}"
        return f"{status} {self.name} [{self.instance}]{tail}"


def _guard(g: Graph, limit: int):
    if g.n > limit:
        raise OracleSizeError(f"oracle limited to {limit} vertices, got {g.n}")


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _set(m: int) -> frozenset:
    return frozenset(v for v in range(m.bit_length()) if m >> v & 1)


def _adj_masks(g: Graph) -> list:
    return [_mask(g.adj[v]) for v in g.vertices]


def _component_masks(adj: list, alive: int) -> list:
    out = []
    rest = alive
    while rest:
        low = rest & -rest
        comp, frontier = low, low
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[v] & alive & ~comp
            comp |= new
            frontier |= new
        out.append(comp)
        rest &= ~comp
    return out


# -- separations ---------------------------------------------------------------


@lru_cache(maxsize=32)
def _all_separation_masks(g: Graph):
    """Every separation ``(A, B)``, proper or not, as parallel int64 bitmask arrays.

    For each separator X, the side ``A - X`` ranges over all subsets of the
    remaining vertices with no edge leaving it inside ``G - X``.
    """
    _guard(g, 14)
    n = g.n
    full = (1 << n) - 1
    a_out, b_out = [], []
    for xm in range(full + 1):
        rest = [v for v in range(n) if not xm >> v & 1]
        r = len(rest)
        codes = np.arange(1 << r, dtype=np.int64)
        ok = np.ones(1 << r, dtype=bool)
        pos = {v: i for i, v in enumerate(rest)}
        for u, v in g.edges:
            if u in pos and v in pos:
                ok &= ((codes >> pos[u]) & 1) == ((codes >> pos[v]) & 1)
        side = np.zeros(1 << r, dtype=np.int64)
        for v, i in pos.items():
            side |= ((codes >> i) & 1) << v
        side = side[ok]
        other = (full & ~xm) ^ side
        a_out.append(side | xm)
        b_out.append(other | xm)
    a = np.concatenate(a_out).astype(np.int64)
    b = np.concatenate(b_out).astype(np.int64)
    return a, b


def _order(a, b):
    return np.bitwise_count(a & b).astype(np.int64)


def enumerate_all_separations(g: Graph, max_order: int) -> frozenset:
    """All proper separations of order at most ``max_order`` as ``(A, B)`` pairs."""
    _guard(g, 14)
    a, b = _all_separation_masks(g)
    keep = (_order(a, b) <= max_order) & ((a & ~b) != 0) & ((b & ~a) != 0)
    return frozenset((_set(int(x)), _set(int(y))) for x, y in zip(a[keep], b[keep]))


# -- blocks --------------------------------------------------------------------


def _inseparable_table(g: Graph, k: int) -> np.ndarray:
    """``good[X]``: no set of at most k vertices separates two vertices of X - S."""
    n = g.n
    adj = _adj_masks(g)
    full = (1 << n) - 1
    xs = np.arange(1 << n, dtype=np.int64)
    good = np.ones(1 << n, dtype=bool)
    for size in range(k + 1):
        for s in combinations(range(n), size):
            sm = _mask(s)
            touched = np.zeros(1 << n, dtype=np.int64)
            for comp in _component_masks(adj, full & ~sm):
                touched += (xs & comp) != 0
            good &= touched <= 1
    good &= np.bitwise_count(xs) > k
    return good


def brute_k_blocks(g: Graph, k: int) -> list:
    """Maximal sets of more than k vertices that no set of at most k vertices separates."""
    _guard(g, 12)
    good = _inseparable_table(g, k)
    out = []
    for x in np.flatnonzero(good):
        x = int(x)
        # goodness is inherited by subsets of size > k, so one-vertex growth decides maximality
        if not any(good[x | 1 << v] for v in range(g.n) if not x >> v & 1):
            out.append(_set(x))
    return sorted(out, key=lambda s: tuple(sorted(s)))


def _splits(adj, full, sm, m1, m2) -> bool:
    """Some separation with separator S puts m1 - S and m2 - S on strictly opposite sides."""
    r1, r2 = m1 & ~sm, m2 & ~sm
    if not r1 or not r2:
        return False
    for comp in _component_masks(adj, full & ~sm):
        if comp & r1 and comp & r2:
            return False
    return True


def brute_kappa(g: Graph, b1, b2) -> int:
    _guard(g, 12)
    adj = _adj_masks(g)
    full = (1 << g.n) - 1
    m1, m2 = _mask(b1), _mask(b2)
    for size in range(g.n + 1):
        for s in combinations(range(g.n), size):
            if _splits(adj, full, _mask(s), m1, m2):
                return size
    raise ValueError("no separation properly separates these sets")


def brute_min_vertex_cut(g: Graph, u: int, v: int) -> int:
    _guard(g, 12)
    if u == v or v in g.adj[u]:
        raise ValueError("equal or adjacent vertices have no cut")
    adj = _adj_masks(g)
    full = (1 << g.n) - 1
    others = [w for w in g.vertices if w not in (u, v)]
    for size in range(len(others) + 1):
        for s in combinations(others, size):
            if _splits(adj, full, _mask(s), 1 << u, 1 << v):
                return size
    raise AssertionError("unreachable: removing everything else separates u from v")


def brute_is_K_robust(g: Graph, u, k: int, big_k: int):
    """``(True, None)`` or ``(False, ((C, D), (A, B)))`` by the unpruned definition."""
    _guard(g, 11)
    um = _mask(u)
    a, b = _all_separation_masks(g)
    order = _order(a, b)
    cds = np.flatnonzero((order == k) & ((um & ~b) == 0))
    abm = order <= big_k
    a2, b2 = a[abm], b[abm]
    for i in cds:
        c, d = int(a[i]), int(b[i])
        sep_cd = c & d
        crossing = ~(
            (((a2 & ~c) == 0) & ((d & ~b2) == 0))
            | (((c & ~a2) == 0) & ((b2 & ~d) == 0))
            | (((a2 & ~d) == 0) & ((c & ~b2) == 0))
            | (((d & ~a2) == 0) & ((b2 & ~c) == 0))
        )
        seps = (a2 & b2) | sep_cd
        bd_ad = np.bitwise_count(a2 & d & seps)
        bd_bd = np.bitwise_count(b2 & d & seps)
        bad = crossing & (bd_ad < k) & (bd_bd < k) & ((um & ~a2) != 0) & ((um & ~b2) != 0)
        hit = np.flatnonzero(bad)
        if hit.size:
            j = hit[0]
            return False, ((_set(c), _set(d)), (_set(int(a2[j])), _set(int(b2[j]))))
    return True, None


# -- extraction ----------------------------------------------------------------


def _le(s, t) -> bool:
    return s[0] & ~t[0] == 0 and t[1] & ~s[1] == 0


def brute_extract_nested(separations: Iterable[tuple], family: Iterable[Iterable[int]]) -> frozenset:
    """The recursive extraction, rewritten over bitmask pairs."""
    seps = sorted({(_mask(a), _mask(b)) for a, b in separations})
    fam = sorted({_mask(x) for x in family})

    def weak(s, x, y):
        return (x & ~s[0] == 0 and y & ~s[1] == 0) or (y & ~s[0] == 0 and x & ~s[1] == 0)

    out = set()
    while True:
        rel = [s for s in seps if any(weak(s, x, y) for x, y in combinations(fam, 2))]
        if not rel:
            break
        ext = [e for e in rel if all(_le(e, c) or _le(e, (c[1], c[0])) for c in rel)]
        if not ext:
            raise AssertionError("relevant separations with no extremal member")
        out.update(ext)
        out.update((e[1], e[0]) for e in ext)
        fam2 = [x for x in fam if not any(x & ~e[0] == 0 for e in ext)]
        if len(fam2) == len(fam):
            raise AssertionError("extraction made no progress")
        fam = fam2
    return frozenset((_set(a), _set(b)) for a, b in out)


# -- tree-decompositions -------------------------------------------------------


def verify_td(g: Graph, td, max_adhesion: int) -> OracleReport:
    """Check a tree-decomposition given as ``td.parts`` and ``td.edges``."""
    parts = [frozenset(p) for p in td.parts]
    edges = [tuple(e) for e in td.edges]
    name = "tree-decomposition"
    inst = f"n={g.n}, {len(parts)} parts"

    def fail(why):
        return OracleReport(name, inst, False, why)

    nbrs = {i: set() for i in range(len(parts))}
    for x, y in edges:
        nbrs[x].add(y)
        nbrs[y].add(x)
    if len(edges) != len(parts) - 1:
        return fail(f"{len(parts)} nodes but {len(edges)} edges")
    seen, stack = {0}, [0]
    while stack:
        for y in nbrs[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != len(parts):
        return fail("decomposition tree is disconnected")
    union = frozenset().union(*parts)
    if union != g.vertex_set:
        return fail(("T1", sorted(g.vertex_set - union)))
    for u, v in g.edges:
        if not any(u in p and v in p for p in parts):
            return fail(("T2", (u, v)))
    for v in g.vertices:
        holders = {i for i, p in enumerate(parts) if v in p}
        start = min(holders)
        reach, stack = {start}, [start]
        while stack:
            for y in nbrs[stack.pop()]:
                if y in holders and y not in reach:
                    reach.add(y)
                    stack.append(y)
        if reach != holders:
            return fail(("T3", v))
    for j, (x, y) in enumerate(edges):
        adhesion = parts[x] & parts[y]
        if len(adhesion) > max_adhesion:
            return fail(("adhesion", j, sorted(adhesion)))
        side, stack = {x}, [x]
        while stack:
            z0 = stack.pop()
            for z in nbrs[z0]:
                if z not in side and {z0, z} != {x, y}:
                    side.add(z)
                    stack.append(z)
        a = frozenset().union(*(parts[i] for i in side))
        b = frozenset().union(*(parts[i] for i in range(len(parts)) if i not in side))
        if a & b != adhesion:
            return fail(("induced separator", j, sorted(a & b), sorted(adhesion)))
        for u, v in g.edges:
            if (u in a - b and v in b - a) or (v in a - b and u in b - a):
                return fail(("induced separation has a crossing edge", j, (u, v)))
    return OracleReport(name, inst, True)


# -- invariance ----------------------------------------------------------------


def act(value, perm):
    """Apply a vertex map to a value built from ints, frozensets, tuples and lists."""
    if isinstance(value, (bool, np.bool_)):
        return value
    if isinstance(value, (int, np.integer)):
        return perm[int(value)]
    if isinstance(value, frozenset):
        return frozenset(act(x, perm) for x in value)
    if isinstance(value, set):
        return {act(x, perm) for x in value}
    if isinstance(value, tuple):
        return tuple(act(x, perm) for x in value)
    if isinstance(value, list):
        return [act(x, perm) for x in value]
    if value is None:
        return None
    raise TypeError(f"cannot transport a {type(value).__name__}")


def verify_invariance(g: Graph, recompute: Callable[[Graph], Any], samples: int = 20,
                      seed: int = 0, group=None, name: str = "invariance") -> OracleReport:
    """``recompute(g^pi) == recompute(g)^pi`` for all automorphisms and random relabellings.

    ``recompute`` must return a value made of vertex ids inside frozensets,
    tuples and lists; positions in lists and tuples are compared as given.
    """
    base = recompute(g)
    group = automorphisms(g) if group is None else group
    for alpha in group:
        if act(base, alpha) != base:
            return OracleReport(name, f"n={g.n}, automorphism", False, ("automorphism", tuple(alpha)))
    rng = random.Random(seed)
    for _ in range(samples):
        perm = list(range(g.n))
        rng.shuffle(perm)
        perm = tuple(perm)
        if recompute(g.relabel(perm)) != act(base, perm):
            return OracleReport(name, f"n={g.n}, relabelling", False, ("relabelling", perm))
    return OracleReport(name, f"n={g.n}, |Aut|={len(group)}, {samples} relabellings", True)
