"""k-inseparable sets, k-blocks, block rank/order, kappa and robustness.

A set X is k-inseparable if ``|X| > k`` and no set of at most k vertices
separates two vertices of X outside it. Because that condition only ever
looks at pairs, the k-blocks (maximal k-inseparable sets) are exactly the
maximal cliques of size > k in the relation "u, v are equal, adjacent, or
joined by at least k + 1 internally disjoint paths".
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable

from .graph import ContainmentError, Graph, _flow_value, _lex_least_cut, _max_flow, components, min_set_separator
from .separations import Separation, nested

__all__ = [
    "Block",
    "RobustnessWitness",
    "connectivity_matrix",
    "pairwise_inseparable",
    "is_k_inseparable",
    "is_k_block",
    "k_blocks",
    "all_blocks",
    "block_levels",
    "rank",
    "order_of_block",
    "beta",
    "kappa",
    "kappa_witness",
    "is_K_robust",
    "robustness_witness",
    "check_robustness_witness",
    "is_large",
]


@dataclass(frozen=True)
class Block:
    vertices: frozenset
    k: int
    rank: int
    order: int

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(sorted(self.vertices))


@lru_cache(maxsize=64)
def connectivity_matrix(g: Graph) -> tuple:
    """``m[u][v]``: disjoint u-v path count; None when u == v or uv is an edge."""
    m = [[None] * g.n for _ in range(g.n)]
    for u, v in combinations(g.vertices, 2):
        if not g.has_edge(u, v):
            c = _flow_value(g, [u], [v], uncuttable=frozenset((u, v)))
            m[u][v] = m[v][u] = c
    return tuple(tuple(row) for row in m)


def pairwise_inseparable(g: Graph, k: int, u: int, v: int) -> bool:
    c = connectivity_matrix(g)[u][v]
    return c is None or c >= k + 1


def is_k_inseparable(g: Graph, x: Iterable[int], k: int) -> bool:
    x = sorted(set(x))
    if len(x) <= k:
        return False
    m = connectivity_matrix(g)
    return all(m[u][v] is None or m[u][v] > k for u, v in combinations(x, 2))


def is_k_block(g: Graph, x: Iterable[int], k: int) -> bool:
    """k-inseparable and not extendable by any single vertex."""
    x = frozenset(x)
    if not is_k_inseparable(g, x, k):
        return False
    m = connectivity_matrix(g)
    for w in g.vertices:
        if w not in x and all(m[w][v] is None or m[w][v] > k for v in x):
            return False
    return True


def _maximal_cliques(n: int, nbrs: list) -> list:
    """Bron-Kerbosch with Tomita pivoting."""
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda w: (len(nbrs[w] & p), -w))
        for v in sorted(p - nbrs[pivot]):
            expand(r | {v}, p & nbrs[v], x & nbrs[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(n)), set())
    return out


def _block_vertex_sets(g: Graph, k: int) -> list:
    m = connectivity_matrix(g)
    nbrs = [
        {v for v in g.vertices if v != u and (m[u][v] is None or m[u][v] > k)}
        for u in g.vertices
    ]
    cliques = [c for c in _maximal_cliques(g.n, nbrs) if len(c) > k]
    return sorted(cliques, key=lambda c: tuple(sorted(c)))


def block_levels(g: Graph, b: Iterable[int]) -> list:
    """All k for which ``b`` is a k-block."""
    b = frozenset(b)
    return [k for k in range(len(b)) if is_k_block(g, b, k)]


def k_blocks(g: Graph, k: int) -> list:
    if k < 0:
        raise ValueError("k must be non-negative")
    out = []
    for vs in _block_vertex_sets(g, k):
        levels = block_levels(g, vs)
        out.append(Block(vs, k, levels[0], levels[-1]))
    return out


def all_blocks(g: Graph) -> list:
    """Every distinct vertex set that is a k-block for some k, with rank/order."""
    seen = {}
    for k in range(g.n):
        for b in k_blocks(g, k):
            seen.setdefault(b.vertices, Block(b.vertices, b.rank, b.rank, b.order))
    return sorted(seen.values(), key=lambda b: (b.rank, tuple(sorted(b.vertices))))


def rank(g: Graph, b: Iterable[int]) -> int:
    levels = block_levels(g, b)
    if not levels:
        raise ValueError(f"{sorted(b)} is not a k-block for any k")
    return levels[0]


def order_of_block(g: Graph, b: Iterable[int]) -> int:
    levels = block_levels(g, b)
    if not levels:
        raise ValueError(f"{sorted(b)} is not a k-block for any k")
    return levels[-1]


def beta(g: Graph) -> int:
    """Largest k such that g has a k-block; -1 for the graph on no vertices."""
    for k in range(g.n - 1, -1, -1):
        if _block_vertex_sets(g, k):
            return k
    return -1


# -- kappa ---------------------------------------------------------------------


def _separation_from_cut(g: Graph, cut: frozenset, side: frozenset) -> Separation:
    a = set(cut)
    b = set(cut)
    for comp in components(g, cut):
        (a if comp & side else b).update(comp)
    return Separation(frozenset(a), frozenset(b), g)


def kappa_witness(g: Graph, b1: Iterable[int], b2: Iterable[int]):
    """Least order of a separation properly separating b1 from b2, with one.

    The witness's separator is the lexicographically least one of that order.
    """
    b1, b2 = frozenset(b1), frozenset(b2)
    if b1 <= b2 or b2 <= b1:
        raise ContainmentError("sets are not distinguishable: one contains the other")
    size, cut = min_set_separator(g, b1, b2)
    if not (b1 <= cut or b2 <= cut):
        return size, _separation_from_cut(g, cut, b1)
    # Every minimum cut swallows one of the sets; keep one vertex of each
    # uncut and minimize over the choices.
    best = None
    for x1 in sorted(b1 - b2):
        for x2 in sorted(b2 - b1):
            if g.has_edge(x1, x2):
                continue
            keep = frozenset((x1, x2))
            val = _flow_value(g, b1, b2, uncuttable=keep)
            if val is None:
                continue
            c = _lex_least_cut(g, b1, b2, keep, val)
            cand = (val, tuple(sorted(c)))
            if best is None or cand < best:
                best = cand
    if best is None:
        raise ValueError("no separation properly separates these sets")
    return best[0], _separation_from_cut(g, frozenset(best[1]), b1)


def kappa(g: Graph, b1: Iterable[int], b2: Iterable[int]) -> int:
    return kappa_witness(g, b1, b2)[0]


# -- robustness ----------------------------------------------------------------


@dataclass(frozen=True)
class RobustnessWitness:
    """A k-separation ``cd`` with U inside its second side, crossed by ``ab``."""

    cd: Separation
    ab: Separation


def _boundary(corner: frozenset, s1: Separation, s2: Separation) -> frozenset:
    return corner & (s1.separator | s2.separator)


def check_robustness_witness(g: Graph, u: Iterable[int], k: int, big_k: int,
                             cd: Separation, ab: Separation) -> bool:
    """Whether ``(cd, ab)`` violates K-robustness of ``u`` by definition."""
    u = frozenset(u)
    if cd.order != k or not u <= cd.b or ab.order > big_k or nested(ab, cd):
        return False
    ad, bd = ab.a & cd.b, ab.b & cd.b
    if not (len(_boundary(ad, ab, cd)) < k > len(_boundary(bd, ab, cd))):
        return False
    return not (u <= ab.a or u <= ab.b)


def _candidate_separators(g: Graph, u: frozenset, k: int, slack: int):
    """k-sets S with ``|U - S| <= slack`` and at least two vertices of U."""
    outside = sorted(g.vertex_set - u)
    inside = sorted(u)
    lo = max(2, len(u) - slack)
    for p in range(lo, min(k, len(u)) + 1):
        if k - p > len(outside):
            continue
        for pp in combinations(inside, p):
            for qq in combinations(outside, k - p):
                yield frozenset(pp) | frozenset(qq)


def robustness_witness(g: Graph, u: Iterable[int], k: int, big_k: int):
    """First witness against K-robustness of the k-inseparable set ``u``, or None.

    A violation needs two vertices of U on strictly opposite sides of (A, B),
    both inside C & D, and all of U - (C & D) inside A & B. The two corner
    boundaries below k then force ``2 * |(A & B) - C| <= k - 2``. So the search
    runs over few separators C & D, the small part of A & B beyond C, and a
    three-way split of C & D; the rest of A & B is a minimum vertex cut.
    """
    u = frozenset(u)
    if not is_k_inseparable(g, u, k):
        raise ValueError(f"{sorted(u)} is not {k}-inseparable")
    slack = (k - 2) // 2
    if slack < 0:
        return None
    for sep in sorted(_candidate_separators(g, u, k, slack), key=lambda s: tuple(sorted(s))):
        comps = components(g, sep)
        forced = [c for c in comps if c & u]
        free = [c for c in comps if not c & u]
        core = frozenset().union(*forced) if forced else frozenset()
        cds = []
        for mask in range(1, 2 ** len(free)):
            c_side = frozenset().union(*(free[i] for i in range(len(free)) if mask >> i & 1))
            d_side = core.union(*(free[i] for i in range(len(free)) if not mask >> i & 1))
            if not d_side:
                continue
            cds.append(Separation(c_side | sep, d_side | sep, g))
        for cd in sorted(cds, key=lambda s: s.key()):
            w = _witness_for(g, u, k, big_k, cd, slack)
            if w is not None:
                return w
    return None


def _witness_for(g, u, k, big_k, cd, slack):
    sep = cd.separator
    d_strict = cd.b - cd.a
    must = u - sep
    optional = sorted(d_strict - must)
    sep_list = sorted(sep)
    for extra in range(0, slack - len(must) + 1):
        for more in combinations(optional, extra):
            x_d = must | frozenset(more)
            ell = len(x_d)
            for colours in product((0, 1, 2), repeat=len(sep_list)):
                sa = frozenset(v for v, c in zip(sep_list, colours) if c == 0)
                sb = frozenset(v for v, c in zip(sep_list, colours) if c == 1)
                sc = frozenset(v for v, c in zip(sep_list, colours) if c == 2)
                if not (sa & u and sb & u):
                    continue
                if ell + len(sa) + len(sc) >= k or ell + len(sb) + len(sc) >= k:
                    continue
                if ell + len(sc) > big_k:
                    continue
                removed = x_d | sc
                keep = (d_strict - x_d) | sa | sb
                val, reach = _max_flow(g, sa, sb, uncuttable=keep, removed=removed)
                if val is None or ell + len(sc) + val > big_k:
                    continue
                x_c = frozenset(v for v in g.vertices if 2 * v in reach and 2 * v + 1 not in reach)
                ab = _separation_from_cut(g, removed | x_c, sa)
                assert check_robustness_witness(g, u, k, big_k, cd, ab)
                return RobustnessWitness(cd, ab)
    return None


def is_K_robust(g: Graph, u: Iterable[int], k: int, big_k: int) -> bool:
    return robustness_witness(g, u, k, big_k) is None


def is_large(b: Iterable[int], k: int) -> bool:
    return len(frozenset(b)) >= (3 * k) // 2
