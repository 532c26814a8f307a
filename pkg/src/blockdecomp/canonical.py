"""Canonical nested systems N_0 <= N_1 <= ... <= N_K and their tree-decompositions.

At stage k, the K-robust k-blocks that earlier stages left together inside a
common N_{k-1}-block b are told apart by extracting a nested subsystem from
the k-separations that separate two of them and are nested with N_{k-1}.
Nothing depends on vertex names, so relabelling the graph relabels the output.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .blocks import is_K_robust, k_blocks, kappa
from .extraction import extract_nested, separates_well
from .graph import Graph, components
from .separations import (
    Separation,
    SeparationSet,
    is_tight,
    nested,
    properly_separates,
    sorted_separations,
)
from .structure import NestedSystem, n_blocks, tree_decomposition

__all__ = [
    "SizeGuardError",
    "CanonicalAssertionError",
    "LevelRecord",
    "BlockRecord",
    "CanonicalSequence",
    "DEFAULT_MAX_N",
    "max_n",
    "all_k_separations",
    "canonical_systems",
    "canonical_tree_decompositions",
    "distinguishes",
    "distinguishes_efficiently",
]

DEFAULT_MAX_N = 16


class SizeGuardError(ValueError):
    pass


class CanonicalAssertionError(AssertionError):
    """A step of the construction failed a claim it relies on; ``witness`` has the details."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def max_n() -> int:
    raw = os.environ.get("BLOCKDECOMP_MAX_N")
    return int(raw) if raw else DEFAULT_MAX_N


def _guard(g: Graph, limit: int | None):
    limit = max_n() if limit is None else limit
    if g.n > limit:
        raise SizeGuardError(
            f"graph has {g.n} vertices; the limit is {limit} (set BLOCKDECOMP_MAX_N to raise it)"
        )


def all_k_separations(g: Graph, k: int) -> SeparationSet:
    """Every proper separation of order exactly k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out = []
    for sep in combinations(g.vertices, k):
        sep = frozenset(sep)
        comps = components(g, sep)
        c = len(comps)
        if c < 2:
            continue
        for mask in range(1, 2 ** c - 1):
            a = sep.union(*(comps[i] for i in range(c) if mask >> i & 1))
            b = sep.union(*(comps[i] for i in range(c) if not mask >> i & 1))
            out.append(Separation(a, b, g))
    return SeparationSet(g, out)


def distinguishes(system: Iterable[Separation], b1, b2) -> bool:
    b1, b2 = frozenset(b1), frozenset(b2)
    return any(properly_separates(s, b1, b2) for s in system)


def distinguishes_efficiently(g: Graph, n: Iterable[Separation], b1, b2) -> bool:
    k = kappa(g, b1, b2)
    b1, b2 = frozenset(b1), frozenset(b2)
    return any(s.order == k and properly_separates(s, b1, b2) for s in n)


@dataclass(frozen=True)
class BlockRecord:
    """One N_{k-1}-block b with its robust k-blocks, candidate system and extraction."""

    block: frozenset
    family: tuple
    candidates: SeparationSet
    extracted: NestedSystem


@dataclass(frozen=True)
class LevelRecord:
    k: int
    blocks: tuple  # all k-blocks
    robust: tuple  # the K-robust ones
    records: tuple  # BlockRecord per member of B


@dataclass(frozen=True)
class CanonicalSequence:
    host: Graph
    big_k: int
    systems: tuple
    levels: tuple

    @property
    def decompositions(self) -> list:
        return [tree_decomposition(n) for n in self.systems]

    def new_at(self, k: int) -> frozenset:
        prev = self.systems[k - 1].separations if k > 0 else frozenset()
        return self.systems[k].separations - prev


def _by_vertices(sets):
    return tuple(sorted(sets, key=lambda x: tuple(sorted(x))))


def _level(g: Graph, k: int, big_k: int, prev: NestedSystem, cache: dict):
    blocks = _by_vertices(b.vertices for b in k_blocks(g, k))
    robust = _by_vertices(b for b in blocks if is_K_robust(g, b, k, big_k))
    records = []
    if len(robust) < 2:
        return LevelRecord(k, blocks, robust, ()), frozenset()
    holders = [b for b in n_blocks(prev) if sum(r <= b for r in robust) >= 2]
    if not holders:
        return LevelRecord(k, blocks, robust, ()), frozenset()
    if k not in cache:
        cache[k] = list(all_k_separations(g, k))
    new = set()
    for b in holders:
        family = [r for r in robust if r <= b]
        for i1, i2 in combinations(family, 2):
            # robust blocks left together by N_{k-1} are exactly k apart
            if kappa(g, i1, i2) != k:
                raise CanonicalAssertionError(
                    f"kappa({sorted(i1)}, {sorted(i2)}) != {k}", witness=(k, i1, i2)
                )
        cands = [
            s for s in cache[k]
            if any(x <= s.a and y <= s.b for x in family for y in family if x != y)
            and all(nested(s, t) for t in prev)
        ]
        sb = SeparationSet(g, cands)
        for i1, i2 in combinations(family, 2):
            if not distinguishes(sb, i1, i2):
                raise CanonicalAssertionError(
                    f"no candidate separates {sorted(i1)} from {sorted(i2)}", witness=(k, b, i1, i2)
                )
        well = separates_well(sb, family)
        if not well:
            raise CanonicalAssertionError("candidates do not separate the blocks well", witness=well.witness)
        nb = extract_nested(sb, family)
        for s in nb:
            if not is_tight(s, g):
                raise CanonicalAssertionError(f"{s} is not tight", witness=s)
        records.append(BlockRecord(b, tuple(family), sb, nb))
        new |= nb.separations
    return LevelRecord(k, blocks, robust, tuple(records)), frozenset(new)


def canonical_systems(g: Graph, big_k: int, *, limit: int | None = None) -> CanonicalSequence:
    """N_0, ..., N_K for the graph ``g``; ``limit`` overrides the vertex-count guard."""
    if big_k < 0:
        raise ValueError("K must be non-negative")
    _guard(g, limit)
    prev = NestedSystem(g, ())
    systems, levels = [], []
    cache = {}
    for k in range(big_k + 1):
        record, new = _level(g, k, big_k, prev, cache)
        current = NestedSystem(g, prev.separations | new)
        for s in new:
            assert s.order == k
        systems.append(current)
        levels.append(record)
        prev = current
    return CanonicalSequence(g, big_k, tuple(systems), tuple(levels))


def canonical_tree_decompositions(g: Graph, big_k: int, *, limit: int | None = None) -> list:
    return canonical_systems(g, big_k, limit=limit).decompositions


def systems_as_lists(seq: CanonicalSequence) -> list:
    """Each N_k as a canonically sorted list, for comparison and output."""
    return [sorted_separations(n.separations) for n in seq.systems]
