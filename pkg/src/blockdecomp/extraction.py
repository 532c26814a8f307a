"""Extracting a nested subsystem that still tells a family of sets apart.

Given a separation system S and a family I of S-inseparable vertex sets, a
separation is I-relevant if it weakly separates two members of I. When S
separates I well, repeatedly taking the extremal relevant separations (and
their inverses) and discarding the members of I they cover yields a nested
system that weakly distinguishes everything S does. No choices are made, so
the result commutes with automorphisms.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .separations import (
    InvalidSystemError,
    Separation,
    SeparationSet,
    le,
    nested,
    separates,
    sorted_separations,
    weakly_separates,
)
from .structure import NestedSystem

__all__ = [
    "SeparationSet",
    "PreconditionError",
    "NotWellSeparatedError",
    "WellSeparation",
    "Layer",
    "relevant",
    "extremal_separations",
    "separates_well",
    "extract_layers",
    "extract_nested",
    "undistinguished_pairs",
]


class PreconditionError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotWellSeparatedError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def _family(i: Iterable[Iterable[int]]) -> list:
    return sorted({frozenset(x) for x in i}, key=lambda x: (len(x), tuple(sorted(x))))


def _check_inseparable(s: Iterable[Separation], family: list) -> None:
    for x in family:
        for sep in s:
            if separates(sep, x):
                raise PreconditionError(
                    f"{sorted(x)} is separated by {sep}", witness=(sep, x)
                )


def _is_relevant(sep: Separation, family: list) -> bool:
    return any(weakly_separates(sep, x, y) for x, y in combinations(family, 2))


def relevant(s: SeparationSet, i) -> SeparationSet:
    family = _family(i)
    _check_inseparable(s, family)
    return SeparationSet(s.graph, (sep for sep in s if _is_relevant(sep, family)))


def extremal_separations(r: Iterable[Separation]) -> frozenset:
    r = list(r)
    return frozenset(
        e for e in r if all(le(e, c) or le(e, c.inverse()) for c in r)
    )


@dataclass(frozen=True)
class WellSeparation:
    """Outcome of the separates-well test; ``witness`` is ``(ab, cd, i1, i2)`` on failure."""

    ok: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def separates_well(s: SeparationSet, i) -> WellSeparation:
    family = _family(i)
    seps = list(s)
    _check_inseparable(seps, family)
    for ab in seps:
        for cd in seps:
            if nested(ab, cd):
                continue
            ac, bd = ab.a & cd.a, ab.b & cd.b
            big = ab.b | cd.b
            lows = [x for x in family if x <= ac]
            highs = [x for x in family if x <= bd]
            for i1 in lows:
                for i2 in highs:
                    if not any(i1 <= ef.a <= ac and ef.b >= big for ef in seps):
                        return WellSeparation(False, (ab, cd, i1, i2))
    return WellSeparation(True)


@dataclass(frozen=True)
class Layer:
    """One step of the extraction: the family at that step and what it produced."""

    family: tuple
    relevant: frozenset
    extremal: frozenset
    closure: frozenset
    covered: tuple


def extract_layers(s: SeparationSet, i) -> list:
    """The layer-by-layer trace of the extraction (empty when nothing is distinguishable)."""
    family = _family(i)
    check = separates_well(s, family)
    if not check:
        ab, cd, i1, i2 = check.witness
        raise NotWellSeparatedError(
            f"crossing {ab} and {cd} leave {sorted(i1)} and {sorted(i2)} without a corner separation",
            witness=check.witness,
        )
    layers = []
    while True:
        r = [sep for sep in s if _is_relevant(sep, family)]
        if not r:
            break
        e = extremal_separations(r)
        assert e, "a non-empty relevant system without extremal separations"
        closure = e | {x.inverse() for x in e}
        covered = [x for x in family if any(x <= sep.a for sep in e)]
        assert covered, "extraction made no progress"
        layers.append(Layer(tuple(family), frozenset(r), e, frozenset(closure), tuple(covered)))
        rest = [x for x in family if x not in covered]
        assert len(rest) < len(family)
        family = rest
    return layers


def extract_nested(s: SeparationSet, i) -> NestedSystem:
    out = set()
    for layer in extract_layers(s, i):
        out |= layer.closure
    try:
        return NestedSystem(s.graph, out)
    except InvalidSystemError as exc:  # pragma: no cover - would contradict the theory
        raise AssertionError(f"extracted system is not nested: {exc}") from exc


def undistinguished_pairs(system: Iterable[Separation], i, reference=None) -> list:
    """Pairs of ``i`` weakly separated by ``reference`` (default: any pair) but not by ``system``."""
    family = _family(i)
    system = sorted_separations(system)
    out = []
    for x, y in combinations(family, 2):
        if reference is not None and not any(weakly_separates(r, x, y) for r in reference):
            continue
        if not any(weakly_separates(sep, x, y) for sep in system):
            out.append((x, y))
    return out
