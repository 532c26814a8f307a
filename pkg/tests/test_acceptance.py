"""Acceptance criteria, one test each; every test records a PASS/FAIL line.

The lines are printed in the terminal summary of the pytest run (see
conftest.py) and also directly when run with ``-s``.
"""
import time
from itertools import combinations

import pytest

from blockdecomp.battery import run_battery
from blockdecomp.blocks import check_robustness_witness, is_k_block, k_blocks, kappa, robustness_witness
from blockdecomp.canonical import canonical_systems
from blockdecomp.extraction import extract_nested, separates_well, undistinguished_pairs
from blockdecomp.families import cycle_graph, grid_graph, mixed_order_example
from blockdecomp.graph import min_set_separator
from blockdecomp.oracle import verify_invariance
from blockdecomp.separations import SeparationSet, make_separation, nested, properly_separates, weakly_separates
from blockdecomp.structure import NestedSystem
from properties import robust_blocks, structure_violations, fixed_order_violations, sequence_violations

RESULTS = {}


def record(number, title, ok, elapsed, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({elapsed:.2f}s){': ' + detail if detail else ''}"
    RESULTS[number] = line
    print(line)
    return ok


def census(g, upto):
    return [sorted(len(b.vertices) for b in k_blocks(g, k)) for k in range(upto)]


def test_criterion_1_block_census():
    start = time.perf_counter()
    c10 = cycle_graph(10)
    grid = grid_graph(5, 5)
    got_c10 = census(c10, 10)
    got_grid = census(grid, 8)
    blocks2 = sorted((b.vertices for b in k_blocks(grid, 2)), key=len)
    corners = {0, 4, 20, 24}
    corner_ok = all(len(b) == 3 and len(b & corners) == 1 for b in blocks2[:4])
    big_ok = blocks2[4] == frozenset(range(25)) - corners
    inner = frozenset(5 * r + c for r in range(1, 4) for c in range(1, 4))
    inner_ok = [b.vertices for b in k_blocks(grid, 3)] == [inner]
    elapsed = time.perf_counter() - start
    ok = (
        got_c10 == [[10], [10]] + [[]] * 8
        and got_grid == [[25], [25], [3, 3, 3, 3, 21], [9], [], [], [], []]
        and corner_ok and big_ok and inner_ok
        and elapsed < 5
    )
    record(1, "block census of C10 and the 5x5 grid", ok, elapsed, "" if ok else f"{got_c10} {got_grid}")
    assert ok


def test_criterion_2_grid_corners():
    start = time.perf_counter()
    g = grid_graph(3, 3)
    horizontal = make_separation(g, {0, 1, 2, 3, 4, 5}, {3, 4, 5, 6, 7, 8})
    vertical = make_separation(g, {0, 1, 3, 4, 6, 7}, {1, 2, 4, 5, 7, 8})
    corners = [frozenset(c) for c in ({0, 1, 3, 4}, {1, 2, 4, 5}, {3, 4, 6, 7}, {4, 5, 7, 8})]
    axes = [horizontal, vertical]
    s = SeparationSet(g, axes + [x.inverse() for x in axes])
    before = separates_well(s, corners)
    # corner c against everything but its corner vertex
    extra = [make_separation(g, c, (frozenset(range(9)) - c) | (c - {0, 2, 6, 8})) for c in corners]
    richer = SeparationSet(g, list(s) + extra + [x.inverse() for x in extra])
    after = separates_well(richer, corners)
    n = extract_nested(richer, corners)
    # all 6 corner pairs weakly distinguished
    pairs = list(combinations(corners, 2))
    pairs_ok = len(pairs) == 6 and all(any(weakly_separates(x, c1, c2) for x in n) for c1, c2 in pairs)
    pairs_ok = pairs_ok and undistinguished_pairs(n, corners) == []
    elapsed = time.perf_counter() - start
    ok = (not before) and bool(after) and n.is_nested() and pairs_ok and elapsed < 1
    record(2, "3x3 grid: axis separations fail, corner separations succeed", ok, elapsed)
    assert ok


def test_criterion_3_mixed_order_example():
    start = time.perf_counter()
    k = 4
    g, parts = mixed_order_example(k)
    T, L, R, M, X, Y = (parts[c] for c in "TLRMXY")
    small = T | L | R
    big = L | R | M | X | Y
    five_left, five_right = L | X | M, R | Y | M
    checks = {}
    # (a) a k-block of size 3k/2 - 1 beside a second k-block
    checks["a"] = is_k_block(g, small, k) and len(small) == 3 * k // 2 - 1 and is_k_block(g, big, k)
    checks["a'"] = is_k_block(g, five_left, k + 1) and is_k_block(g, five_right, k + 1)
    # (b) not (k+1)-robust, witnessed by the horizontal / vertical pair
    w = robustness_witness(g, small, k, k + 1)
    checks["b"] = (
        w is not None
        and check_robustness_witness(g, small, k, k + 1, w.cd, w.ab)
        and w.cd.separator == L | R and w.ab.separator == T | M
    )
    horizontal = make_separation(g, small, big)
    vertical = make_separation(g, T | L | X | M, T | R | Y | M)
    checks["order"] = horizontal.order == k and vertical.order == k + 1
    # the least separator between the two k-blocks is L u R
    checks["kappa"] = kappa(g, small, big) == k and min_set_separator(g, small, big)[1] == L | R
    # (c) they cross
    checks["c"] = not nested(horizontal, vertical)

    # (d) no nested subset separates both pairs
    def both(system):
        return (any(properly_separates(s, small, big) or properly_separates(s, big, small) for s in system)
                and any(properly_separates(s, five_left, five_right) or properly_separates(s, five_right, five_left)
                        for s in system))

    pool = [horizontal, vertical]
    subsets = [[], [horizontal], [vertical], pool]
    checks["d"] = all(not both(sub) for sub in subsets if all(nested(x, y) for x, y in combinations(sub, 2)))
    checks["d'"] = both(pool)  # only the crossing pair does both jobs
    elapsed = time.perf_counter() - start
    ok = all(checks.values()) and elapsed < 60
    failed = ", ".join(name for name, v in checks.items() if not v)
    record(3, f"mixed-order example at k={k} (n={g.n})", ok, elapsed, failed)
    assert ok


def test_criterion_4_fixed_order_decompositions(corpus):
    start = time.perf_counter()
    bad = []
    for name, g in corpus:
        assert g.n <= 10
        for k in range(4):
            for v in fixed_order_violations(g, k):
                bad.append((name, k, v))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 600
    record(4, f"adhesion-k decompositions on {len(corpus)} corpus graphs, k<=3", ok, elapsed, str(bad[:3]) if bad else "")
    assert ok, bad[:5]


def test_criterion_5_refining_sequences(corpus):
    start = time.perf_counter()
    bad = []
    pairs = 0
    for name, g in corpus:
        for v in sequence_violations(g, check_oracle=True):
            bad.append((name, v))
        blocks = robust_blocks(g, g.n)
        pairs += sum(1 for x, y in combinations(blocks, 2) if not (x <= y or y <= x))
    elapsed = time.perf_counter() - start
    ok = not bad and pairs > 0
    record(5, f"refining sequences at K=|V| on {len(corpus)} graphs, {pairs} robust block pairs", ok, elapsed, str(bad[:3]) if bad else "")
    assert ok, bad[:5]


def test_criterion_6_equivariance(corpus):
    start = time.perf_counter()

    def recompute(h):
        return [frozenset((s.a, s.b) for s in n) for n in canonical_systems(h, h.n, limit=h.n).systems]

    bad = []
    for i, (name, g) in enumerate(corpus):
        rep = verify_invariance(g, recompute, samples=20, seed=i, name="canonical_systems")
        if not rep.agree:
            bad.append((name, rep.counterexample))
    elapsed = time.perf_counter() - start
    ok = not bad
    record(6, f"equivariance under Aut and 20 relabellings on {len(corpus)} graphs", ok, elapsed, str(bad[:3]) if bad else "")
    assert ok, bad[:5]


def greedy_nested(g, seed):
    import random

    from blockdecomp.canonical import all_k_separations

    pool = [s for k in range(4) for s in all_k_separations(g, k) if s.key() < s.inverse().key()]
    random.Random(seed).shuffle(pool)
    chosen = []
    for s in pool:
        if all(nested(s, t) for t in chosen):
            chosen.append(s)
    return NestedSystem(g, chosen + [s.inverse() for s in chosen])


def test_criterion_7_structure_properties(corpus):
    start = time.perf_counter()
    bad = []
    checked = 0
    for i, (name, g) in enumerate(corpus):
        systems = list(canonical_systems(g, g.n, limit=g.n).systems) + [greedy_nested(g, i)]
        for n in systems:
            checked += 1
            for v in structure_violations(n):
                bad.append((name, v))
    elapsed = time.perf_counter() - start
    ok = not bad
    record(7, f"structure-tree properties on {checked} nested systems", ok, elapsed, str(bad[:3]) if bad else "")
    assert ok, bad[:5]


def test_criterion_8_oracle_agreement(corpus):
    start = time.perf_counter()
    reports = run_battery(corpus)
    failed = [r for r in reports if not r.agree]
    elapsed = time.perf_counter() - start
    ok = not failed
    record(8, f"oracle agreement, {len(reports)} checks", ok, elapsed, "; ".join(r.line() for r in failed[:3]))
    assert ok


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
