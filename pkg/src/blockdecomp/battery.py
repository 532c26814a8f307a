"""Differential checks of the fast paths against the brute-force oracle."""
from __future__ import annotations

from importlib import resources
from itertools import combinations
from pathlib import Path

from . import oracle
from .blocks import is_K_robust, k_blocks, kappa
from .canonical import all_k_separations, canonical_systems
from .extraction import extract_nested
from .graph import Graph
from .io import parse_graph_file
from .oracle import OracleReport

__all__ = ["load_corpus", "corpus_dir", "check_graph", "run_battery"]


def corpus_dir() -> Path:
    return Path(str(resources.files("blockdecomp") / "data" / "corpus"))


def load_corpus(directory=None) -> list:
    """``(name, graph)`` for every ``*.txt`` file, sorted by name."""
    directory = Path(directory) if directory is not None else corpus_dir()
    files = sorted(directory.glob("*.txt"))
    return [(f.stem, parse_graph_file(f)) for f in files]


def _report(name, inst, mismatch):
    return OracleReport(name, inst, mismatch is None, mismatch)


def check_graph(name: str, g: Graph, max_k: int | None = None, samples: int = 3) -> list:
    """All oracle comparisons for one graph; one report per property."""
    max_k = g.n if max_k is None else max_k
    out = []

    fast = set()
    for k in range(max_k + 1):
        fast |= {(s.a, s.b) for s in all_k_separations(g, k)}
    brute = oracle.enumerate_all_separations(g, max_k)
    out.append(_report("separations", name, None if fast == brute else sorted(map(str, fast ^ brute))[:3]))

    bad_blocks = bad_kappa = bad_robust = None
    for k in range(max_k + 1):
        fb = [b.vertices for b in k_blocks(g, k)]
        if fb != oracle.brute_k_blocks(g, k) and bad_blocks is None:
            bad_blocks = k
        for b1, b2 in combinations(fb, 2):
            if kappa(g, b1, b2) != oracle.brute_kappa(g, b1, b2) and bad_kappa is None:
                bad_kappa = (k, sorted(b1), sorted(b2))
        for b in fb:
            for big_k in sorted({k, g.n}):
                if is_K_robust(g, b, k, big_k) != oracle.brute_is_K_robust(g, b, k, big_k)[0]:
                    bad_robust = bad_robust or (k, big_k, sorted(b))
    out.append(_report("k-blocks", name, None if bad_blocks is None else {"k": bad_blocks}))
    out.append(_report("kappa", name, bad_kappa))
    out.append(_report("robustness", name, bad_robust))

    seq = canonical_systems(g, max_k, limit=g.n)
    bad_extract = None
    for level in seq.levels:
        for rec in level.records:
            got = {(s.a, s.b) for s in extract_nested(rec.candidates, rec.family)}
            want = oracle.brute_extract_nested(((s.a, s.b) for s in rec.candidates), rec.family)
            if got != want and bad_extract is None:
                bad_extract = (level.k, sorted(rec.block))
    out.append(_report("extraction", name, bad_extract))

    for k, td in enumerate(seq.decompositions):
        rep = oracle.verify_td(g, td, k)
        out.append(OracleReport(f"tree-decomposition k={k}", name, rep.agree, rep.counterexample))

    def recompute(h):
        return [frozenset((s.a, s.b) for s in n) for n in canonical_systems(h, max_k, limit=h.n).systems]

    rep = oracle.verify_invariance(g, recompute, samples=samples, seed=g.n)
    out.append(OracleReport("canonicality", name, rep.agree, rep.counterexample))
    return out


def run_battery(graphs, max_k: int | None = None, samples: int = 3) -> list:
    reports = []
    for name, g in graphs:
        reports.extend(check_graph(name, g, max_k, samples))
    return reports
