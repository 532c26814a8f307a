"""Regenerate the seeded random-graph corpus shipped with the package.

50 graphs for each edge probability in {0.2, 0.4, 0.6}; the i-th graph of a
batch has 5 + i % 6 vertices and seed 1000 * batch + i.
"""
import sys
from pathlib import Path

from blockdecomp.families import random_graph
from blockdecomp.io import format_edge_list

PROBABILITIES = (0.2, 0.4, 0.6)
PER_BATCH = 50


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for batch, p in enumerate(PROBABILITIES):
        for i in range(PER_BATCH):
            n, seed = 5 + i % 6, 1000 * batch + i
            g = random_graph(n, p, seed)
            name = f"er_p{int(p * 10)}_{i:02d}_n{n:02d}.txt"
            (out / name).write_text(format_edge_list(g, f"random_graph(n={n}, p={p}, seed={seed})"))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/blockdecomp/data/corpus")
