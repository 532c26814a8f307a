"""Command-line front end: ``blockdecomp <command> GRAPH [options]``.

Exit status: 0 on success, 1 on bad input, 2 when the size guard refuses a
graph, 3 when ``verify`` finds a disagreement.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .blocks import beta, k_blocks, kappa_witness
from .canonical import SizeGuardError, canonical_systems
from .graph import GraphError
from .io import (
    ParseError,
    decomposition_dot,
    decomposition_json,
    dumps,
    parse_graph_file,
    separation_json,
)
from .structure import refinement_map

__all__ = ["RunConfig", "run", "main", "build_parser"]

UNGUARDED = 10 ** 9


@dataclass(frozen=True)
class RunConfig:
    command: str
    path: str | None = None
    k: int | None = None
    big_k: int | None = None
    b1: tuple = ()
    b2: tuple = ()
    fmt: str = "json"
    output: str | None = None
    no_size_guard: bool = False
    corpus: str | None = None


def _csv(text: str) -> tuple:
    try:
        return tuple(sorted({int(x) for x in text.split(",") if x.strip()}))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}") from None


def _count(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; exit status 2 is reserved for the size guard
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="blockdecomp", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("json", "text")):
        sp.add_argument("graph", help="edge-list or DIMACS graph file")
        sp.add_argument("--format", choices=formats, default="json")
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")
        sp.add_argument("--no-size-guard", action="store_true", help="ignore the vertex-count limit")

    sp = sub.add_parser("blocks", help="list the k-blocks")
    common(sp)
    sp.add_argument("-k", type=_count, required=True)
    sp = sub.add_parser("decompose", help="canonical tree-decomposition of adhesion at most k")
    common(sp, ("json", "dot", "text"))
    sp.add_argument("-k", type=_count, required=True)
    sp = sub.add_parser("sequence", help="the refining sequence of decompositions up to K")
    common(sp, ("json", "dot", "text"))
    sp.add_argument("-K", dest="big_k", type=_count, required=True)
    sp = sub.add_parser("kappa", help="least order of a separation properly separating two sets")
    common(sp)
    sp.add_argument("-b1", "--b1", type=_csv, required=True)
    sp.add_argument("-b2", "--b2", type=_csv, required=True)
    sp = sub.add_parser("beta", help="largest k with a k-block")
    common(sp)
    sp = sub.add_parser("verify", help="compare fast paths with the brute-force oracle")
    sp.add_argument("--corpus", help="directory of graph files (default: the shipped corpus)")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("-o", "--output")
    return p


def _config(ns) -> RunConfig:
    return RunConfig(
        command=ns.command,
        path=getattr(ns, "graph", None),
        k=getattr(ns, "k", None),
        big_k=getattr(ns, "big_k", None),
        b1=getattr(ns, "b1", ()),
        b2=getattr(ns, "b2", ()),
        fmt=ns.format,
        output=ns.output,
        no_size_guard=getattr(ns, "no_size_guard", False),
        corpus=getattr(ns, "corpus", None),
    )


def _lines(sets) -> str:
    return "".join(" ".join(map(str, sorted(s))) + "\n" for s in sets)


def _text_td(td) -> str:
    out = []
    for i, p in enumerate(td.parts):
        kind = td.kinds[i].label() if td.kinds else ""
        out.append(f"node {i} [{kind}]: {' '.join(map(str, sorted(p)))}")
    for x, y in td.edges:
        out.append(f"edge {x}-{y}: {' '.join(map(str, sorted(td.parts[x] & td.parts[y])))}")
    return "\n".join(out) + "\n"


def _render(cfg: RunConfig) -> tuple:
    """Return ``(exit_status, text)``."""
    if cfg.command == "verify":
        from .battery import load_corpus, run_battery

        reports = run_battery(load_corpus(cfg.corpus))
        failed = [r for r in reports if not r.agree]
        if cfg.fmt == "json":
            body = dumps({
                "command": "verify",
                "checked": len(reports),
                "failures": [{"name": r.name, "instance": r.instance, "counterexample": repr(r.counterexample)}
                             for r in failed],
            })
        else:
            body = "".join(r.line() + "\n" for r in failed)
            body += f"{len(reports) - len(failed)}/{len(reports)} checks agree\n"
        return (3 if failed else 0), body

    g = parse_graph_file(cfg.path)
    limit = UNGUARDED if cfg.no_size_guard else None

    if cfg.command == "blocks":
        blocks = [b.vertices for b in k_blocks(g, cfg.k)]
        if cfg.fmt == "text":
            return 0, _lines(blocks)
        return 0, dumps({"command": "blocks", "k": cfg.k, "blocks": [sorted(b) for b in blocks]})

    if cfg.command == "beta":
        value = beta(g)
        if cfg.fmt == "text":
            return 0, f"{value}\n"
        return 0, dumps({"command": "beta", "beta": value})

    if cfg.command == "kappa":
        size, witness = kappa_witness(g, cfg.b1, cfg.b2)
        if cfg.fmt == "text":
            return 0, f"{size}\n{witness}\n"
        return 0, dumps({"command": "kappa", "b1": list(cfg.b1), "b2": list(cfg.b2),
                         "kappa": size, "witness": separation_json(witness)})

    if cfg.command == "decompose":
        td = canonical_systems(g, cfg.k, limit=limit).decompositions[-1]
        if cfg.fmt == "dot":
            return 0, decomposition_dot(td)
        if cfg.fmt == "text":
            return 0, _text_td(td)
        return 0, dumps({"command": "decompose", "k": cfg.k, "decomposition": decomposition_json(td)})

    if cfg.command == "sequence":
        tds = canonical_systems(g, cfg.big_k, limit=limit).decompositions
        maps = [list(refinement_map(tds[k - 1], tds[k])) for k in range(1, len(tds))]
        if cfg.fmt == "dot":
            return 0, "".join(decomposition_dot(td, f"T{k}") for k, td in enumerate(tds))
        if cfg.fmt == "text":
            return 0, "".join(f"k={k}\n" + _text_td(td) for k, td in enumerate(tds))
        return 0, dumps({
            "command": "sequence",
            "K": cfg.big_k,
            "decompositions": [decomposition_json(td) for td in tds],
            "refinements": maps,
        })
    raise ValueError(f"unknown command {cfg.command!r}")


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        status, text = _render(cfg)
    except SizeGuardError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except (ParseError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        stdout.write(text)
    return status


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    return run(_config(ns))


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
