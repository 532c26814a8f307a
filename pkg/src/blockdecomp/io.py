"""Reading graph files and writing JSON / DOT / text output.

Two input formats are accepted:

* edge list: a header line ``n m`` then ``m`` lines ``u v`` with 0-based ids;
* DIMACS style: ``p edge n m`` then ``e u v`` lines with 1-based ids.

Blank lines and lines starting with ``#`` or ``c`` are ignored in both.
"""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .graph import Graph, GraphError, build_graph
from .separations import Separation
from .structure import TreeDecomposition

__all__ = [
    "ParseError",
    "SCHEMA_VERSION",
    "parse_graph_text",
    "parse_graph_file",
    "format_edge_list",
    "separation_json",
    "decomposition_json",
    "decomposition_dot",
    "dumps",
    "load_schema",
]

SCHEMA_VERSION = 1


class ParseError(ValueError):
    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_graph_text(text: str) -> Graph:
    header = None
    dimacs = False
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.split()[0] == "c":
            continue
        tokens = line.split()
        if header is None:
            if tokens[0] == "p":
                if len(tokens) != 4 or tokens[1] != "edge":
                    raise ParseError("DIMACS header must read 'p edge <n> <m>'", lineno)
                header = _ints(tokens[2:], lineno)
                dimacs = True
            else:
                if len(tokens) != 2:
                    raise ParseError("header must read '<n> <m>'", lineno)
                header = _ints(tokens, lineno)
            if min(header) < 0:
                raise ParseError("counts must be non-negative", lineno)
            continue
        if dimacs:
            if tokens[0] != "e" or len(tokens) != 3:
                raise ParseError("edge lines must read 'e <u> <v>'", lineno)
            u, v = _ints(tokens[1:], lineno)
            u, v = u - 1, v - 1
        else:
            if len(tokens) != 2:
                raise ParseError("edge lines must read '<u> <v>'", lineno)
            u, v = _ints(tokens, lineno)
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            shown = (u + 1, v + 1) if dimacs else (u, v)
            raise ParseError(f"edge {shown} has an endpoint out of range", lineno)
        edges.append(((u, v), lineno))
    if header is None:
        raise ParseError("missing header line")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges but {len(edges)} were given")
    try:
        return build_graph(n, [e for e, _ in edges])
    except GraphError as exc:
        # the offending entry is the last one written exactly as reported
        line = next((ln for e, ln in reversed(edges) if e == exc.edge), None)
        raise ParseError(str(exc), line) from exc


def parse_graph_file(path) -> Graph:
    return parse_graph_text(Path(path).read_text())


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{g.n} {len(g.edges)}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def separation_json(s: Separation) -> dict:
    return {"a": sorted(s.a), "b": sorted(s.b), "order": s.order}


def decomposition_json(td: TreeDecomposition) -> dict:
    nodes = []
    for i, p in enumerate(td.parts):
        kind = td.kinds[i] if td.kinds else None
        nodes.append({
            "id": i,
            "part": sorted(p),
            "block": bool(kind.block) if kind else None,
            "hub": bool(kind.hub) if kind else None,
        })
    edges = []
    for j, (x, y) in enumerate(td.edges):
        entry = {
            "id": j,
            "endpoints": [x, y],
            "adhesion": sorted(td.parts[x] & td.parts[y]),
        }
        if td.separations:
            entry["separation"] = separation_json(td.separations[j])
        edges.append(entry)
    return {"nodes": nodes, "edges": edges, "adhesion": td.adhesion()}


def _shape(kind) -> str:
    if kind is None:
        return "ellipse"
    if kind.block and kind.hub:
        return "doubleoctagon"
    return "box" if kind.block else "circle"


def decomposition_dot(td: TreeDecomposition, name: str = "T") -> str:
    """DOT graph of the decomposition tree; blocks are boxes, hubs circles, both double octagons."""
    lines = [f"graph {name} {{"]
    for i, p in enumerate(td.parts):
        kind = td.kinds[i] if td.kinds else None
        label = " ".join(map(str, sorted(p)))
        lines.append(f'  n{i} [shape={_shape(kind)}, label="{label}"];')
    for x, y in td.edges:
        label = " ".join(map(str, sorted(td.parts[x] & td.parts[y])))
        lines.append(f'  n{x} -- n{y} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(payload: dict) -> str:
    return json.dumps({"schema": SCHEMA_VERSION, **payload}, indent=2) + "\n"


def load_schema() -> dict:
    """The JSON schema every ``dumps`` payload conforms to."""
    return json.loads((resources.files("blockdecomp") / "data" / "schema.json").read_text())
