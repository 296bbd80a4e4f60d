"""Line-oriented edge-list file format.

::

    dhg n=5 mode=oriented
    # comment
    0 1 > 2
    1 3 > 0

Writers emit the header first and edges sorted by ``(a, b, c)``.
"""

from __future__ import annotations

import re
from pathlib import Path

from .core import DirectedHypergraph, Edge, GraphError

MODES = ("standard", "oriented")

_HEADER = re.compile(r"^dhg\s+n=(\d+)\s+mode=(\w+)\s*$")
_EDGE = re.compile(r"^(\d+)\s+(\d+)\s*>\s*(\d+)\s*$")


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def format_graph(graph: DirectedHypergraph, mode: str | None = None) -> str:
    """Serialize ``graph``; mode defaults to oriented when the graph is oriented."""
    if mode is None:
        mode = "oriented" if graph.is_oriented() else "standard"
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    lines = [f"dhg n={graph.n} mode={mode}"]
    lines += [f"{e.tail_lo} {e.tail_hi} > {e.head}" for e in graph.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> tuple[DirectedHypergraph, str]:
    """Parse the text format, returning the graph and its declared mode."""
    n = None
    mode = "standard"
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            m = _HEADER.match(line)
            if not m:
                raise ParseError(line_no, f"expected header 'dhg n=<n> mode=<mode>', got {raw!r}")
            n, mode = int(m.group(1)), m.group(2)
            if mode not in MODES:
                raise ParseError(line_no, f"unknown mode {mode!r}")
            continue
        m = _EDGE.match(line)
        if not m:
            raise ParseError(line_no, f"malformed edge line {raw!r}")
        a, b, c = (int(g) for g in m.groups())
        if max(a, b, c) >= n:
            raise ParseError(line_no, f"vertex id >= n={n}")
        if a >= b:
            raise ParseError(line_no, "tail must be written with a < b")
        try:
            e = Edge(a, b, c)
        except GraphError as exc:
            raise ParseError(line_no, str(exc)) from None
        if e in seen:
            raise ParseError(line_no, f"duplicate edge {a} {b} > {c}")
        seen.add(e)
        edges.append(e)
    if n is None:
        raise ParseError(1, "missing header")
    graph = DirectedHypergraph(n, frozenset(edges))
    if mode == "oriented" and not graph.is_oriented():
        raise ParseError(1, "mode=oriented but some triple carries more than one edge")
    return graph, mode


def read_graph(path: str | Path) -> tuple[DirectedHypergraph, str]:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(path: str | Path, graph: DirectedHypergraph, mode: str | None = None) -> None:
    Path(path).write_text(format_graph(graph, mode), encoding="utf-8")
