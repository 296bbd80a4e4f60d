"""3-uniform hypergraphs in which no two edges share exactly one vertex.

Such hypergraphs bound the multiedge triples of an H1-free graph.  Their
components are K4 (all four triples on four vertices), K4 minus one triple,
or sunflowers whose edges all contain one common pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class Component:
    kind: str  # "K4", "K4_minus", "sunflower" or "other"
    edges: tuple[Triple, ...]

    @property
    def label(self) -> str:
        return f"sunflower({len(self.edges)})" if self.kind == "sunflower" else self.kind


@dataclass(frozen=True)
class StructureReport:
    valid: bool
    components: tuple[Component, ...]
    max_edges_bound: int

    @property
    def decomposes(self) -> bool:
        return all(c.kind != "other" for c in self.components)


def edge_bound(n: int) -> int:
    """Largest edge count allowed for ``n`` vertices."""
    r = n % 4
    if r == 0:
        return n
    if r == 1:
        return n - 1
    return max(n - 2, 0)


def _normalize(edges: Iterable[Iterable[int]], n: int) -> list[Triple]:
    out = set()
    for e in edges:
        t = tuple(sorted(e))
        if len(t) != 3 or len(set(t)) != 3 or not all(0 <= v < n for v in t):
            raise ValueError(f"bad hyperedge {e!r} for n={n}")
        out.add(t)
    return sorted(out)


def _classify(edges: list[Triple]) -> str:
    verts = set().union(*map(set, edges))
    if len(edges) == 4 and len(verts) == 4:
        return "K4"
    if len(edges) == 3 and len(verts) == 4:
        return "K4_minus"
    if len(set.intersection(*map(set, edges))) >= 2:
        return "sunflower"
    return "other"


def _components(edges: list[Triple]) -> list[list[Triple]]:
    parent = list(range(len(edges)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in combinations(range(len(edges)), 2):
        if set(edges[i]) & set(edges[j]):
            parent[find(i)] = find(j)
    groups: dict[int, list[Triple]] = {}
    for i, e in enumerate(edges):
        groups.setdefault(find(i), []).append(e)
    return sorted(groups.values())


def check_intersection_structure(edges: Iterable[Iterable[int]], n: int) -> StructureReport:
    u = _normalize(edges, n)
    valid = all(len(set(s) & set(t)) != 1 for s, t in combinations(u, 2))
    comps = tuple(Component(_classify(c), tuple(c)) for c in _components(u)) if valid else ()
    return StructureReport(valid, comps, edge_bound(n))


@dataclass(frozen=True)
class LemmaCheck:
    n: int
    hypergraphs: int
    max_edges: int
    bound: int
    all_decompose: bool

    @property
    def holds(self) -> bool:
        return self.max_edges == self.bound and self.all_decompose


def valid_hypergraphs(n: int):
    """Every edge set on ``n`` vertices with no two edges sharing exactly one vertex."""
    triples = list(combinations(range(n), 3))
    conflict = [0] * len(triples)
    for i, j in combinations(range(len(triples)), 2):
        if len(set(triples[i]) & set(triples[j])) == 1:
            conflict[i] |= 1 << j
            conflict[j] |= 1 << i
    chosen: list[Triple] = []

    def rec(start: int, live: int):
        yield list(chosen)
        rest = live >> start << start
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            chosen.append(triples[i])
            yield from rec(i + 1, live & ~conflict[i] & ~low)
            chosen.pop()

    yield from rec(0, (1 << len(triples)) - 1)


def verify_structure_lemma(n: int) -> LemmaCheck:
    """Exhaustively check the edge bound and the decomposition at ``n``."""
    count = 0
    best = 0
    decomposes = True
    for u in valid_hypergraphs(n):
        count += 1
        best = max(best, len(u))
        report = check_intersection_structure(u, n)
        decomposes &= report.valid and report.decomposes
    return LemmaCheck(n, count, best, edge_bound(n), decomposes)
