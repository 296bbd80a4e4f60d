"""Catalog of the nine two-edge graphs, containment and degeneracy tests."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product

from .core import DirectedHypergraph, Edge


class PatternName(str, Enum):
    I0 = "i0"
    I1 = "i1"
    H1 = "h1"
    H2 = "h2"
    R3 = "r3"
    R4 = "r4"
    E = "e"
    D2 = "d2"
    DISJOINT2 = "disjoint2"

    @classmethod
    def parse(cls, name: str) -> PatternName:
        try:
            return cls(name.strip().lower())
        except ValueError:
            choices = ", ".join(p.value for p in cls)
            raise ValueError(f"unknown pattern {name!r} (choose from {choices})") from None

    @property
    def label(self) -> str:
        return {"disjoint2": "DISJOINT2"}.get(self.value, self.value.upper())


IDENTICAL = "identical"


@dataclass(frozen=True)
class Pattern:
    name: PatternName
    graph: DirectedHypergraph

    @property
    def edge_count(self) -> int:
        return len(self.graph)


def _pattern(name: PatternName, n: int, triples: list[tuple[int, int, int]]) -> Pattern:
    return Pattern(name, DirectedHypergraph.from_triples(n, triples))


# letters map to ids in order of appearance: a=0, b=1, c=2, d=3, then x or e
CATALOG: dict[PatternName, Pattern] = {
    p.name: p
    for p in (
        _pattern(PatternName.I0, 5, [(0, 1, 4), (2, 3, 4)]),  # ab->x, cd->x
        _pattern(PatternName.I1, 4, [(0, 1, 2), (0, 3, 2)]),  # ab->c, ad->c
        _pattern(PatternName.H1, 5, [(0, 4, 1), (2, 4, 3)]),  # ax->b, cx->d
        _pattern(PatternName.H2, 4, [(0, 1, 2), (0, 1, 3)]),  # ab->c, ab->d
        _pattern(PatternName.R3, 4, [(0, 1, 2), (1, 2, 3)]),  # ab->c, bc->d
        _pattern(PatternName.R4, 5, [(0, 1, 2), (2, 3, 4)]),  # ab->c, cd->e
        _pattern(PatternName.E, 4, [(0, 1, 2), (2, 3, 1)]),  # ab->c, cd->b
        _pattern(PatternName.D2, 3, [(0, 1, 2), (0, 2, 1)]),
        _pattern(PatternName.DISJOINT2, 6, [(0, 1, 2), (3, 4, 5)]),
    )
}

DEGENERATE = frozenset(
    {PatternName.I0, PatternName.I1, PatternName.H1, PatternName.H2, PatternName.DISJOINT2}
)


def get_pattern(name: str | PatternName) -> Pattern:
    if not isinstance(name, PatternName):
        name = PatternName.parse(name)
    return CATALOG[name]


def classify_edge_pair(e1: Edge, e2: Edge) -> PatternName | str:
    """Name the two-edge graph formed by ``e1`` and ``e2`` (order irrelevant).

    Returns :data:`IDENTICAL` when the edges coincide.
    """
    if e1 == e2:
        return IDENTICAL
    v1, v2 = e1.vertices, e2.vertices
    common = len(v1 & v2)
    if common == 0:
        return PatternName.DISJOINT2
    if common == 3:
        return PatternName.D2
    shared_tail = len({e1.tail_lo, e1.tail_hi} & {e2.tail_lo, e2.tail_hi})
    if e1.head == e2.head:
        return PatternName.I1 if shared_tail else PatternName.I0
    if shared_tail == 2:
        return PatternName.H2
    head1_in_tail2 = e1.head in (e2.tail_lo, e2.tail_hi)
    head2_in_tail1 = e2.head in (e1.tail_lo, e1.tail_hi)
    if shared_tail == 1:
        # one head inside the other tail gives 4 vertices; otherwise 5
        return PatternName.R3 if head1_in_tail2 or head2_in_tail1 else PatternName.H1
    if head1_in_tail2 and head2_in_tail1:
        return PatternName.E
    return PatternName.R4


def _extend(
    pattern_edges: list[Edge],
    host_edges: list[Edge],
    phi: dict[int, int],
    used: set[int],
    i: int,
) -> dict[int, int] | None:
    if i == len(pattern_edges):
        return dict(phi)
    pe = pattern_edges[i]
    for he in host_edges:
        # head must map to head; the tail pair maps onto the tail pair either way round
        for ta, tb in ((he.tail_lo, he.tail_hi), (he.tail_hi, he.tail_lo)):
            wanted = ((pe.head, he.head), (pe.tail_lo, ta), (pe.tail_hi, tb))
            added = []
            ok = True
            for u, v in wanted:
                if u in phi:
                    if phi[u] != v:
                        ok = False
                        break
                elif v in used:
                    ok = False
                    break
                else:
                    phi[u] = v
                    used.add(v)
                    added.append(u)
            if ok:
                found = _extend(pattern_edges, host_edges, phi, used, i + 1)
                if found is not None:
                    return found
            for u in added:
                used.discard(phi.pop(u))
    return None


def find_embedding(host: DirectedHypergraph, pattern: DirectedHypergraph) -> dict[int, int] | None:
    """An injective homomorphism ``pattern -> host`` as a vertex map, or None.

    Plain backtracking over pattern edges; pattern vertices not on any edge are
    mapped to unused host vertices at the end.
    """
    if pattern.n > host.n or len(pattern) > len(host):
        return None
    phi = _extend(pattern.sorted_edges(), host.sorted_edges(), {}, set(), 0)
    if phi is None:
        return None
    spare = iter(v for v in range(host.n) if v not in phi.values())
    for u in range(pattern.n):
        if u not in phi:
            phi[u] = next(spare)
    return phi


def _pair_scan(host: DirectedHypergraph, name: PatternName) -> tuple[Edge, Edge] | None:
    edges = host.sorted_edges()
    for e1, e2 in combinations(edges, 2):
        if classify_edge_pair(e1, e2) == name:
            return e1, e2
    return None


def contains_pattern(host: DirectedHypergraph, pattern: Pattern | DirectedHypergraph, fast: bool = True) -> bool:
    """True iff ``host`` has an injective copy of ``pattern``.

    Catalog patterns go through a pair scan unless ``fast`` is False; arbitrary
    graphs always use backtracking.
    """
    if isinstance(pattern, Pattern):
        if fast:
            return _pair_scan(host, pattern.name) is not None
        pattern = pattern.graph
    return find_embedding(host, pattern) is not None


def pattern_witness(host: DirectedHypergraph, pattern: Pattern) -> dict[int, int] | None:
    """Vertex map of one copy of a catalog pattern in ``host``."""
    pair = _pair_scan(host, pattern.name)
    if pair is None:
        return None
    sub = DirectedHypergraph(host.n, frozenset(pair))
    return find_embedding(sub, pattern.graph)


def is_free(host: DirectedHypergraph, name: str | PatternName) -> bool:
    return not contains_pattern(host, get_pattern(name))


@dataclass(frozen=True)
class DegeneracyWitness:
    t1: frozenset[int]
    t2: frozenset[int]
    k: frozenset[int]


def is_degenerate(graph: DirectedHypergraph) -> DegeneracyWitness | None:
    """Lexicographically first partition (T1 < T2 < K per vertex) witnessing degeneracy."""
    edges = graph.sorted_edges()
    for colors in product(range(3), repeat=graph.n):
        for e in edges:
            if colors[e.head] != 2 or {colors[e.tail_lo], colors[e.tail_hi]} != {0, 1}:
                break
        else:
            parts = [frozenset(v for v in range(graph.n) if colors[v] == c) for c in range(3)]
            return DegeneracyWitness(*parts)
    return None
