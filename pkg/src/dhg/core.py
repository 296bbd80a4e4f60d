"""Data model for 2->1 directed hypergraphs.

An edge ``ab -> c`` has an unordered tail pair ``{a, b}`` and a head ``c``;
all three vertices are distinct.  Vertices are dense integer ids ``0..n-1``.
The same type serves the standard regime (up to three edges per triple) and
the oriented regime (at most one); orientation is a property, not a type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised for malformed edges, out-of-range ids and similar misuse."""


@dataclass(frozen=True, order=True)
class Edge:
    tail_lo: int
    tail_hi: int
    head: int

    def __post_init__(self) -> None:
        if not self.tail_lo < self.tail_hi:
            raise GraphError(f"tail must satisfy lo < hi, got {self.tail_lo}, {self.tail_hi}")
        if self.head in (self.tail_lo, self.tail_hi):
            raise GraphError(f"head {self.head} repeats a tail vertex")
        if min(self.tail_lo, self.head) < 0:
            raise GraphError("vertex ids must be non-negative")

    @classmethod
    def of(cls, a: int, b: int, c: int) -> Edge:
        """Build ``ab -> c`` with the tail given in either order."""
        if a == b:
            raise GraphError(f"tail vertices must differ, got {a}, {a}")
        return cls(min(a, b), max(a, b), c)

    @property
    def tail(self) -> tuple[int, int]:
        return (self.tail_lo, self.tail_hi)

    @property
    def triple(self) -> tuple[int, int, int]:
        """The underlying vertex 3-set, sorted."""
        return tuple(sorted((self.tail_lo, self.tail_hi, self.head)))  # type: ignore[return-value]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset((self.tail_lo, self.tail_hi, self.head))

    def __str__(self) -> str:
        return f"{self.tail_lo}{self.tail_hi}->{self.head}"


@dataclass(frozen=True)
class TailLinkGraph:
    """T_x: the pairs ``yz`` with ``yz -> center`` in the source graph."""

    center: int
    pairs: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.pairs)

    def degree(self, y: int) -> int:
        """d_x(y), the degree of ``y`` in this link graph."""
        return sum(1 for p in self.pairs if y in p)

    def common_vertices(self) -> set[int]:
        """Vertices lying in every pair (empty for the empty link graph)."""
        if not self.pairs:
            return set()
        it = iter(self.pairs)
        common = set(next(it))
        for p in it:
            common &= set(p)
        return common

    def is_star(self) -> bool:
        return bool(self.pairs) and bool(self.common_vertices())

    def is_triangle(self) -> bool:
        if len(self.pairs) != 3:
            return False
        verts = {v for p in self.pairs for v in p}
        return len(verts) == 3

    def has_independent_pairs(self) -> bool:
        """True if two pairs are vertex-disjoint."""
        return any(not set(p) & set(q) for p, q in combinations(self.pairs, 2))


@dataclass(frozen=True)
class DirectedLinkGraph:
    """D_x: arcs ``y -> z`` with ``xy -> z`` in the source graph."""

    center: int
    arcs: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.arcs)

    def has_disjoint_arcs(self) -> bool:
        return any(not set(p) & set(q) for p, q in combinations(self.arcs, 2))


@dataclass(frozen=True)
class DirectedHypergraph:
    """An immutable 2->1 directed hypergraph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(self.edges))
        for e in self.edges:
            if max(e.tail_hi, e.head) >= self.n:
                raise GraphError(f"edge {e} uses a vertex id >= n={self.n}")

    @classmethod
    def from_triples(cls, n: int, triples: Iterable[tuple[int, int, int]]) -> DirectedHypergraph:
        """Build from ``(a, b, c)`` tuples meaning ``ab -> c``."""
        return cls(n, frozenset(Edge.of(a, b, c) for a, b, c in triples))

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, edge: object) -> bool:
        return edge in self.edges

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.sorted_edges())

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def _check_vertex(self, *vs: int) -> None:
        for v in vs:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range for n={self.n}")

    def add_edge(self, a: int, b: int, c: int) -> DirectedHypergraph:
        """Return a copy with ``ab -> c`` included (no-op if present)."""
        self._check_vertex(a, b, c)
        if len({a, b, c}) != 3:
            raise GraphError(f"edge vertices must be distinct, got {a}, {b}, {c}")
        e = Edge.of(a, b, c)
        if e in self.edges:
            return self
        return DirectedHypergraph(self.n, self.edges | {e})

    def with_edges(self, edges: Iterable[Edge]) -> DirectedHypergraph:
        return DirectedHypergraph(self.n, self.edges | frozenset(edges))

    def without_edges(self, edges: Iterable[Edge]) -> DirectedHypergraph:
        return DirectedHypergraph(self.n, self.edges - frozenset(edges))

    def edges_by_triple(self) -> dict[tuple[int, int, int], list[Edge]]:
        out: dict[tuple[int, int, int], list[Edge]] = {}
        for e in self.sorted_edges():
            out.setdefault(e.triple, []).append(e)
        return out

    def is_oriented(self) -> bool:
        """True iff every vertex triple carries at most one edge."""
        seen: set[tuple[int, int, int]] = set()
        for e in self.edges:
            t = e.triple
            if t in seen:
                return False
            seen.add(t)
        return True

    def tail_link_graph(self, x: int) -> TailLinkGraph:
        self._check_vertex(x)
        return TailLinkGraph(x, frozenset(e.tail for e in self.edges if e.head == x))

    def directed_link_graph(self, x: int) -> DirectedLinkGraph:
        self._check_vertex(x)
        arcs = set()
        for e in self.edges:
            if e.tail_lo == x:
                arcs.add((e.tail_hi, e.head))
            elif e.tail_hi == x:
                arcs.add((e.tail_lo, e.head))
        return DirectedLinkGraph(x, frozenset(arcs))

    def tail_count(self, x: int, y: int) -> int:
        """t(x, y): number of edges whose tail set is ``{x, y}``."""
        self._check_vertex(x, y)
        if x == y:
            raise GraphError("tail_count needs two distinct vertices")
        lo, hi = min(x, y), max(x, y)
        return sum(1 for e in self.edges if e.tail_lo == lo and e.tail_hi == hi)

    def tail_counts(self) -> dict[tuple[int, int], int]:
        """All non-zero t(x, y) at once, keyed by sorted pair."""
        out: dict[tuple[int, int], int] = {}
        for e in self.edges:
            out[e.tail] = out.get(e.tail, 0) + 1
        return out

    def induced(self, keep: Iterable[int]) -> DirectedHypergraph:
        """Subgraph induced on ``keep``, relabelled to ``0..len(keep)-1`` in sorted order."""
        order = sorted(set(keep))
        self._check_vertex(*order)
        index = {v: i for i, v in enumerate(order)}
        edges = [
            Edge.of(index[e.tail_lo], index[e.tail_hi], index[e.head])
            for e in self.edges
            if e.tail_lo in index and e.tail_hi in index and e.head in index
        ]
        return DirectedHypergraph(len(order), frozenset(edges))

    def __str__(self) -> str:
        body = ", ".join(str(e) for e in self.sorted_edges())
        return f"DirectedHypergraph(n={self.n}, {{{body}}})"


def all_edges(n: int) -> list[Edge]:
    """Every possible edge on ``n`` vertices, ordered by triple then head."""
    out = []
    for i, j, k in combinations(range(n), 3):
        out.append(Edge(j, k, i))
        out.append(Edge(i, k, j))
        out.append(Edge(i, j, k))
    return out


def all_triples(n: int) -> list[tuple[int, int, int]]:
    return list(combinations(range(n), 3))
