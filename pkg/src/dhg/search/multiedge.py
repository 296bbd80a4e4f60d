"""Multiedge-triple analysis for H1-free graphs in the standard mode."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..core import DirectedHypergraph, Edge
from ..patterns import PatternName, is_free


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class MultiedgeProfile:
    t_H: int  # triples holding at least one edge
    m_H: int  # triples holding at least two
    multiedge_triples: tuple[tuple[int, int, int], ...]

    def edge_bound(self) -> int:
        return self.t_H + 2 * self.m_H


def multiedge_profile(graph: DirectedHypergraph) -> MultiedgeProfile:
    by_triple = graph.edges_by_triple()
    multi = tuple(sorted(t for t, es in by_triple.items() if len(es) >= 2))
    profile = MultiedgeProfile(len(by_triple), len(multi), multi)
    assert len(graph) <= profile.edge_bound()
    return profile


def saturate_multiedge(graph: DirectedHypergraph, triple: tuple[int, int, int]) -> DirectedHypergraph:
    """Put all three edges on ``triple``, which must already hold two."""
    a, b, c = sorted(triple)
    on_triple = graph.edges_by_triple().get((a, b, c), [])
    if len(on_triple) < 2:
        raise PreconditionError(f"triple {(a, b, c)} holds {len(on_triple)} edges, need at least 2")
    if not is_free(graph, PatternName.H1):
        raise PreconditionError("input graph contains H1")
    out = graph.with_edges([Edge.of(a, b, c), Edge.of(a, c, b), Edge.of(b, c, a)])
    assert is_free(out, PatternName.H1), "saturation created H1"
    return out


def multiedge_pair_check(graph: DirectedHypergraph) -> bool:
    """No two multiedge triples meet in exactly one vertex."""
    triples = multiedge_profile(graph).multiedge_triples
    return all(len(set(s) & set(t)) != 1 for s, t in combinations(triples, 2))


def disjoint_tail_pair_check(graph: DirectedHypergraph) -> bool:
    """Tail pairs used by two or more edges are pairwise disjoint."""
    heavy = [p for p, k in graph.tail_counts().items() if k >= 2]
    return all(not set(p) & set(q) for p, q in combinations(heavy, 2))
