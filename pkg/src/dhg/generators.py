"""Seeded random graphs for property checks."""

from __future__ import annotations

import random

from .core import DirectedHypergraph, Edge, all_edges
from .patterns import PatternName, classify_edge_pair


def random_graph(rng: random.Random, n: int, density: float | None = None, oriented: bool = False) -> DirectedHypergraph:
    """Each candidate edge kept with probability ``density`` (random if omitted)."""
    p = rng.random() if density is None else density
    edges: list[Edge] = []
    used: set[tuple[int, int, int]] = set()
    for e in all_edges(n):
        if oriented and e.triple in used:
            continue
        if rng.random() < p:
            edges.append(e)
            used.add(e.triple)
    return DirectedHypergraph(n, frozenset(edges))


def greedy_free_graph(
    rng: random.Random, n: int, pattern: PatternName, oriented: bool, limit: int | None = None
) -> DirectedHypergraph:
    """Add candidate edges in random order while the graph stays free (a maximal graph unless ``limit`` stops it)."""
    cands = all_edges(n)
    rng.shuffle(cands)
    chosen: list[Edge] = []
    used: set[tuple[int, int, int]] = set()
    for e in cands:
        if limit is not None and len(chosen) >= limit:
            break
        if oriented and e.triple in used:
            continue
        if any(classify_edge_pair(e, f) == pattern for f in chosen):
            continue
        chosen.append(e)
        used.add(e.triple)
    return DirectedHypergraph(n, frozenset(chosen))


def random_deletion(rng: random.Random, graph: DirectedHypergraph, keep: float | None = None) -> DirectedHypergraph:
    """Subgraph keeping each edge with probability ``keep``; freeness is inherited."""
    p = rng.random() if keep is None else keep
    return DirectedHypergraph(graph.n, frozenset(e for e in graph.sorted_edges() if rng.random() < p))


def random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm
