"""Canonical forms, isomorphism and automorphism counting.

The canonical form is the lexicographically least serialized edge list over
the leaves of an individualization-refinement search tree.  Vertex colours are
refined by (head pair colours, tail partner and head colours) until stable;
subtrees equivalent under automorphisms already discovered are skipped, and the
automorphism group order falls out of the orbit sizes along the first path.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .core import DirectedHypergraph, Edge, GraphError

DEFAULT_LIMIT = 14


@dataclass(frozen=True, order=True)
class CanonicalForm:
    data: bytes

    def hexdigest(self) -> str:
        return hashlib.sha256(self.data).hexdigest()

    def __str__(self) -> str:
        return self.hexdigest()[:16]


def apply_permutation(graph: DirectedHypergraph, perm: Sequence[int]) -> DirectedHypergraph:
    """Relabel vertex ``v`` as ``perm[v]``."""
    if sorted(perm) != list(range(graph.n)):
        raise GraphError(f"not a permutation of 0..{graph.n - 1}: {list(perm)}")
    return DirectedHypergraph(
        graph.n,
        frozenset(Edge.of(perm[e.tail_lo], perm[e.tail_hi], perm[e.head]) for e in graph.edges),
    )


class _Canonizer:
    def __init__(self, graph: DirectedHypergraph) -> None:
        self.n = graph.n
        self.edges = [(e.tail_lo, e.tail_hi, e.head) for e in graph.edges]
        self.head_inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        self.tail_inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for a, b, c in self.edges:
            self.head_inc[c].append((a, b))
            self.tail_inc[a].append((b, c))
            self.tail_inc[b].append((a, c))
        self.first: tuple[list[int], bytes, list[int]] | None = None
        self.best: tuple[list[int], bytes, list[int]] | None = None
        self.generators: list[list[int]] = []
        self.group_order = 1
        self.leaves = 0

    def refine(self, cells: list[list[int]]) -> list[list[int]]:
        color = [0] * self.n
        while True:
            for idx, cell in enumerate(cells):
                for v in cell:
                    color[v] = idx
            changed = False
            out: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[tuple, list[int]] = {}
                for v in cell:
                    sig = [(0, *sorted((color[a], color[b]))) for a, b in self.head_inc[v]]
                    sig += [(1, color[o], color[h]) for o, h in self.tail_inc[v]]
                    sig.sort()
                    groups.setdefault(tuple(sig), []).append(v)
                if len(groups) > 1:
                    changed = True
                    out.extend(groups[k] for k in sorted(groups))
                else:
                    out.append(cell)
            cells = out
            if not changed:
                return cells

    def code(self, lab: list[int]) -> bytes:
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        relabeled = sorted(
            (min(pos[a], pos[b]), max(pos[a], pos[b]), pos[c]) for a, b, c in self.edges
        )
        return bytes([self.n]) + bytes(x for e in relabeled for x in e)

    def orbit_reps(self, fixed: list[int]) -> list[int]:
        """Orbit root of each vertex under the generators that fix ``fixed`` pointwise."""
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            if all(g[v] == v for v in fixed):
                for v in range(self.n):
                    a, b = find(v), find(g[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.n)]

    def leaf(self, cells: list[list[int]], prefix: list[int]) -> int | None:
        self.leaves += 1
        lab = [cell[0] for cell in cells]
        code = self.code(lab)
        if self.first is None:
            self.first = self.best = (lab, code, list(prefix))
            return None
        for ref_lab, ref_code, ref_prefix in (self.first, self.best):
            if code == ref_code:
                gamma = [0] * self.n
                for u, v in zip(ref_lab, lab):
                    gamma[u] = v
                self.generators.append(gamma)
                common = 0
                while common < len(prefix) and prefix[common] == ref_prefix[common]:
                    common += 1
                return common
        assert self.best is not None
        if code < self.best[1]:
            self.best = (lab, code, list(prefix))
        return None

    def search(self, cells: list[list[int]], prefix: list[int]) -> int | None:
        cells = self.refine(cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            return self.leaf(cells, prefix)
        depth = len(prefix)
        on_first_path = self.first is None
        cell = sorted(cells[target])
        explored: list[int] = []
        for v in cell:
            if explored:
                roots = self.orbit_reps(prefix)
                if any(roots[v] == roots[u] for u in explored):
                    continue
            explored.append(v)
            child = cells[:target] + [[v], [u for u in cell if u != v]] + cells[target + 1 :]
            ret = self.search(child, prefix + [v])
            if ret is not None and ret < depth:
                return ret
        if on_first_path:
            roots = self.orbit_reps(prefix)
            self.group_order *= sum(1 for u in cell if roots[u] == roots[cell[0]])
        return None

    def run(self) -> None:
        if self.n == 0:
            self.first = self.best = ([], bytes([0]), [])
            return
        self.search([list(range(self.n))], [])


def _canonize(graph: DirectedHypergraph, limit: int) -> _Canonizer:
    if graph.n > limit:
        raise GraphError(f"canonical forms are limited to n <= {limit}, got n={graph.n}")
    c = _Canonizer(graph)
    c.run()
    return c


def canonical_labeling(graph: DirectedHypergraph, limit: int = DEFAULT_LIMIT) -> list[int]:
    """Permutation ``p`` such that ``apply_permutation(graph, p)`` is the canonical graph."""
    c = _canonize(graph, limit)
    assert c.best is not None
    lab = c.best[0]
    perm = [0] * graph.n
    for i, v in enumerate(lab):
        perm[v] = i
    return perm


def canonical_form(graph: DirectedHypergraph, limit: int = DEFAULT_LIMIT) -> CanonicalForm:
    c = _canonize(graph, limit)
    assert c.best is not None
    return CanonicalForm(c.best[1])


def canonical_graph(graph: DirectedHypergraph, limit: int = DEFAULT_LIMIT) -> DirectedHypergraph:
    return apply_permutation(graph, canonical_labeling(graph, limit))


def are_isomorphic(g1: DirectedHypergraph, g2: DirectedHypergraph, limit: int = DEFAULT_LIMIT) -> bool:
    if g1.n != g2.n or len(g1) != len(g2):
        return False
    return canonical_form(g1, limit) == canonical_form(g2, limit)


def automorphism_group_order(graph: DirectedHypergraph, limit: int = DEFAULT_LIMIT) -> int:
    return _canonize(graph, limit).group_order


def find_isomorphism_brute_force(
    g1: DirectedHypergraph, g2: DirectedHypergraph
) -> tuple[int, ...] | None:
    """Try all n! relabelings; only for small n."""
    if g1.n != g2.n or len(g1) != len(g2):
        return None
    target = g2.edges
    for p in permutations(range(g1.n)):
        if all(Edge.of(p[e.tail_lo], p[e.tail_hi], p[e.head]) in target for e in g1.edges):
            return p
    return None


def count_automorphisms_brute_force(graph: DirectedHypergraph) -> int:
    edges = graph.edges
    return sum(
        1
        for p in permutations(range(graph.n))
        if all(Edge.of(p[e.tail_lo], p[e.tail_hi], p[e.head]) in edges for e in edges)
    )


def dedupe(graphs, limit: int = DEFAULT_LIMIT) -> list:
    """First representative of each isomorphism class, in input order."""
    seen: set[CanonicalForm] = set()
    out = []
    for g in graphs:
        form = canonical_form(g, limit)
        if form not in seen:
            seen.add(form)
            out.append(g)
    return out
