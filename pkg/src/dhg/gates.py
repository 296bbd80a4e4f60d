"""Gatekeepers and gates of I0-free graphs.

In an I0-free graph every tail link graph T_x is empty, a triangle or a star.
When T_x is a star its centre is the gatekeeper g(x), and the arcs
``g(x) -> x`` form the gate: a digraph with in-degree at most one, so each
weak component is a directed cycle with in-trees hanging off it, or a tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .core import DirectedHypergraph, Edge


class GateError(ValueError):
    """The input graph has no gate (it contains I0)."""


class AuditViolation(AssertionError):
    """A component exceeded its proven edge bound."""


@dataclass(frozen=True)
class Gate:
    n: int
    gatekeeper: dict[int, int] = field(hash=False)

    @property
    def arcs(self) -> frozenset[tuple[int, int]]:
        return frozenset((g, x) for x, g in self.gatekeeper.items())

    def in_degree(self, x: int) -> int:
        return 1 if x in self.gatekeeper else 0


@dataclass(frozen=True)
class Branch:
    """An in-tree hanging off vertex ``root`` (``root`` itself not counted)."""

    root: int
    size: int
    is_path: bool


@dataclass(frozen=True)
class GateComponent:
    vertices: frozenset[int]
    arcs: frozenset[tuple[int, int]]
    cycle_length: int
    branches: tuple[Branch, ...]

    @property
    def branch_profile(self) -> tuple[int, ...]:
        return tuple(sorted(b.size for b in self.branches))

    @property
    def is_bare_cycle(self) -> bool:
        return self.cycle_length > 0 and not self.branches

    def shape(self) -> str:
        if self.cycle_length == 0:
            return f"tree({len(self.vertices)})"
        base = f"C{self.cycle_length}"
        if self.branches:
            base += "+" + "+".join(
                f"{'path' if b.is_path else 'tree'}{b.size}" for b in self.branches
            )
        return base


class Regime(str, Enum):
    D1 = "D1"
    D2 = "D2"
    D3 = "D3"


def extract_gate(graph: DirectedHypergraph) -> Gate:
    """Gatekeeper map of an I0-free graph.

    A single-pair T_x = {ab} gets gatekeeper ``min(a, b)``; empty and
    triangle link graphs leave g(x) undefined.
    """
    tails: dict[int, list[tuple[int, int]]] = {x: [] for x in range(graph.n)}
    for e in graph.sorted_edges():
        tails[e.head].append(e.tail)
    gk: dict[int, int] = {}
    for x, pairs in tails.items():
        if not pairs:
            continue
        common = set(pairs[0])
        for p in pairs[1:]:
            common &= set(p)
        if common:
            gk[x] = min(common)
            continue
        verts = {v for p in pairs for v in p}
        if len(pairs) == 3 and len(verts) == 3:
            continue
        raise GateError(f"T_{x} has two independent pairs; graph contains I0")
    return Gate(graph.n, gk)


def _tree_shape(children: dict[int, list[int]], start: int, skip: set[int]) -> tuple[int, bool]:
    """Size of the subtree below ``start`` (excluding ``skip``) and whether it is a path."""
    size = 0
    is_path = True
    stack = [start]
    while stack:
        v = stack.pop()
        kids = [c for c in children.get(v, []) if c not in skip]
        if len(kids) > 1:
            is_path = False
        size += len(kids)
        stack.extend(kids)
    return size, is_path


def gate_components(gate: Gate) -> list[GateComponent]:
    """Weak components of the gate over its non-isolated vertices, ordered by least vertex."""
    adj: dict[int, set[int]] = {}
    children: dict[int, list[int]] = {}
    for g, x in sorted(gate.arcs):
        adj.setdefault(g, set()).add(x)
        adj.setdefault(x, set()).add(g)
        children.setdefault(g, []).append(x)
    seen: set[int] = set()
    out = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        arcs = frozenset((g, x) for g, x in gate.arcs if x in comp)
        # walk gatekeepers backwards: either a root appears or a cycle closes
        walk = [min(comp)]
        pos = {walk[0]: 0}
        while walk[-1] in gate.gatekeeper:
            nxt = gate.gatekeeper[walk[-1]]
            if nxt in pos:
                cycle = walk[pos[nxt]:]
                break
            pos[nxt] = len(walk)
            walk.append(nxt)
        else:
            cycle = []
        if cycle:
            on_cycle = set(cycle)
            branches = []
            for r in sorted(on_cycle):
                kids = [c for c in children.get(r, []) if c not in on_cycle]
                if not kids:
                    continue
                size, is_path = _tree_shape(children, r, on_cycle)
                branches.append(Branch(r, size, is_path and len(kids) == 1))
            out.append(GateComponent(frozenset(comp), arcs, len(cycle), tuple(branches)))
        else:
            root = walk[-1]
            branches = []
            for c in sorted(children.get(root, [])):
                size, is_path = _tree_shape(children, c, set())
                branches.append(Branch(root, size + 1, is_path))
            out.append(GateComponent(frozenset(comp), arcs, 0, tuple(branches)))
    return out


def classify_regime(comp: GateComponent) -> Regime:
    k = comp.cycle_length
    if k == 3 and not comp.branches:
        return Regime.D3
    if k >= 4 and not comp.branches:
        return Regime.D2
    if k == 3 and len(comp.branches) == 1 and comp.branches[0].is_path:
        return Regime.D2
    return Regime.D1


def possible_edges(comp: GateComponent, n: int) -> set[Edge]:
    """P(C): every ``{a, v} -> b`` for a gate arc ``a -> b``."""
    return {Edge.of(a, v, b) for a, b in comp.arcs for v in range(n) if v not in (a, b)}


@dataclass(frozen=True)
class ComponentAudit:
    sum_t: int
    bound: int
    tight: bool
    checked: bool
    possible_set_size: int
    possible_multiset_size: int
    edges_in_possible: bool


def audit_component_bound(graph: DirectedHypergraph, comp: GateComponent) -> ComponentAudit:
    """Compare the tail degrees over ``comp`` with the per-component bound.

    The bound is ``m(n-3) + 1`` for a bare directed triangle and ``m(n-3)``
    otherwise, ``m`` being the number of component vertices.  It is enforced
    only for oriented graphs with ``n >= 8``; a breach raises AuditViolation.
    """
    n = graph.n
    m = len(comp.vertices)
    heads = {x: 0 for x in comp.vertices}
    in_possible = True
    possible = possible_edges(comp, n)
    targets = {x for _, x in comp.arcs}
    for e in graph.edges:
        if e.head in heads:
            heads[e.head] += 1
            if e.head in targets and e not in possible:
                in_possible = False
    sum_t = sum(heads.values())
    bare_triangle = comp.cycle_length == 3 and not comp.branches
    bound = m * (n - 3) + (1 if bare_triangle else 0)
    checked = n >= 8 and graph.is_oriented()
    report = ComponentAudit(
        sum_t=sum_t,
        bound=bound,
        tight=sum_t == bound,
        checked=checked,
        possible_set_size=len(possible),
        possible_multiset_size=len(comp.arcs) * (n - 2),
        edges_in_possible=in_possible,
    )
    if checked and (sum_t > bound or not in_possible):
        raise AuditViolation(f"component {sorted(comp.vertices)}: {report}")
    return report


def audit_graph(graph: DirectedHypergraph) -> list[tuple[GateComponent, Regime, ComponentAudit]]:
    gate = extract_gate(graph)
    return [(c, classify_regime(c), audit_component_bound(graph, c)) for c in gate_components(gate)]
