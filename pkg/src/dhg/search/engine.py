"""Branch-and-bound over candidate edges with bitset conflict sets.

Every forbidden pattern in the catalog has two edges, so a graph is F-free
exactly when no pair of its edges classifies as F.  Candidate edges are
numbered, ``conflict[i]`` is the bitmask of candidates that cannot coexist
with candidate ``i`` (pattern pairs, plus same-triple edges in oriented
mode), and the search picks an independent set.

Oriented mode branches per triple (no edge, or one of its three heads);
standard mode branches per edge (include or exclude).  The optimistic bound
is either one edge per live triple or a greedy clique cover of the live
candidates, which dominates it.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from ..core import DirectedHypergraph, Edge
from ..patterns import PatternName, classify_edge_pair

BOUNDS = ("cliques", "triples", "none")


class SearchTimeout(Exception):
    pass


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass
class ConflictGraph:
    """Candidate edges, grouped into branching units, with pairwise conflicts."""

    candidates: list[Edge]
    conflict: list[int]
    units: list[int]  # bitmask per branching unit, in branching order

    @classmethod
    def build(
        cls,
        candidates: Sequence[Edge],
        forbidden: PatternName,
        oriented: bool,
        unit_order: Sequence[int] | None = None,
    ) -> ConflictGraph:
        cands = list(candidates)
        conflict = [0] * len(cands)
        for i, j in combinations(range(len(cands)), 2):
            a, b = cands[i], cands[j]
            clash = classify_edge_pair(a, b) == forbidden
            if oriented and a.triple == b.triple:
                clash = True
            if clash:
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i
        if oriented:
            groups: dict[tuple[int, int, int], int] = {}
            for i, e in enumerate(cands):
                groups[e.triple] = groups.get(e.triple, 0) | (1 << i)
            units = [groups[t] for t in sorted(groups)]
        else:
            units = [1 << i for i in range(len(cands))]
        if unit_order is not None:
            if sorted(unit_order) != list(range(len(units))):
                raise ValueError("unit_order must be a permutation of the branching units")
            units = [units[i] for i in unit_order]
        return cls(cands, conflict, units)

    def graph_of(self, chosen: Sequence[int], n: int) -> DirectedHypergraph:
        return DirectedHypergraph(n, frozenset(self.candidates[i] for i in chosen))


@dataclass
class EngineResult:
    best: int
    witness: tuple[int, ...] | None
    count: int
    solutions: list[tuple[int, ...]] = field(default_factory=list)
    nodes: int = 0
    complete: bool = True


class Engine:
    """One depth-first search over a :class:`ConflictGraph`.

    ``target`` switches from maximisation to counting: only independent sets
    of exactly ``target`` candidates are counted (and kept if ``collect``).
    """

    def __init__(
        self,
        cg: ConflictGraph,
        bound: str = "cliques",
        target: int | None = None,
        collect: bool = False,
        deadline: float | None = None,
    ) -> None:
        if bound not in BOUNDS:
            raise ValueError(f"unknown bound {bound!r}")
        self.cg = cg
        self.bound = bound
        self.target = target
        self.collect = collect
        self.deadline = deadline
        self.best = -1
        self.witness: tuple[int, ...] | None = None
        self.count = 0
        self.solutions: list[tuple[int, ...]] = []
        self.nodes = 0

    def upper_bound(self, live: int) -> int:
        if self.bound == "none":
            return 1 << 30
        if self.bound == "triples":
            return sum(1 for u in self.cg.units if u & live)
        conflict = self.cg.conflict
        cover = 0
        while live:
            low = live & -live
            v = low.bit_length() - 1
            clique = low
            cand = live & conflict[v]
            while cand:
                low = cand & -cand
                clique |= low
                cand &= conflict[low.bit_length() - 1]
            live &= ~clique
            cover += 1
        return cover

    def _leaf(self, chosen: list[int]) -> None:
        size = len(chosen)
        if self.target is None:
            if size > self.best:
                self.best = size
                self.witness = tuple(chosen)
        elif size == self.target:
            self.count += 1
            if self.collect:
                self.solutions.append(tuple(chosen))

    def children(self, pos: int, live: int) -> tuple[int, list[tuple[int | None, int]]]:
        """Next branching unit with live candidates and its (choice, new live) pairs."""
        units = self.cg.units
        while pos < len(units) and not units[pos] & live:
            pos += 1
        if pos == len(units):
            return pos, []
        unit = units[pos]
        opts: list[tuple[int | None, int]] = []
        for i in _bits(unit & live):
            opts.append((i, live & ~self.cg.conflict[i] & ~unit))
        opts.append((None, live & ~unit))
        return pos + 1, opts

    def run(self, pos: int, live: int, chosen: list[int]) -> None:
        self.nodes += 1
        if self.deadline is not None and not self.nodes & 0x3FF and time.monotonic() > self.deadline:
            raise SearchTimeout
        nxt, opts = self.children(pos, live)
        if not opts:
            self._leaf(chosen)
            return
        optimistic = len(chosen) + self.upper_bound(live)
        if self.target is None:
            if optimistic <= self.best:
                return
        elif optimistic < self.target:
            return
        for choice, new_live in opts:
            if choice is None:
                self.run(nxt, new_live, chosen)
            else:
                chosen.append(choice)
                self.run(nxt, new_live, chosen)
                chosen.pop()

    def result(self, complete: bool = True) -> EngineResult:
        return EngineResult(self.best, self.witness, self.count, self.solutions, self.nodes, complete)


@dataclass(frozen=True)
class Task:
    pos: int
    live: int
    chosen: tuple[int, ...]


def split_tasks(cg: ConflictGraph, pos: int, live: int, chosen: tuple[int, ...], depth: int) -> list[Task]:
    """Expand the tree ``depth`` branching levels deep, in search order."""
    frontier = [Task(pos, live, chosen)]
    probe = Engine(cg, bound="none")
    for _ in range(depth):
        nxt_frontier = []
        for t in frontier:
            nxt, opts = probe.children(t.pos, t.live)
            if not opts:
                nxt_frontier.append(t)
                continue
            for choice, new_live in opts:
                extra = () if choice is None else (choice,)
                nxt_frontier.append(Task(nxt, new_live, t.chosen + extra))
        frontier = nxt_frontier
    return frontier


def _run_task(args: tuple) -> EngineResult:
    cg, bound, target, collect, deadline, task = args
    eng = Engine(cg, bound, target, collect, deadline)
    try:
        eng.run(task.pos, task.live, list(task.chosen))
    except SearchTimeout:
        return eng.result(complete=False)
    return eng.result()


def run_search(
    cg: ConflictGraph,
    root_live: int,
    root_chosen: tuple[int, ...] = (),
    bound: str = "cliques",
    target: int | None = None,
    collect: bool = False,
    timeout: float | None = None,
    workers: int = 1,
    split_depth: int = 2,
) -> EngineResult:
    """Run the search, optionally split into subtrees on a process pool.

    Subtree results merge by maximum (first subtree reaching it supplies the
    witness) or by summing counts, so the value, witness, count and solution
    list match a single-worker run.
    """
    deadline = None if timeout is None else time.monotonic() + timeout
    if workers <= 1:
        eng = Engine(cg, bound, target, collect, deadline)
        try:
            eng.run(0, root_live, list(root_chosen))
        except SearchTimeout:
            return eng.result(complete=False)
        return eng.result()
    tasks = split_tasks(cg, 0, root_live, root_chosen, split_depth)
    args = [(cg, bound, target, collect, deadline, t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_run_task, args))
    merged = EngineResult(best=-1, witness=None, count=0)
    for part in parts:
        merged.nodes += part.nodes
        merged.complete &= part.complete
        if part.best > merged.best:
            merged.best, merged.witness = part.best, part.witness
        merged.count += part.count
        merged.solutions.extend(part.solutions)
    return merged
