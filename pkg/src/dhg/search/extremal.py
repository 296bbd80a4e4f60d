"""Exact extremal numbers, labeled extremal counts and extremal classes."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from math import prod

from ..core import DirectedHypergraph, all_edges
from ..iso import canonical_form
from ..patterns import PatternName, get_pattern
from .engine import ConflictGraph, run_search


class Mode(str, Enum):
    STANDARD = "standard"
    ORIENTED = "oriented"


class Objective(str, Enum):
    MAX_EDGES = "max_edges"
    COUNT_LABELED = "count_labeled_extremal"
    ENUMERATE_CLASSES = "enumerate_classes"


class InfeasibleError(ValueError):
    """The instance is beyond the configured feasibility limits."""


@dataclass(frozen=True)
class Limits:
    oriented: int = 6
    standard: int = 5
    standard_per_head: int = 7
    classes: int = 5


DEFAULT_LIMITS = Limits()

# patterns whose two edges share their head: standard-mode constraints split per head
PER_HEAD_PATTERNS = frozenset({PatternName.I0, PatternName.I1})


@dataclass(frozen=True)
class SearchProblem:
    n: int
    pattern: PatternName
    mode: Mode = Mode.STANDARD
    objective: Objective = Objective.MAX_EDGES

    @classmethod
    def of(cls, n: int, pattern: str, mode: str = "standard", objective: str = "max_edges") -> SearchProblem:
        return cls(n, PatternName.parse(pattern), Mode(mode), Objective(objective))

    @property
    def per_head(self) -> bool:
        return self.mode is Mode.STANDARD and self.pattern in PER_HEAD_PATTERNS

    def check_limits(self, limits: Limits = DEFAULT_LIMITS) -> None:
        if self.n < 0:
            raise InfeasibleError("n must be non-negative")
        if self.mode is Mode.ORIENTED:
            cap = limits.oriented
        elif self.per_head:
            cap = limits.standard_per_head
        else:
            cap = limits.standard
        if self.objective is Objective.ENUMERATE_CLASSES and not self.per_head:
            cap = min(cap, limits.classes)
        if self.n > cap:
            raise InfeasibleError(
                f"n={self.n} exceeds the limit {cap} for {self.pattern.value}/{self.mode.value}/{self.objective.value}"
            )


@dataclass
class SearchOutcome:
    max_edges: int
    witnesses: list[DirectedHypergraph] = field(default_factory=list)
    labeled_count: int | None = None
    class_count: int | None = None
    nodes_expanded: int = 0
    wall_time: float = 0.0
    complete: bool = True

    def deterministic_part(self) -> tuple:
        """Everything except search statistics."""
        return (
            self.max_edges,
            tuple(tuple(g.sorted_edges()) for g in self.witnesses),
            self.labeled_count,
            self.class_count,
            self.complete,
        )


def _conflict_graph(problem: SearchProblem, order: list[int] | None) -> ConflictGraph:
    return ConflictGraph.build(
        all_edges(problem.n),
        problem.pattern,
        oriented=problem.mode is Mode.ORIENTED,
        unit_order=order,
    )


def _head_conflict_graph(n: int, pattern: PatternName, x: int) -> ConflictGraph:
    cands = [e for e in all_edges(n) if e.head == x]
    return ConflictGraph.build(cands, pattern, oriented=False)


def count_per_head_maximum(n: int, pattern: str | PatternName, x: int) -> tuple[int, int]:
    """Largest tail degree of head ``x`` under an I-type pattern, and how many tail sets reach it."""
    name = PatternName.parse(pattern) if isinstance(pattern, str) else pattern
    if name not in PER_HEAD_PATTERNS:
        raise ValueError(f"{name.value} does not decompose per head")
    cg = _head_conflict_graph(n, name, x)
    full = (1 << len(cg.candidates)) - 1
    best = run_search(cg, full).best
    count = run_search(cg, full, target=best).count
    return best, count


def _root(cg: ConflictGraph, symmetric: bool) -> tuple[int, tuple[int, ...]]:
    """Live mask and forced choices at the root.

    With ``symmetric`` the first branching unit gets the edge ``ij -> k`` on
    its triple ``i < j < k`` (or its single edge): any non-empty graph can be
    relabelled to contain it, so the optimum is unchanged.
    """
    full = (1 << len(cg.candidates)) - 1
    if not symmetric or not cg.units:
        return full, ()
    unit = cg.units[0]
    idx = next(
        i for i in range(len(cg.candidates))
        if unit >> i & 1 and cg.candidates[i].head == max(cg.candidates[i].triple)
    ) if unit & (unit - 1) else unit.bit_length() - 1
    live = full & ~cg.conflict[idx] & ~(1 << idx) & ~unit
    return live, (idx,)


def _maximum(
    problem: SearchProblem,
    bound: str,
    order: list[int] | None,
    symmetry: bool,
    workers: int,
    timeout: float | None,
) -> tuple[int, DirectedHypergraph | None, int, bool]:
    n = problem.n
    if problem.per_head and order is None:
        total, nodes, edges = 0, 0, []
        for x in range(n):
            cg = _head_conflict_graph(n, problem.pattern, x)
            res = run_search(cg, (1 << len(cg.candidates)) - 1, bound=bound, timeout=timeout)
            if not res.complete:
                return total, None, nodes, False
            total += max(res.best, 0)
            nodes += res.nodes
            edges += [cg.candidates[i] for i in res.witness or ()]
        return total, DirectedHypergraph(n, frozenset(edges)), nodes, True
    cg = _conflict_graph(problem, order)
    live, chosen = _root(cg, symmetry)
    res = run_search(cg, live, chosen, bound=bound, timeout=timeout, workers=workers)
    witness = cg.graph_of(res.witness, n) if res.witness is not None else None
    return max(res.best, 0), witness, res.nodes, res.complete


def _count(
    problem: SearchProblem,
    target: int,
    bound: str,
    order: list[int] | None,
    collect: bool,
    workers: int,
    timeout: float | None,
) -> tuple[int, list[DirectedHypergraph], int, bool]:
    n = problem.n
    if problem.per_head and order is None and not collect:
        counts, nodes = [], 0
        for x in range(n):
            cg = _head_conflict_graph(n, problem.pattern, x)
            full = (1 << len(cg.candidates)) - 1
            best = run_search(cg, full, bound=bound).best
            res = run_search(cg, full, bound=bound, target=best, timeout=timeout)
            if not res.complete:
                return 0, [], nodes, False
            counts.append(res.count)
            nodes += res.nodes
        return prod(counts), [], nodes, True
    cg = _conflict_graph(problem, order)
    full = (1 << len(cg.candidates)) - 1
    res = run_search(cg, full, bound=bound, target=target, collect=collect, timeout=timeout, workers=workers)
    graphs = [cg.graph_of(s, n) for s in res.solutions]
    return res.count, graphs, res.nodes, res.complete


def extremal_search(
    problem: SearchProblem,
    bound: str = "cliques",
    order: list[int] | None = None,
    symmetry: bool = True,
    workers: int = 1,
    timeout: float | None = None,
    limits: Limits = DEFAULT_LIMITS,
) -> SearchOutcome:
    """Solve ``problem`` exactly by complete search.

    ``order`` permutes the branching units (triples in oriented mode, edges in
    standard mode); ``bound`` selects the optimistic bound.  A timeout yields
    an outcome with ``complete=False`` carrying the best value seen.
    """
    problem.check_limits(limits)
    start = time.monotonic()
    use_symmetry = symmetry and order is None
    best, witness, nodes, complete = _maximum(problem, bound, order, use_symmetry, workers, timeout)
    outcome = SearchOutcome(max_edges=best, nodes_expanded=nodes, complete=complete)
    if witness is not None:
        outcome.witnesses = [witness]
    if complete and problem.objective is not Objective.MAX_EDGES:
        collect = problem.objective is Objective.ENUMERATE_CLASSES
        remaining = None if timeout is None else max(0.0, timeout - (time.monotonic() - start))
        count, graphs, more_nodes, complete = _count(problem, best, bound, order, collect, workers, remaining)
        outcome.nodes_expanded += more_nodes
        outcome.complete = complete
        outcome.labeled_count = count
        if collect:
            seen = set()
            reps = []
            for g in graphs:
                form = canonical_form(g)
                if form not in seen:
                    seen.add(form)
                    reps.append(g)
            outcome.witnesses = reps
            outcome.class_count = len(reps)
    outcome.wall_time = time.monotonic() - start
    return outcome


def count_labeled_extremal(problem: SearchProblem, **kwargs) -> int:
    p = SearchProblem(problem.n, problem.pattern, problem.mode, Objective.COUNT_LABELED)
    out = extremal_search(p, **kwargs)
    if not out.complete or out.labeled_count is None:
        raise InfeasibleError("count did not complete")
    return out.labeled_count


def enumerate_extremal_classes(problem: SearchProblem, **kwargs) -> list[DirectedHypergraph]:
    p = SearchProblem(problem.n, problem.pattern, problem.mode, Objective.ENUMERATE_CLASSES)
    out = extremal_search(p, **kwargs)
    if not out.complete:
        raise InfeasibleError("enumeration did not complete")
    return out.witnesses


def is_valid_witness(graph: DirectedHypergraph, pattern: PatternName, mode: Mode) -> bool:
    from ..patterns import contains_pattern

    if mode is Mode.ORIENTED and not graph.is_oriented():
        return False
    return not contains_pattern(graph, get_pattern(pattern))


