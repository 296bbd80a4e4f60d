from __future__ import annotations

from itertools import combinations

import pytest

from dhg.core import DirectedHypergraph, all_edges
from dhg.iso import canonical_form
from dhg.patterns import PatternName, classify_edge_pair
from dhg.search import (
    ConflictGraph,
    InfeasibleError,
    Limits,
    Mode,
    Objective,
    SearchProblem,
    count_labeled_extremal,
    count_per_head_maximum,
    enumerate_extremal_classes,
    extremal_search,
    is_valid_witness,
    run_search,
)
from dhg.search.engine import Engine

# (pattern, mode, n) -> (maximum, labeled graphs attaining it), frozen from a plain
# enumeration: every edge subset in standard mode, every head-or-none choice per
# triple in oriented mode, rejecting any forbidden edge pair
ORACLE = {
    ("i0", "standard", 3): (3, 1), ("i0", "standard", 4): (12, 1),
    ("i0", "oriented", 3): (1, 3), ("i0", "oriented", 4): (4, 81), ("i0", "oriented", 5): (10, 4368),
    ("i1", "standard", 3): (3, 1), ("i1", "standard", 4): (4, 81),
    ("i1", "oriented", 3): (1, 3), ("i1", "oriented", 4): (4, 9), ("i1", "oriented", 5): (10, 6),
    ("h1", "standard", 3): (3, 1), ("h1", "standard", 4): (12, 1),
    ("h1", "oriented", 3): (1, 3), ("h1", "oriented", 4): (4, 81), ("h1", "oriented", 5): (7, 480),
    ("h2", "standard", 3): (3, 1), ("h2", "standard", 4): (6, 64),
    ("h2", "oriented", 3): (1, 3), ("h2", "oriented", 4): (4, 30), ("h2", "oriented", 5): (10, 60),
    ("r3", "standard", 3): (3, 1), ("r3", "standard", 4): (4, 9),
    ("r3", "oriented", 3): (1, 3), ("r3", "oriented", 4): (4, 3), ("r3", "oriented", 5): (9, 10),
    ("r4", "standard", 3): (3, 1), ("r4", "standard", 4): (12, 1),
    ("r4", "oriented", 3): (1, 3), ("r4", "oriented", 4): (4, 81), ("r4", "oriented", 5): (10, 6),
    ("e", "standard", 3): (3, 1), ("e", "standard", 4): (6, 8),
    ("e", "oriented", 3): (1, 3), ("e", "oriented", 4): (4, 12), ("e", "oriented", 5): (10, 60),
    ("d2", "standard", 3): (1, 3), ("d2", "standard", 4): (4, 81),
    ("d2", "oriented", 3): (1, 3), ("d2", "oriented", 4): (4, 81), ("d2", "oriented", 5): (10, 59049),
    ("disjoint2", "standard", 3): (3, 1), ("disjoint2", "standard", 4): (12, 1),
    ("disjoint2", "oriented", 3): (1, 3), ("disjoint2", "oriented", 4): (4, 81),
    ("disjoint2", "oriented", 5): (10, 59049),
}  # fmt: skip


def brute_standard(n: int, name: PatternName) -> tuple[int, int]:
    edges = all_edges(n)
    bad = [(i, j) for i, j in combinations(range(len(edges)), 2) if classify_edge_pair(edges[i], edges[j]) == name]
    best, count = 0, 0
    for mask in range(1 << len(edges)):
        if any(mask >> i & 1 and mask >> j & 1 for i, j in bad):
            continue
        k = bin(mask).count("1")
        if k > best:
            best, count = k, 0
        if k == best:
            count += 1
    return best, count


@pytest.mark.parametrize("key", sorted(ORACLE))
def test_search_matches_oracle(key):
    pattern, mode, n = key
    best, count = ORACLE[key]
    out = extremal_search(SearchProblem.of(n, pattern, mode, "count_labeled_extremal"))
    assert out.complete
    assert (out.max_edges, out.labeled_count) == (best, count)
    assert is_valid_witness(out.witnesses[0], PatternName.parse(pattern), Mode(mode))
    assert len(out.witnesses[0]) == best


@pytest.mark.parametrize("name", list(PatternName))
def test_standard_oracle_is_live(name):
    for n in (3, 4):
        assert brute_standard(n, name) == ORACLE[(name.value, "standard", n)]


@pytest.mark.parametrize(
    ("n", "pattern", "mode", "value"),
    [(4, "i1", "oriented", 4), (5, "h2", "oriented", 10), (3, "i1", "standard", 3), (6, "h1", "oriented", 12),
     (5, "i1", "oriented", 10), (5, "i1", "standard", 10), (4, "i1", "standard", 4), (5, "h2", "standard", 10),
     (7, "i0", "standard", 35), (7, "i1", "standard", 21)],
)
def test_max_examples(n, pattern, mode, value):
    out = extremal_search(SearchProblem.of(n, pattern, mode))
    assert out.complete and out.max_edges == value
    assert is_valid_witness(out.witnesses[0], PatternName.parse(pattern), Mode(mode))


def test_count_examples():
    assert count_labeled_extremal(SearchProblem.of(6, "i0")) == 15625
    assert count_labeled_extremal(SearchProblem.of(5, "i1")) == 243
    assert count_labeled_extremal(SearchProblem.of(4, "h2")) == 64


def test_h2_counts_pick_the_per_pair_formula():
    for n in (4, 5):
        count = count_labeled_extremal(SearchProblem.of(n, "h2"))
        assert count == (n - 2) ** (n * (n - 1) // 2)
        assert count != (n * (n - 1) // 2) ** (n - 2)


def test_per_head_count_equals_generic_count():
    for pattern in ("i0", "i1"):
        for n in (4, 5):
            p = SearchProblem.of(n, pattern, "standard", "count_labeled_extremal")
            fast = extremal_search(p)
            generic = extremal_search(p, order=list(range(3 * n * (n - 1) * (n - 2) // 6)))
            assert (fast.max_edges, fast.labeled_count) == (generic.max_edges, generic.labeled_count)


def test_count_per_head_maximum():
    assert count_per_head_maximum(6, "i0", 0) == (4, 5)
    assert count_per_head_maximum(5, PatternName.I1, 2) == (2, 3)
    with pytest.raises(ValueError):
        count_per_head_maximum(5, "h1", 0)


def test_enumerate_classes_examples():
    reps = enumerate_extremal_classes(SearchProblem.of(5, "h2", "oriented"))
    assert len(reps) >= 1 and all(len(g) == 10 for g in reps)
    reps = enumerate_extremal_classes(SearchProblem.of(4, "i1", "oriented"))
    assert all(len(g) == 4 for g in reps)
    assert len({canonical_form(g) for g in reps}) == len(reps)


def test_enumerate_classes_against_labeled_solutions():
    # every labeled extremal graph is isomorphic to exactly one representative
    p = SearchProblem.of(4, "e", "oriented", "enumerate_classes")
    out = extremal_search(p)
    assert out.labeled_count == ORACLE[("e", "oriented", 4)][1]
    cg = ConflictGraph.build(all_edges(4), PatternName.E, oriented=True)
    res = run_search(cg, (1 << len(cg.candidates)) - 1, target=out.max_edges, collect=True)
    forms = {canonical_form(cg.graph_of(s, 4)) for s in res.solutions}
    assert forms == {canonical_form(g) for g in out.witnesses}
    assert out.class_count == len(forms)


SMALL = [(n, name, mode) for n in (3, 4) for name in PatternName for mode in Mode]


@pytest.mark.parametrize(("n", "name", "mode"), SMALL)
def test_pruning_never_changes_results(n, name, mode):
    p = SearchProblem(n, name, mode, Objective.COUNT_LABELED)
    results = {
        (bound, symmetry): extremal_search(p, bound=bound, symmetry=symmetry)
        for bound in ("cliques", "triples", "none")
        for symmetry in (True, False)
    }
    values = {(r.max_edges, r.labeled_count) for r in results.values()}
    assert len(values) == 1


@pytest.mark.parametrize(("n", "name", "mode"), SMALL)
def test_order_independence(n, name, mode):
    p = SearchProblem(n, name, mode, Objective.COUNT_LABELED)
    units = n * (n - 1) * (n - 2) // 6 * (1 if mode is Mode.ORIENTED else 3)
    forward = extremal_search(p, order=list(range(units)))
    backward = extremal_search(p, order=list(reversed(range(units))))
    assert (forward.max_edges, forward.labeled_count) == (backward.max_edges, backward.labeled_count)


@pytest.mark.parametrize(
    "problem",
    [
        SearchProblem.of(5, "h1", "oriented"),
        SearchProblem.of(5, "r3", "oriented", "count_labeled_extremal"),
        SearchProblem.of(4, "h2", "standard", "enumerate_classes"),
        SearchProblem.of(5, "e", "oriented", "enumerate_classes"),
    ],
)
def test_parallel_merge_is_bit_identical(problem):
    single = extremal_search(problem, workers=1)
    pooled = extremal_search(problem, workers=2)
    assert single.deterministic_part() == pooled.deterministic_part()


def test_split_tasks_cover_the_tree():
    cg = ConflictGraph.build(all_edges(5), PatternName.R3, oriented=True)
    full = (1 << len(cg.candidates)) - 1
    seq = run_search(cg, full, target=9, collect=True)
    par = run_search(cg, full, target=9, collect=True, workers=2, split_depth=3)
    assert seq.count == par.count == 10 and seq.solutions == par.solutions


def test_timeout_is_reported_as_incomplete():
    out = extremal_search(SearchProblem.of(5, "h2", "standard", "count_labeled_extremal"), timeout=1e-9)
    assert not out.complete


def test_limits():
    with pytest.raises(InfeasibleError):
        extremal_search(SearchProblem.of(7, "h1", "oriented"))
    with pytest.raises(InfeasibleError):
        extremal_search(SearchProblem.of(6, "h1", "standard"))
    with pytest.raises(InfeasibleError):
        extremal_search(SearchProblem.of(8, "i0", "standard"))
    with pytest.raises(InfeasibleError):
        extremal_search(SearchProblem.of(6, "h2", "oriented", "enumerate_classes"))
    with pytest.raises(InfeasibleError):
        extremal_search(SearchProblem.of(6, "disjoint2", "standard"))
    out = extremal_search(SearchProblem.of(6, "disjoint2", "standard"), limits=Limits(standard=6))
    assert out.complete
    assert is_valid_witness(out.witnesses[0], PatternName.DISJOINT2, Mode.STANDARD)


def test_argument_validation():
    with pytest.raises(ValueError):
        ConflictGraph.build(all_edges(4), PatternName.I0, oriented=True, unit_order=[0, 0, 1, 2])
    cg = ConflictGraph.build(all_edges(3), PatternName.I0, oriented=True)
    with pytest.raises(ValueError):
        Engine(cg, bound="loose")


def test_conflict_graph_encodes_pattern_pairs():
    edges = all_edges(4)
    cg = ConflictGraph.build(edges, PatternName.H2, oriented=False)
    for i, j in combinations(range(len(edges)), 2):
        clash = bool(cg.conflict[i] >> j & 1)
        assert clash == (classify_edge_pair(edges[i], edges[j]) == PatternName.H2)
    assert DirectedHypergraph(4).n == cg.graph_of([], 4).n
