from __future__ import annotations

from itertools import combinations

import pytest

from dhg.search import check_intersection_structure, verify_structure_lemma
from dhg.search.undirected import edge_bound, valid_hypergraphs


def test_k4_is_one_component():
    r = check_intersection_structure(combinations(range(4), 3), 6)
    assert r.valid and r.decomposes
    assert [c.label for c in r.components] == ["K4"]


def test_single_vertex_overlap_is_invalid():
    r = check_intersection_structure([(0, 1, 2), (2, 3, 4)], 5)
    assert not r.valid


def test_component_labels():
    r = check_intersection_structure([(0, 1, 2), (0, 1, 3), (0, 2, 3)], 4)
    assert [c.label for c in r.components] == ["K4_minus"]
    r = check_intersection_structure([(0, 1, 2), (0, 1, 3), (0, 1, 4), (5, 6, 7)], 8)
    assert sorted(c.label for c in r.components) == ["sunflower(1)", "sunflower(3)"]


@pytest.mark.parametrize("n", range(3, 8))
def test_edge_bound_is_the_maximum(n):
    assert edge_bound(n) == max(len(u) for u in valid_hypergraphs(n))


@pytest.mark.parametrize(("n", "best", "count"), [(6, 4, 271), (7, 5, 1212), (8, 8, 10158)])
def test_lemma_exhaustively(n, best, count):
    check = verify_structure_lemma(n)
    assert (check.max_edges, check.hypergraphs) == (best, count)
    assert check.bound == best and check.holds


def test_enumerator_against_filter():
    n = 5
    triples = list(combinations(range(n), 3))
    want = 0
    for mask in range(1 << len(triples)):
        chosen = [t for i, t in enumerate(triples) if mask >> i & 1]
        want += all(len(set(s) & set(t)) != 1 for s, t in combinations(chosen, 2))
    assert sum(1 for _ in valid_hypergraphs(n)) == want
