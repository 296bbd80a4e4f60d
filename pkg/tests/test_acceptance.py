"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

from __future__ import annotations

import random
import time
import warnings
from math import comb

import pytest

from dhg import constructions as C
from dhg.generators import greedy_free_graph, random_deletion
from dhg.iso import canonical_form
from dhg.patterns import PatternName, is_free
from dhg.search import (
    Mode,
    SearchProblem,
    count_labeled_extremal,
    extremal_search,
    is_valid_witness,
    multiedge_pair_check,
    multiedge_profile,
    saturate_multiedge,
    verify_structure_lemma,
)
from dhg.verify import canon_invariance, i0_gate_audits, link_sums, order_independence


@pytest.fixture
def report(capsys):
    def emit(criterion: int, name: str, checks: dict[str, bool], elapsed: float, limit: float) -> None:
        checks = dict(checks, **{f"time<{limit:g}s": elapsed < limit})
        failed = [k for k, ok in checks.items() if not ok]
        with capsys.disabled():
            status = "PASS" if not failed else "FAIL"
            print(f"\nacceptance criterion={criterion} {name} {status} time={elapsed:.1f}s" +
                  (f" failed={','.join(failed)}" if failed else ""))
        assert not failed, failed

    return emit


def quiet(fn, *args):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return fn(*args)


def valid(g, pattern: str, oriented: bool) -> bool:
    return (g.is_oriented() or not oriented) and is_free(g, PatternName.parse(pattern))


def search_max(n: int, pattern: str, mode: str, timeout: float | None = None) -> int | None:
    out = extremal_search(SearchProblem.of(n, pattern, mode), timeout=timeout)
    if not out.complete:
        return None
    assert is_valid_witness(out.witnesses[0], PatternName.parse(pattern), Mode(mode))
    return out.max_edges


def test_criterion_1_i0_standard(report):
    start = time.monotonic()
    checks = {}
    for n in range(5, 13):
        g = C.build_i0_standard(n, C.successor_function(n))
        checks[f"construction.n{n}"] = valid(g, "i0", False) and len(g) == n * (n - 2)
    checks["constructions<1s"] = time.monotonic() - start < 1.0
    checks["labeled.n6=15625"] = count_labeled_extremal(SearchProblem.of(6, "i0")) == 15625
    report(1, "i0-standard", checks, time.monotonic() - start, 60)


I0_ORIENTED_EDGES = {9: 57, 10: 72, 11: 90, 12: 112, 13: 133, 14: 157}
I0_ORIENTED_CLASSES = {9: 1, 10: 18, 11: 32, 12: 1, 13: 18, 14: 32}


def test_criterion_2_i0_oriented(report):
    start = time.monotonic()
    checks = {}
    for n, edges in I0_ORIENTED_EDGES.items():
        g = C.build_i0_oriented(n)
        checks[f"construction.n{n}"] = valid(g, "i0", True) and len(g) == edges == C.expected_edges("i0", "oriented", n)
        classes = C.enumerate_i0_oriented_classes(n)
        forms = {canonical_form(h) for _, h in classes}
        checks[f"classes.n{n}"] = len(forms) == len(classes) == I0_ORIENTED_CLASSES[n]
        checks[f"classes.valid.n{n}"] = all(valid(h, "i0", True) and len(h) == edges for _, h in classes)
    checks["gate-audits.1000"] = i0_gate_audits(1000)
    report(2, "i0-oriented", checks, time.monotonic() - start, 300)


@pytest.mark.xfail(strict=True, reason="listed values for n=12..14 disagree with the closed-form edge counts")
def test_i0_oriented_listed_edge_counts():
    listed = {12: 108, 13: 126, 14: 147}
    assert all(len(C.build_i0_oriented(n)) == v for n, v in listed.items())


def test_criterion_3_i1(report):
    start = time.monotonic()
    checks = {}
    for n in (4, 5):
        for mode in ("standard", "oriented"):
            checks[f"search.{mode}.n{n}"] = search_max(n, "i1", mode) == n * ((n - 1) // 2)
    checks["labeled.n5=243"] = count_labeled_extremal(SearchProblem.of(5, "i1")) == 243
    for n in range(4, 13):
        want = n * ((n - 1) // 2)
        checks[f"standard.n{n}"] = valid(C.build_i1_standard(n), "i1", False) and len(C.build_i1_standard(n)) == want
        checks[f"oriented.n{n}"] = valid(C.build_i1_oriented(n), "i1", True) and len(C.build_i1_oriented(n)) == want
    report(3, "i1", checks, time.monotonic() - start, 60)


def test_criterion_4_h1_oriented(report):
    start = time.monotonic()
    checks = {}
    for n in range(6, 13):
        g = C.build_h1_oriented(n)
        checks[f"construction.n{n}"] = valid(g, "h1", True) and len(g) == (n // 2) * (n - 2)
    # DERIVED: the closed form starts at n = 6; exhaustive enumeration gives 7 at n = 5
    checks["search.n5=7"] = search_max(5, "h1", "oriented") == 7
    value = search_max(6, "h1", "oriented", timeout=600.0)
    checks["search.n6=12"] = value == 12
    report(4, "h1-oriented", checks, time.monotonic() - start, 660)


def test_criterion_5_h1_standard(report):
    start = time.monotonic()
    checks = {}
    for n in range(8, 13):
        g = quiet(C.build_h1_standard, n)
        checks[f"construction.n{n}"] = valid(g, "h1", False) and len(g) == comb(n + 1, 2) - 3
        prof = multiedge_profile(g)
        core = set.intersection(*(set(t) for t in prof.multiedge_triples))
        checks[f"sunflower.n{n}"] = prof.m_H == n - 2 and len(core) == 2
    rng = random.Random(5)
    ok = True
    for i in range(1000):
        n = rng.randint(5, 10)
        g = random_deletion(rng, quiet(C.build_h1_standard, n)) if i % 3 == 0 else greedy_free_graph(
            rng, n, PatternName.H1, oriented=False
        )
        ok &= multiedge_pair_check(g)
        for t, es in g.edges_by_triple().items():
            if len(es) >= 2:
                sat = saturate_multiedge(g, t)
                ok &= is_free(sat, PatternName.H1) and len(sat) == len(g) + 3 - len(es)
    checks["random.1000"] = ok
    report(5, "h1-standard", checks, time.monotonic() - start, 300)


def test_criterion_6_undirected_lemma(report):
    start = time.monotonic()
    checks = {}
    for n, bound in ((6, 4), (7, 5), (8, 8)):
        lemma = verify_structure_lemma(n)
        checks[f"n{n}"] = lemma.max_edges == bound and lemma.all_decompose
    report(6, "undirected-lemma", checks, time.monotonic() - start, 300)


def test_criterion_7_h2(report):
    start = time.monotonic()
    checks = {
        "standard.n4=6": search_max(4, "h2", "standard") == 6,
        # DERIVED: four vertices carry only four triples, so the oriented value is 4
        "oriented.n4=4": search_max(4, "h2", "oriented") == 4,
        "standard.n5=10": search_max(5, "h2", "standard") == 10,
        "oriented.n5=10": search_max(5, "h2", "oriented") == 10,
    }
    for n in range(5, 13):
        want = comb(n, 2)
        checks[f"standard.n{n}"] = valid(C.build_h2_standard(n), "h2", False) and len(C.build_h2_standard(n)) == want
        checks[f"oriented.n{n}"] = valid(C.build_h2_oriented(n), "h2", True) and len(C.build_h2_oriented(n)) == want
    for n, count in ((4, 64), (5, 59049)):
        value = count_labeled_extremal(SearchProblem.of(n, "h2"))
        candidates = C.h2_labeled_count_candidates(n)
        checks[f"labeled.n{n}={count}"] = value == count == candidates["(n-2)^C(n,2)"]
        checks[f"labeled.n{n}.other-form-differs"] = value != candidates["C(n,2)^(n-2)"]
    report(7, "h2", checks, time.monotonic() - start, 120)


def test_criterion_8_properties(report):
    start = time.monotonic()
    checks = {
        "link-sums.10000": link_sums(10_000),
        "canon-invariance.1000": canon_invariance(1000),
        "order-independence.n<=4": order_independence(4),
    }
    report(8, "properties", checks, time.monotonic() - start, 300)
