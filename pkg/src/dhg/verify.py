"""Reproducible checks of the extremal results, reported claim by claim."""

from __future__ import annotations

import random
import time
import warnings
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from . import constructions as C
from .core import DirectedHypergraph
from .gates import AuditViolation, GateError, audit_graph
from .generators import greedy_free_graph, random_deletion, random_graph, random_permutation
from .iso import apply_permutation, canonical_form
from .patterns import PatternName, is_free
from .search import (
    InfeasibleError,
    Mode,
    SearchProblem,
    count_labeled_extremal,
    disjoint_tail_pair_check,
    extremal_search,
    is_valid_witness,
    multiedge_pair_check,
    multiedge_profile,
    saturate_multiedge,
    verify_structure_lemma,
)

SCOPES = ("all", "i0", "i1", "h1", "h2")
STATUSES = ("pass", "fail", "skipped-infeasible")

H1_SEARCH_BUDGET = 600.0


@dataclass(frozen=True)
class Claim:
    claim_id: str
    scope: str  # one of SCOPES other than "all", or "props"
    location: str
    expected: int | bool | str
    run: Callable[[], object] = field(compare=False)


@dataclass
class Entry:
    claim_id: str
    location: str
    expected: int | bool | str
    actual: object
    status: str
    seconds: float

    def line(self) -> str:
        return (
            f"claim={self.claim_id} status={self.status} expected={self.expected} "
            f"actual={self.actual} location={self.location!r} time={self.seconds:.2f}"
        )


@dataclass
class VerificationReport:
    scope: str
    entries: list[Entry] = field(default_factory=list)

    @property
    def failures(self) -> list[Entry]:
        return [e for e in self.entries if e.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        return [e.line() for e in self.entries]

    def deterministic_lines(self) -> list[str]:
        return [line.rsplit(" time=", 1)[0] for line in self.lines()]


class Infeasible(Exception):
    """Raised by a claim that ran out of its time budget."""


# ---------------------------------------------------------------- helpers


def _quiet(fn: Callable[..., DirectedHypergraph], *args) -> DirectedHypergraph:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return fn(*args)


def _construction_size(g: DirectedHypergraph, pattern: PatternName, oriented: bool) -> int | str:
    """Edge count of a valid construction, or a short reason it is invalid."""
    if oriented and not g.is_oriented():
        return "not-oriented"
    if not is_free(g, pattern):
        return f"contains-{pattern.value}"
    return len(g)


def _search_value(n: int, pattern: str, mode: str, budget: float | None = None) -> int:
    problem = SearchProblem.of(n, pattern, mode)
    out = extremal_search(problem, timeout=budget)
    if not out.complete:
        raise Infeasible(f"search stopped after {out.wall_time:.0f}s with best {out.max_edges}")
    if out.witnesses and not is_valid_witness(out.witnesses[0], problem.pattern, problem.mode):
        return -1
    return out.max_edges


def _count_value(n: int, pattern: str) -> int:
    return count_labeled_extremal(SearchProblem.of(n, pattern, "standard"))


# ---------------------------------------------------------------- property batteries


def i0_gate_audits(cases: int = 1000, seed: int = 0) -> bool:
    """Audits hold on constructions and on random I0-free oriented graphs with n >= 8."""
    rng = random.Random(seed)
    graphs = []
    for n in range(9, 15):
        for v in C.all_i0_oriented_completions(n):
            graphs.append(C.build_i0_oriented(n, v))
    base = list(graphs)
    while len(graphs) < len(base) + cases:
        if len(graphs) % 2:
            graphs.append(random_deletion(rng, rng.choice(base)))
        else:
            n = rng.randint(8, 12)
            graphs.append(greedy_free_graph(rng, n, PatternName.I0, oriented=True))
    for g in graphs:
        if not g.is_oriented() or not is_free(g, PatternName.I0):
            return False
        try:
            audit_graph(g)
        except (AuditViolation, GateError):
            return False
    return True


def h1_multiedge_battery(cases: int = 1000, seed: int = 0) -> bool:
    """Multiedge pair check and saturation on random H1-free graphs."""
    rng = random.Random(seed)
    for i in range(cases):
        n = rng.randint(5, 10)
        if i % 3 == 0:
            g = random_deletion(rng, _quiet(C.build_h1_standard, max(n, 4)))
        else:
            g = greedy_free_graph(rng, n, PatternName.H1, oriented=False)
        if not multiedge_pair_check(g):
            return False
        for t, edges in g.edges_by_triple().items():
            if len(edges) >= 2:
                sat = saturate_multiedge(g, t)
                if not is_free(sat, PatternName.H1) or len(sat) != len(g) + 3 - len(edges):
                    return False
    return True


def h1_oriented_tail_pairs(cases: int = 300, seed: int = 0) -> bool:
    rng = random.Random(seed)
    for i in range(cases):
        n = rng.randint(6, 11)
        if i % 2:
            g = random_deletion(rng, _quiet(C.build_h1_oriented, n))
        else:
            g = greedy_free_graph(rng, n, PatternName.H1, oriented=True)
        if not disjoint_tail_pair_check(g):
            return False
    return True


def link_sums(cases: int = 10_000, seed: int = 0) -> bool:
    rng = random.Random(seed)
    for _ in range(cases):
        g = random_graph(rng, rng.randint(3, 8))
        m = len(g)
        if sum(len(g.tail_link_graph(x)) for x in range(g.n)) != m:
            return False
        if sum(len(g.directed_link_graph(x)) for x in range(g.n)) != 2 * m:
            return False
        if sum(g.tail_counts().values()) != m:
            return False
    return True


def canon_invariance(cases: int = 1000, seed: int = 0) -> bool:
    rng = random.Random(seed)
    for _ in range(cases):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, oriented=rng.random() < 0.5)
        h = apply_permutation(g, random_permutation(rng, n))
        if canonical_form(g) != canonical_form(h):
            return False
    return True


def order_independence(max_n: int = 4, seed: int = 0) -> bool:
    """Every pattern and mode at n <= ``max_n``: reversed and shuffled unit orders agree."""
    rng = random.Random(seed)
    for n in range(3, max_n + 1):
        for name in PatternName:
            for mode in Mode:
                base = SearchProblem(n, name, mode)
                ref = extremal_search(base, symmetry=False)
                units = n * (n - 1) * (n - 2) // 6 if mode is Mode.ORIENTED else 3 * comb(n, 3)
                orders = [list(reversed(range(units))), random_permutation(rng, units)]
                for order in orders:
                    out = extremal_search(base, order=order)
                    if out.max_edges != ref.max_edges:
                        return False
                    for bound in ("triples", "none"):
                        if extremal_search(base, bound=bound, order=order).max_edges != ref.max_edges:
                            return False
    return True


# ---------------------------------------------------------------- claim table


def _claims() -> list[Claim]:
    out: list[Claim] = []
    add = out.append

    # I0 standard
    for n in range(5, 13):
        add(Claim(f"i0.standard.construction.n{n}", "i0", "I0 standard theorem: H_f edge count",
                  n * (n - 2),
                  lambda n=n: _construction_size(C.build_i0_standard(n, C.successor_function(n)), PatternName.I0, False)))
    add(Claim("i0.standard.search.n5", "i0", "I0 standard theorem at n=5", 15,
              lambda: _search_value(5, "i0", "standard")))
    for n in (6, 7):
        add(Claim(f"i0.standard.labeled-count.n{n}", "i0", "I0 standard theorem: (n-1)^n labeled extremal graphs",
                  (n - 1) ** n, lambda n=n: C.enumerate_i0_standard_extremal(n)))

    # I0 oriented
    for n in range(9, 15):
        add(Claim(f"i0.oriented.construction.n{n}", "i0", "I0 oriented theorem: residue formula",
                  C.expected_edges("i0", "oriented", n),
                  lambda n=n: _construction_size(C.build_i0_oriented(n), PatternName.I0, True)))
    for n in range(9, 15):
        add(Claim(f"i0.oriented.classes.n{n}", "i0", "I0 oriented theorem: number of extremal classes",
                  {0: 1, 1: 18, 2: 32}[n % 3], lambda n=n: len(C.enumerate_i0_oriented_classes(n))))
    add(Claim("i0.oriented.gate-audits", "i0", "component bounds on gates, n >= 8", True, i0_gate_audits))
    add(Claim("i0.oriented.search.n9", "i0", "I0 oriented optimum by direct search", "n/a",
              _i0_oriented_direct_search))

    # I1
    for n in (4, 5):
        for mode in ("standard", "oriented"):
            add(Claim(f"i1.{mode}.search.n{n}", "i1", "I1 theorem: n*floor((n-1)/2)", n * ((n - 1) // 2),
                      lambda n=n, mode=mode: _search_value(n, "i1", mode)))
    add(Claim("i1.standard.search.n3", "i1", "all three edges of one triple", 3,
              lambda: _search_value(3, "i1", "standard")))
    add(Claim("i1.standard.labeled-count.n5", "i1", "I1 theorem: matching-count formula", 243,
              lambda: _count_value(5, "i1")))
    for n in range(4, 13):
        for mode in ("standard", "oriented"):
            build = C.build_i1_standard if mode == "standard" else C.build_i1_oriented
            add(Claim(f"i1.{mode}.construction.n{n}", "i1", "I1 theorem: construction edge count",
                      n * ((n - 1) // 2),
                      lambda n=n, b=build, mode=mode: _construction_size(_quiet(b, n), PatternName.I1, mode == "oriented")))

    # H1 oriented
    for n in range(6, 13):
        add(Claim(f"h1.oriented.construction.n{n}", "h1", "H1 oriented theorem: floor(n/2)(n-2)",
                  (n // 2) * (n - 2),
                  lambda n=n: _construction_size(C.build_h1_oriented(n), PatternName.H1, True)))
    for n in (7, 9, 11):
        add(Claim(f"h1.oriented.construction-single-head.n{n}", "h1", "H1 oriented odd alternative",
                  comb(n - 1, 2),
                  lambda n=n: _construction_size(C.build_h1_oriented(n, "single-head"), PatternName.H1, True)))
    add(Claim("h1.oriented.search.n5", "h1", "below the oriented threshold; exhaustive value", 7,
              lambda: _search_value(5, "h1", "oriented")))
    add(Claim("h1.oriented.search.n6", "h1", "H1 oriented theorem at n=6", 12,
              lambda: _search_value(6, "h1", "oriented", H1_SEARCH_BUDGET)))
    add(Claim("h1.oriented.disjoint-tail-pairs", "h1", "heavy tail pairs are disjoint", True,
              h1_oriented_tail_pairs))

    # H1 standard
    for n in range(8, 13):
        add(Claim(f"h1.standard.construction.n{n}", "h1", "H1 standard theorem: C(n+1,2)-3",
                  comb(n + 1, 2) - 3,
                  lambda n=n: _construction_size(C.build_h1_standard(n), PatternName.H1, False)))
        add(Claim(f"h1.standard.sunflower.n{n}", "h1", "multiedge triples form a sunflower with n-2 petals",
                  True, lambda n=n: _is_sunflower(C.build_h1_standard(n))))
    add(Claim("h1.standard.multiedge-battery", "h1", "multiedge pair check and saturation", True,
              h1_multiedge_battery))
    for n, bound in ((6, 4), (7, 5), (8, 8)):
        add(Claim(f"h1.undirected-lemma.n{n}", "h1", "undirected intersection lemma", bound,
                  lambda n=n: _lemma_value(n)))

    # H2
    for n in (4, 5):
        add(Claim(f"h2.standard.search.n{n}", "h2", "H2 theorem: C(n,2)", comb(n, 2),
                  lambda n=n: _search_value(n, "h2", "standard")))
    # four vertices carry only C(4,3) = 4 triples, fewer than C(4,2)
    add(Claim("h2.oriented.search.n4", "h2", "no claim at n=4; C(4,2)=6 exceeds the 4 triples", 4,
              lambda: _search_value(4, "h2", "oriented")))
    add(Claim("h2.oriented.search.n5", "h2", "H2 theorem: C(n,2)", 10,
              lambda: _search_value(5, "h2", "oriented")))
    for n in range(5, 13):
        add(Claim(f"h2.standard.construction.n{n}", "h2", "H2 theorem: pair-function construction",
                  comb(n, 2), lambda n=n: _construction_size(C.build_h2_standard(n), PatternName.H2, False)))
        add(Claim(f"h2.oriented.construction.n{n}", "h2", "H2 theorem: G_n construction",
                  comb(n, 2), lambda n=n: _construction_size(C.build_h2_oriented(n), PatternName.H2, True)))
    for n, value in ((4, 64), (5, 59049)):
        add(Claim(f"h2.standard.labeled-count.n{n}", "h2", "H2 labeled count: enumeration vs both closed forms",
                  value, lambda n=n: _count_value(n, "h2")))
        add(Claim(f"h2.standard.count-formula.n{n}", "h2", "H2 labeled count: which closed form matches",
                  "(n-2)^C(n,2)", lambda n=n: _matching_formula(n)))

    # cross-cutting
    add(Claim("props.link-sums", "props", "sum|T_x| = |E|, sum|D_x| = 2|E|, sum t = |E|", True, link_sums))
    add(Claim("props.canon-invariance", "props", "canonical form under relabelling", True, canon_invariance))
    add(Claim("props.order-independence", "props", "search value independent of branching order", True,
              order_independence))
    return out


def _i0_oriented_direct_search() -> int:
    # the theorem starts at n = 9, far past the oriented search limit
    return _search_value(9, "i0", "oriented")


def _is_sunflower(g: DirectedHypergraph) -> bool:
    prof = multiedge_profile(g)
    triples = prof.multiedge_triples
    core = set.intersection(*(set(t) for t in triples)) if triples else set()
    return prof.m_H == g.n - 2 and len(core) == 2 and multiedge_pair_check(g)


def _lemma_value(n: int) -> int | str:
    check = verify_structure_lemma(n)
    return check.max_edges if check.all_decompose else "undecomposed-component"


def _matching_formula(n: int) -> str:
    value = _count_value(n, "h2")
    hits = [name for name, v in C.h2_labeled_count_candidates(n).items() if v == value]
    return ",".join(hits) or "neither"


CLAIMS = _claims()


def claims_for(scope: str) -> list[Claim]:
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    return [c for c in CLAIMS if scope == "all" or c.scope == scope]


def run_claim(claim: Claim) -> Entry:
    start = time.monotonic()
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            actual = claim.run()
        status = "pass" if actual == claim.expected else "fail"
    except (Infeasible, InfeasibleError) as exc:
        actual, status = f"skipped: {exc}", "skipped-infeasible"
    return Entry(claim.claim_id, claim.location, claim.expected, actual, status, time.monotonic() - start)


def verify(scope: str = "all", progress: Callable[[Entry], None] | None = None) -> VerificationReport:
    report = VerificationReport(scope)
    for claim in claims_for(scope):
        entry = run_claim(claim)
        report.entries.append(entry)
        if progress:
            progress(entry)
    return report


__all__ = [
    "CLAIMS",
    "Claim",
    "Entry",
    "SCOPES",
    "VerificationReport",
    "claims_for",
    "run_claim",
    "verify",
]
