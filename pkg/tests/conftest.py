from __future__ import annotations

from hypothesis import strategies as st

from dhg.core import DirectedHypergraph, all_edges


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7, oriented: bool | None = None):
    n = draw(st.integers(min_n, max_n))
    want_oriented = draw(st.booleans()) if oriented is None else oriented
    cands = all_edges(n)
    picked = draw(st.lists(st.sampled_from(cands), unique=True, max_size=len(cands))) if cands else []
    if want_oriented:
        seen, kept = set(), []
        for e in picked:
            if e.triple not in seen:
                seen.add(e.triple)
                kept.append(e)
        picked = kept
    return DirectedHypergraph(n, frozenset(picked))


@st.composite
def graph_and_permutation(draw, max_n: int = 8):
    g = draw(graphs(max_n=max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, list(perm)
