"""Extremal and lower-bound constructions for I0, I1, H1 and H2.

Every builder returns a :class:`DirectedHypergraph`; closed-form edge counts
live next to them in :func:`expected_edges`.  Builders below a theorem's
threshold still run when the construction is well defined, with a warning.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Callable, Mapping, Sequence

from .core import DirectedHypergraph, Edge, GraphError
from .iso import canonical_form


class ConstructionError(ValueError):
    pass


def _below_threshold(name: str, n: int, threshold: int) -> None:
    if n < threshold:
        warnings.warn(
            f"{name} at n={n} is below n={threshold}; no extremality claim",
            stacklevel=3,
        )


# ---------------------------------------------------------------- I0 standard


def build_i0_standard(n: int, f: Sequence[int]) -> DirectedHypergraph:
    """H_f: every ``f(x) y -> x`` for ``y`` not in ``{x, f(x)}``."""
    if len(f) != n or any(not 0 <= f[x] < n or f[x] == x for x in range(n)):
        raise ConstructionError(f"gatekeeper function must map 0..{n - 1} to other vertices: {list(f)}")
    _below_threshold("I0 standard", n, 5)
    return DirectedHypergraph(
        n,
        frozenset(Edge.of(f[x], y, x) for x in range(n) for y in range(n) if y not in (x, f[x])),
    )


def successor_function(n: int) -> list[int]:
    return [(x + 1) % n for x in range(n)]


# ---------------------------------------------------------------- I0 oriented
#
# Gate layout: directed triangles 3i -> 3i+1 -> 3i+2 -> 3i, then one
# non-triangle component on the last 4 or 5 vertices.  Each arc a -> b
# contributes every {a, v} -> b; a triple carrying several of these keeps
# exactly one, chosen below.

SHAPES_BY_RESIDUE = {0: ("triangles",), 1: ("C4", "C3+edge"), 2: ("C5", "C3+path2")}

# vertex roles inside the tail component, by position among its 4 or 5 ids
_C3_EDGE_ROLES = ("x", "y", "z", "a")
_C3_PATH_ROLES = ("x", "y", "z", "a", "b")

# mutually exclusive choices, each option an edge written with role letters
_C3_EDGE_CHOICES = (
    (("xa", "y"), ("xy", "a")),
    (("za", "x"), ("xz", "a")),
    (("zx", "y"), ("yz", "x"), ("xy", "z")),
)
_C3_PATH_CHOICES = (
    (("ax", "y"), ("yx", "a")),
    (("az", "x"), ("zx", "a")),
    (("zx", "y"), ("yz", "x"), ("xy", "z")),
    (("xa", "b"), ("bx", "a")),
)

# one representative per rotation class of the keep-middle / keep-forward
# choice around a directed cycle (binary necklaces of length 4 and 5)
_C4_NECKLACES = ((0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 1), (0, 1, 0, 1), (0, 1, 1, 1), (1, 1, 1, 1))
_C5_NECKLACES = (
    (0, 0, 0, 0, 0), (0, 0, 0, 0, 1), (0, 0, 0, 1, 1), (0, 0, 1, 0, 1),
    (0, 0, 1, 1, 1), (0, 1, 0, 1, 1), (0, 1, 1, 1, 1), (1, 1, 1, 1, 1),
)  # fmt: skip


@dataclass(frozen=True)
class I0OrientedVariant:
    """Which non-triangle gate component to use and how to resolve its triples.

    ``choices`` holds one index per mutually exclusive choice: for cycles
    ``0`` keeps the edge pointing at the middle vertex of each 2-arc path and
    ``1`` keeps the edge pointing along the cycle; for the triangle-plus-branch
    shapes it indexes the option lists in order.
    """

    shape: str
    choices: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        expected = {
            "triangles": (),
            "C4": (2,) * 4,
            "C5": (2,) * 5,
            "C3+edge": tuple(len(c) for c in _C3_EDGE_CHOICES),
            "C3+path2": tuple(len(c) for c in _C3_PATH_CHOICES),
        }
        if self.shape not in expected:
            raise ConstructionError(f"unknown shape {self.shape!r}")
        sizes = expected[self.shape]
        if len(self.choices) != len(sizes) or any(
            not 0 <= c < s for c, s in zip(self.choices, sizes)
        ):
            raise ConstructionError(f"bad choice vector {self.choices} for {self.shape}")

    @property
    def tail_size(self) -> int:
        return {"triangles": 0, "C4": 4, "C5": 5, "C3+edge": 4, "C3+path2": 5}[self.shape]

    @property
    def residue(self) -> int:
        return {0: 0, 4: 1, 5: 2}[self.tail_size]


def _variant_table() -> dict[int, list[I0OrientedVariant]]:
    one = [I0OrientedVariant("C4", v) for v in _C4_NECKLACES]
    one += [I0OrientedVariant("C3+edge", c) for c in product(*(range(len(o)) for o in _C3_EDGE_CHOICES))]
    two = [I0OrientedVariant("C5", v) for v in _C5_NECKLACES]
    two += [I0OrientedVariant("C3+path2", c) for c in product(*(range(len(o)) for o in _C3_PATH_CHOICES))]
    return {0: [I0OrientedVariant("triangles")], 1: one, 2: two}


I0_ORIENTED_VARIANTS = _variant_table()


def i0_oriented_variants(n: int) -> list[I0OrientedVariant]:
    """The variant table for ``n mod 3`` (1, 18 or 32 entries)."""
    return I0_ORIENTED_VARIANTS[n % 3]


def all_i0_oriented_completions(n: int) -> list[I0OrientedVariant]:
    """Every raw choice vector, before identifying rotations of the cycle shapes."""
    out = []
    for shape in SHAPES_BY_RESIDUE[n % 3]:
        if shape == "triangles":
            out.append(I0OrientedVariant(shape))
        elif shape in ("C4", "C5"):
            k = 4 if shape == "C4" else 5
            out += [I0OrientedVariant(shape, c) for c in product((0, 1), repeat=k)]
        else:
            opts = _C3_EDGE_CHOICES if shape == "C3+edge" else _C3_PATH_CHOICES
            out += [I0OrientedVariant(shape, c) for c in product(*(range(len(o)) for o in opts))]
    return out


def _star_edges(arcs: list[tuple[int, int]], n: int) -> set[Edge]:
    return {Edge.of(a, v, b) for a, b in arcs for v in range(n) if v not in (a, b)}


def _role_edge(roles: Mapping[str, int], spec: tuple[str, str]) -> Edge:
    tail, head = spec
    return Edge.of(roles[tail[0]], roles[tail[1]], roles[head])


def i0_oriented_gate_arcs(n: int, variant: I0OrientedVariant) -> list[tuple[int, int]]:
    """Gate arcs of :func:`build_i0_oriented` for ``(n, variant)``."""
    t = n - variant.tail_size
    arcs = []
    for i in range(0, t, 3):
        arcs += [(i, i + 1), (i + 1, i + 2), (i + 2, i)]
    vs = list(range(t, n))
    if variant.shape in ("C4", "C5"):
        k = len(vs)
        arcs += [(vs[i], vs[(i + 1) % k]) for i in range(k)]
    elif variant.shape == "C3+edge":
        x, y, z, a = vs
        arcs += [(x, y), (y, z), (z, x), (x, a)]
    elif variant.shape == "C3+path2":
        x, y, z, a, b = vs
        arcs += [(x, y), (y, z), (z, x), (x, a), (a, b)]
    return arcs


def build_i0_oriented(n: int, variant: I0OrientedVariant | int = 0) -> DirectedHypergraph:
    """Oriented I0-free graph with the extremal edge count for ``n >= 9``.

    ``variant`` is an :class:`I0OrientedVariant` or an index into
    :func:`i0_oriented_variants`.
    """
    if isinstance(variant, int):
        table = i0_oriented_variants(n)
        if not 0 <= variant < len(table):
            raise ConstructionError(f"variant id {variant} out of range 0..{len(table) - 1} for n={n}")
        variant = table[variant]
    if variant.residue != n % 3:
        raise ConstructionError(f"variant {variant.shape} needs n = {variant.residue} mod 3, got n={n}")
    if n < variant.tail_size + 3 and variant.shape != "triangles" or n < 3:
        raise ConstructionError(f"n={n} too small for {variant.shape}")
    _below_threshold("I0 oriented", n, 9)
    arcs = i0_oriented_gate_arcs(n, variant)
    edges = _star_edges(arcs, n)
    t = n - variant.tail_size
    for i in range(0, t, 3):
        a, b, c = i, i + 1, i + 2
        # triangle triple carries ac->b, ab->c, bc->a; keep ab->c
        edges -= {Edge.of(a, c, b), Edge.of(b, c, a)}
    vs = list(range(t, n))
    if variant.shape in ("C4", "C5"):
        k = len(vs)
        for i, keep_forward in enumerate(variant.choices):
            prev, mid, nxt = vs[(i - 1) % k], vs[i], vs[(i + 1) % k]
            to_middle = Edge.of(prev, nxt, mid)
            forward = Edge.of(mid, prev, nxt)
            edges.discard(to_middle if keep_forward else forward)
    elif variant.shape in ("C3+edge", "C3+path2"):
        roles = dict(zip(_C3_EDGE_ROLES if variant.shape == "C3+edge" else _C3_PATH_ROLES, vs))
        options = _C3_EDGE_CHOICES if variant.shape == "C3+edge" else _C3_PATH_CHOICES
        for opts, pick in zip(options, variant.choices):
            for j, spec in enumerate(opts):
                if j != pick:
                    edges.discard(_role_edge(roles, spec))
    return DirectedHypergraph(n, frozenset(edges))


def enumerate_i0_oriented_classes(n: int) -> list[tuple[I0OrientedVariant, DirectedHypergraph]]:
    """One graph per isomorphism class among all completions for ``n``."""
    if not 9 <= n <= 14:
        raise ConstructionError(f"class enumeration supports 9 <= n <= 14, got {n}")
    seen = set()
    out = []
    for v in all_i0_oriented_completions(n):
        g = build_i0_oriented(n, v)
        form = canonical_form(g)
        if form not in seen:
            seen.add(form)
            out.append((v, g))
    return out


def enumerate_i0_standard_extremal(n: int) -> int:
    """Labeled I0-free graphs with n(n-2) edges, counted head by head.

    A head carries n-2 tail pairs only as a full star on the other n-1
    vertices, so each head independently picks one of n-1 centres.
    """
    if not 6 <= n <= 7:
        raise ConstructionError(f"enumeration supports 6 <= n <= 7, got {n}")
    from .search import count_per_head_maximum

    total = 1
    for x in range(n):
        size, count = count_per_head_maximum(n, "i0", x)
        if size != n - 2:
            raise AssertionError(f"head {x}: maximum tail degree {size}, expected {n - 2}")
        total *= count
    return total


# ---------------------------------------------------------------- I1


def default_matching(vertices: Sequence[int]) -> list[tuple[int, int]]:
    vs = sorted(vertices)
    return [(vs[i], vs[i + 1]) for i in range(0, len(vs) - 1, 2)]


def build_i1_standard(
    n: int, matching_choice: Mapping[int, Sequence[tuple[int, int]]] | None = None
) -> DirectedHypergraph:
    """T_x is a maximum matching on the other vertices, chosen per head."""
    if n < 4:
        raise ConstructionError("I1 constructions need n >= 4")
    edges = set()
    for x in range(n):
        others = [v for v in range(n) if v != x]
        pairs = default_matching(others) if matching_choice is None else list(matching_choice[x])
        used = [v for p in pairs for v in p]
        if (
            len(pairs) != (n - 1) // 2
            or len(set(used)) != len(used)
            or any(v == x or not 0 <= v < n for v in used)
        ):
            raise ConstructionError(f"choice for head {x} is not a maximum matching: {pairs}")
        edges |= {Edge.of(a, b, x) for a, b in pairs}
    return DirectedHypergraph(n, frozenset(edges))


def _i1_even_edges(m: int) -> set[Edge]:
    return {
        Edge.of((i + 2 * k) % m, (i + 2 * k + 1) % m, i)
        for i in range(m)
        for k in range(1, (m - 2) // 2 + 1)
    }


def build_i1_oriented(n: int) -> DirectedHypergraph:
    """Z_n construction for even n; odd n adds a vertex v = n-1 to Z_{n-1}."""
    if n < 4:
        raise ConstructionError("I1 constructions need n >= 4")
    if n % 2 == 0:
        return DirectedHypergraph(n, frozenset(_i1_even_edges(n)))
    m, v = n - 1, n - 1
    edges = _i1_even_edges(m)
    edges |= {Edge.of(v, (i + 1) % m, i) for i in range(m)}
    edges |= {Edge.of(i, m - i, v) for i in range(1, m // 2)}
    edges.add(Edge.of(0, m // 2, v))
    return DirectedHypergraph(n, frozenset(edges))


def matchings(vertices: Sequence[int]) -> list[list[tuple[int, int]]]:
    """All maximum matchings of the complete graph on ``vertices``."""
    vs = list(vertices)
    if len(vs) < 2:
        return [[]]
    if len(vs) % 2:
        out = []
        for i in range(len(vs)):
            out += matchings(vs[:i] + vs[i + 1 :])
        return out
    first, rest = vs[0], vs[1:]
    out = []
    for i, partner in enumerate(rest):
        for m in matchings(rest[:i] + rest[i + 1 :]):
            out.append([(first, partner)] + m)
    return out


def i1_labeled_count_formula(n: int) -> int:
    """(product of odd numbers up to 2*floor(n/2) - 1) ** n."""
    per_head = 1
    for i in range(1, n // 2 + 1):
        per_head *= 2 * i - 1
    return per_head**n


# ---------------------------------------------------------------- H1


def build_h1_oriented(n: int, variant: str = "matching") -> DirectedHypergraph:
    """Matched pairs each pointing at all other vertices, or (odd n) one head for all pairs."""
    if n < 3:
        raise ConstructionError("H1 constructions need n >= 3")
    _below_threshold("H1 oriented", n, 6)
    if variant == "matching":
        edges = {
            Edge.of(a, a + 1, z)
            for a in range(0, n - 1, 2)
            for z in range(n)
            if z not in (a, a + 1)
        }
    elif variant == "single-head":
        if n % 2 == 0:
            raise ConstructionError("the single-head variant is for odd n")
        edges = {Edge.of(a, b, n - 1) for a, b in combinations(range(n - 1), 2)}
    else:
        raise ConstructionError(f"unknown H1 oriented variant {variant!r}")
    return DirectedHypergraph(n, frozenset(edges))


def build_h1_standard(n: int) -> DirectedHypergraph:
    """Sunflower of saturated triples on core {0, 1}; petal pairs all point to 0."""
    if n < 4:
        raise ConstructionError("H1 standard construction needs n >= 4")
    _below_threshold("H1 standard", n, 8)
    edges = set()
    for p in range(2, n):
        edges |= {Edge.of(0, 1, p), Edge.of(0, p, 1), Edge.of(1, p, 0)}
    edges |= {Edge.of(p, q, 0) for p, q in combinations(range(2, n), 2)}
    return DirectedHypergraph(n, frozenset(edges))


# ---------------------------------------------------------------- H2


def default_pair_function(n: int) -> Callable[[int, int], int]:
    """Send ``{a, b}`` to the first non-member after ``max(a, b)`` going round mod n."""

    def f(a: int, b: int) -> int:
        c = (max(a, b) + 1) % n
        while c in (a, b):
            c = (c + 1) % n
        return c

    return f


def build_h2_standard(
    n: int, f: Callable[[int, int], int] | Mapping[tuple[int, int], int] | None = None
) -> DirectedHypergraph:
    """Each pair ``{a, b}`` is the tail of exactly one edge ``ab -> f(a, b)``."""
    if n < 3:
        raise ConstructionError("H2 constructions need n >= 3")
    _below_threshold("H2 standard", n, 5)
    if f is None:
        f = default_pair_function(n)
    lookup = f.__getitem__ if isinstance(f, Mapping) else None
    edges = set()
    for a, b in combinations(range(n), 2):
        c = lookup((a, b)) if lookup else f(a, b)  # type: ignore[misc]
        if c in (a, b) or not 0 <= c < n:
            raise ConstructionError(f"f({a}, {b}) = {c} must be a third vertex")
        edges.add(Edge.of(a, b, c))
    return DirectedHypergraph(n, frozenset(edges))


G5_EDGES = (
    (0, 1, 2), (1, 3, 0), (0, 4, 1), (0, 2, 3), (2, 4, 0),
    (0, 3, 4), (2, 3, 1), (1, 2, 4), (1, 4, 3), (3, 4, 2),
)  # fmt: skip


def build_h2_oriented(n: int) -> DirectedHypergraph:
    """G_5, extended by ``(m-1) i -> i+1 (mod m-1)`` when passing to G_m."""
    if n < 5:
        raise ConstructionError("G_n starts at n = 5")
    edges = {Edge.of(*t) for t in G5_EDGES}
    for m in range(6, n + 1):
        top = m - 1
        edges |= {Edge.of(top, i, (i + 1) % top) for i in range(top)}
    return DirectedHypergraph(n, frozenset(edges))


def h2_labeled_count_candidates(n: int) -> dict[str, int]:
    """The two closed forms compared against an exhaustive count."""
    return {
        "(n-2)^C(n,2)": (n - 2) ** comb(n, 2),
        "C(n,2)^(n-2)": comb(n, 2) ** (n - 2),
    }


# ---------------------------------------------------------------- closed forms


def expected_edges(pattern: str, mode: str, n: int) -> int:
    """Extremal edge counts as functions of ``n`` (for the supported ranges)."""
    key = (pattern.lower(), mode)
    if key == ("i0", "standard"):
        return n * (n - 2)
    if key == ("i0", "oriented"):
        r = n % 3
        return n * (n - 3) + {0: n // 3, 1: (n - 4) // 3, 2: (n - 5) // 3}[r]
    if key[0] == "i1":
        return n * ((n - 1) // 2)
    if key == ("h1", "oriented"):
        return (n // 2) * (n - 2)
    if key == ("h1", "standard"):
        return comb(n + 1, 2) - 3
    if key[0] == "h2":
        return comb(n, 2)
    raise GraphError(f"no closed form for {pattern} in {mode} mode")


def build(pattern: str, mode: str, n: int, variant: int | str | None = None) -> DirectedHypergraph:
    """Dispatch used by the command line."""
    key = (pattern.lower(), mode)
    if key == ("i0", "standard"):
        return build_i0_standard(n, successor_function(n))
    if key == ("i0", "oriented"):
        return build_i0_oriented(n, int(variant or 0))
    if key == ("i1", "standard"):
        return build_i1_standard(n)
    if key == ("i1", "oriented"):
        return build_i1_oriented(n)
    if key == ("h1", "oriented"):
        return build_h1_oriented(n, str(variant or "matching"))
    if key == ("h1", "standard"):
        return build_h1_standard(n)
    if key == ("h2", "standard"):
        return build_h2_standard(n)
    if key == ("h2", "oriented"):
        return build_h2_oriented(n)
    raise ConstructionError(f"no construction for {pattern} in {mode} mode")
