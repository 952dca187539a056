"""Shared test machinery: definition-level brute-force oracles (kept
independent of the library code paths they check) and seeded random graph
corpora."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

from hypothesis import strategies as st

from gislat.graph import (
    DirectedGraph,
    enumerate_cycles,
    hereditary_subsets,
    index_relative,
)
from gislat.triples import divisors

POOL = "abcdef"


# ---------------------------------------------------------------- oracles


def all_vertex_subsets(g: DirectedGraph):
    n = len(g.vertices)
    for mask in range(1 << n):
        yield frozenset(v for i, v in enumerate(g.vertices) if mask >> i & 1)


def brute_hereditary(g: DirectedGraph) -> set[frozenset[str]]:
    """Filter every subset by the raw definition."""
    out = set()
    for subset in all_vertex_subsets(g):
        if all(e.dst in subset for e in g.edges if e.src in subset):
            out.add(subset)
    return out


def brute_reach_pairs(g: DirectedGraph) -> set[tuple[str, str]]:
    """Reflexive-transitive closure by iterated squaring over edge pairs."""
    pairs = {(v, v) for v in g.vertices}
    pairs |= {(e.src, e.dst) for e in g.edges}
    changed = True
    while changed:
        changed = False
        for a, b in list(pairs):
            for c, d in list(pairs):
                if b == c and (a, d) not in pairs:
                    pairs.add((a, d))
                    changed = True
    return pairs


def rotation_class(names: tuple[str, ...]) -> tuple[str, ...]:
    """Lexicographically least rotation; identifies cyclic permutations."""
    return min(names[i:] + names[:i] for i in range(len(names)))


def brute_cycle_classes(g: DirectedGraph) -> set[tuple[str, ...]]:
    """Every closed edge walk with pairwise distinct sources, collected up
    to rotation.  Deliberately naive: extends arbitrary edge sequences."""
    classes: set[tuple[str, ...]] = set()

    def visit(seq):
        sources = [e.src for e in seq]
        if len(set(sources)) != len(sources):
            return
        last = seq[-1]
        if last.dst == seq[0].src:
            classes.add(rotation_class(tuple(e.name for e in seq)))
            return
        if len(seq) >= len(g.vertices):
            return
        for e in g.edges:
            if e.src == last.dst:
                visit(seq + [e])

    for e0 in g.edges:
        visit([e0])
    return classes


def brute_glb_index(leq_rows, i: int, j: int):
    """Unique maximum of the common down-set, by direct scan; None if it
    does not exist."""
    n = len(leq_rows)
    lower = [x for x in range(n) if leq_rows[x][i] and leq_rows[x][j]]
    maxima = [m for m in lower if all(leq_rows[x][m] for x in lower)]
    return maxima[0] if len(maxima) == 1 else None


def brute_lub_index(leq_rows, i: int, j: int):
    n = len(leq_rows)
    upper = [x for x in range(n) if leq_rows[i][x] and leq_rows[j][x]]
    minima = [m for m in upper if all(leq_rows[m][x] for x in upper)]
    return minima[0] if len(minima) == 1 else None


def bounded_triple_count(g: DirectedGraph, bound: int) -> int:
    """Size of the bounded triple enumeration, computed without
    materializing it."""
    cycles = enumerate_cycles(g)
    nvals = len(divisors(bound)) + 1
    total = 0
    for h in hereditary_subsets(g):
        index_one = [
            v for v in g.vertices if v not in h and index_relative(g, v, h) == 1
        ]
        for size in range(len(index_one) + 1):
            for chosen in combinations(index_one, size):
                w = frozenset(chosen)
                free = sum(
                    1
                    for c in cycles
                    if c.source_set <= w and not c.source_set <= h
                )
                total += nvals**free
    return total


# ----------------------------------------------------- random generators


def random_acyclic_graph(rng: random.Random, max_vertices=6, max_edges=8) -> DirectedGraph:
    k = rng.randint(1, max_vertices)
    names = list(POOL[:k])
    decl = names[:]
    rng.shuffle(decl)
    topo = names[:]
    rng.shuffle(topo)
    pos = {v: i for i, v in enumerate(topo)}
    edges = []
    if k >= 2:
        for i in range(rng.randint(0, max_edges)):
            a, b = rng.sample(names, 2)
            if pos[a] > pos[b]:
                a, b = b, a
            edges.append((f"e{i}", a, b))
    return DirectedGraph.of(decl, edges)


def random_general_graph(rng: random.Random, max_vertices=4, max_edges=6) -> DirectedGraph:
    k = rng.randint(1, max_vertices)
    names = list(POOL[:k])
    edges = [
        (f"e{i}", rng.choice(names), rng.choice(names))
        for i in range(rng.randint(0, max_edges))
    ]
    return DirectedGraph.of(names, edges)


def random_outdeg_le1_graph(rng: random.Random, max_vertices=6) -> DirectedGraph:
    k = rng.randint(1, max_vertices)
    names = list(POOL[:k])
    edges = []
    for n, v in enumerate(names):
        if rng.random() < 0.75:
            edges.append((f"e{n}", v, rng.choice(names)))
    return DirectedGraph.of(names, edges)


def random_unilateral_graph(rng: random.Random, max_vertices=5) -> DirectedGraph:
    """A spanning directed path guarantees unilateral connectivity; extra
    random edges (possibly making cycles) preserve it."""
    k = rng.randint(2, max_vertices)
    names = list(POOL[:k])
    spine = names[:]
    rng.shuffle(spine)
    edges = [(f"p{i}", spine[i], spine[i + 1]) for i in range(k - 1)]
    for i in range(rng.randint(0, min(3, 8 - len(edges)))):
        edges.append((f"x{i}", rng.choice(names), rng.choice(names)))
    return DirectedGraph.of(names, edges)


def random_multi_component_graph(rng: random.Random) -> DirectedGraph:
    """Two or three acyclic blobs over disjoint vertex sets."""
    blobs = rng.randint(2, 3)
    names: list[str] = []
    edges: list[tuple[str, str, str]] = []
    budget = 6
    for b in range(blobs):
        size = rng.randint(1, min(3, budget - (blobs - b - 1)))
        budget -= size
        members = [POOL[len(names) + i] for i in range(size)]
        names.extend(members)
        if size >= 2:
            for i in range(rng.randint(0, 2)):
                a, c = rng.sample(members, 2)
                if members.index(a) > members.index(c):
                    a, c = c, a
                edges.append((f"b{b}e{i}", a, c))
    return DirectedGraph.of(names, edges)


# --------------------------------------------------------------- corpora


@lru_cache(maxsize=None)
def acyclic_corpus(count: int = 200, seed: int = 20260809) -> tuple[DirectedGraph, ...]:
    rng = random.Random(seed)
    return tuple(random_acyclic_graph(rng) for _ in range(count))


@lru_cache(maxsize=None)
def cyclic_corpus(
    count: int = 15, seed: int = 977, bound: int = 12, cap: int = 300
) -> tuple[DirectedGraph, ...]:
    """Cyclic graphs whose bounded triple set stays desk-sized; at least
    ten of them carry genuinely free cycles (varying cycle values)."""
    from gislat.triples import enumerate_triples

    rng = random.Random(seed)
    rich: list[DirectedGraph] = []
    plain: list[DirectedGraph] = []
    want_rich = min(10, count)
    while len(rich) < want_rich:
        g = random_general_graph(rng)
        if not enumerate_cycles(g) or bounded_triple_count(g, bound) > cap:
            continue
        if any(t.f.entries for t in enumerate_triples(g, bound)):
            rich.append(g)
        else:
            plain.append(g)
    return tuple((rich + plain)[:count])


@lru_cache(maxsize=None)
def outdeg_le1_corpus(count: int = 50, seed: int = 431, cap: int = 400) -> tuple[DirectedGraph, ...]:
    rng = random.Random(seed)
    out: list[DirectedGraph] = []
    while len(out) < count:
        g = random_outdeg_le1_graph(rng)
        if enumerate_cycles(g) and bounded_triple_count(g, 12) > cap:
            continue
        out.append(g)
    return tuple(out)


@lru_cache(maxsize=None)
def unilateral_corpus(count: int = 50, seed: int = 6011, cap: int = 400) -> tuple[DirectedGraph, ...]:
    rng = random.Random(seed)
    out: list[DirectedGraph] = []
    while len(out) < count:
        g = random_unilateral_graph(rng)
        if enumerate_cycles(g) and bounded_triple_count(g, 12) > cap:
            continue
        out.append(g)
    return tuple(out)


@lru_cache(maxsize=None)
def multi_component_corpus(count: int = 50, seed: int = 74) -> tuple[DirectedGraph, ...]:
    rng = random.Random(seed)
    return tuple(random_multi_component_graph(rng) for _ in range(count))


@lru_cache(maxsize=None)
def small_semigroup_corpus(count: int = 20, seed: int = 512, cap: int = 60) -> tuple[DirectedGraph, ...]:
    """Acyclic graphs whose full semigroup has at most ``cap`` elements
    (and at least 4, to skip degenerate near-empty graphs)."""
    from gislat.semigroup import enumerate_elements

    rng = random.Random(seed)
    out: list[DirectedGraph] = []
    while len(out) < count:
        g = random_acyclic_graph(rng)
        if 4 <= len(enumerate_elements(g)) <= cap:
            out.append(g)
    return tuple(out)


# ------------------------------------------------------------ hypothesis


@st.composite
def graph_strategy(draw, max_vertices: int = 5, max_edges: int = 6, acyclic: bool = False):
    k = draw(st.integers(1, max_vertices))
    names = [f"v{i}" for i in range(k)]
    if acyclic and k == 1:
        return DirectedGraph.of(names, [])
    m = draw(st.integers(0, max_edges))
    edges = []
    for i in range(m):
        if acyclic:
            a = draw(st.integers(0, k - 2))
            b = draw(st.integers(a + 1, k - 1))
        else:
            a = draw(st.integers(0, k - 1))
            b = draw(st.integers(0, k - 1))
        edges.append((f"e{i}", names[a], names[b]))
    return DirectedGraph.of(names, edges)
