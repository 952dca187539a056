"""Finite directed multigraphs and their vertex combinatorics.

Everything downstream (semigroup elements, congruence triples, the lattice
cross-checks) is driven by a handful of graph-level notions implemented
here: reachability, hereditary vertex sets, the index of a vertex relative
to a vertex set, simple cycles up to rotation, forked vertices, and the
usual connectivity predicates.

All values are immutable after construction and iteration follows
declaration order, so every operation is deterministic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache, cached_property

_NAME = re.compile(r"[A-Za-z0-9_]+\Z")


class GraphError(ValueError):
    """Invalid graph construction or lookup."""


class GraphParseError(GraphError):
    """Malformed graph file; the message carries the 1-based line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class UnknownVertexError(GraphError):
    """A vertex name that is not declared in the graph."""


@dataclass(frozen=True)
class Edge:
    name: str
    src: str
    dst: str


@dataclass(frozen=True)
class Cycle:
    """A simple directed cycle in canonical rotation.

    ``edges`` holds edge names and ``sources`` the matching edge sources
    (``sources[i]`` is the source of ``edges[i]``).  The sources of a cycle
    are pairwise distinct, and the rotation is fixed so that the
    lexicographically smallest source comes first; cyclic permutations of
    the same cycle therefore share one canonical representative.
    """

    edges: tuple[str, ...]
    sources: tuple[str, ...]

    @cached_property
    def source_set(self) -> frozenset[str]:
        return frozenset(self.sources)

    def sort_key(self) -> tuple:
        return (len(self.edges), self.edges)


@dataclass(frozen=True)
class DirectedGraph:
    """Finite directed multigraph with named vertices and edges.

    Parallel edges and loops are allowed.  Vertex and edge iteration order
    is the declaration order.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    @staticmethod
    def of(vertices, edges) -> "DirectedGraph":
        """Build a validated graph from vertex names and (name, src, dst)
        triples (or ready-made :class:`Edge` values)."""
        vs: list[str] = []
        declared: set[str] = set()
        for v in vertices:
            if not _NAME.match(v):
                raise GraphError(f"bad vertex name {v!r}")
            if v in declared:
                raise GraphError(f"duplicate vertex {v!r}")
            declared.add(v)
            vs.append(v)
        es: list[Edge] = []
        edge_names: set[str] = set()
        for item in edges:
            e = item if isinstance(item, Edge) else Edge(*item)
            if not _NAME.match(e.name):
                raise GraphError(f"bad edge name {e.name!r}")
            if e.name in edge_names:
                raise GraphError(f"duplicate edge {e.name!r}")
            for end in (e.src, e.dst):
                if end not in declared:
                    raise GraphError(
                        f"edge {e.name!r} references undeclared vertex {end!r}"
                    )
            edge_names.add(e.name)
            es.append(e)
        return DirectedGraph(tuple(vs), tuple(es))

    @cached_property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def out_edges(self) -> dict[str, tuple[Edge, ...]]:
        out: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def _reach(self) -> dict[str, frozenset[str]]:
        """For each vertex the set of vertices reachable by a path
        (every vertex reaches itself by the trivial path)."""
        closure: dict[str, frozenset[str]] = {}
        for start in self.vertices:
            seen = {start}
            frontier = [start]
            while frontier:
                v = frontier.pop()
                for e in self.out_edges[v]:
                    if e.dst not in seen:
                        seen.add(e.dst)
                        frontier.append(e.dst)
            closure[start] = frozenset(seen)
        return closure

    def check_vertex(self, v: str) -> None:
        if v not in self.vertex_set:
            raise UnknownVertexError(f"unknown vertex {v!r}")


def parse_graph(text: str) -> DirectedGraph:
    """Parse the line-oriented graph format.

    Directives, one per line: ``vertex NAME`` and ``edge NAME SRC DST``;
    blank lines and lines starting with ``#`` are ignored.  Vertices must
    be declared before any edge uses them.
    """
    vertices: list[str] = []
    edges: list[tuple[str, str, str]] = []
    vseen: set[str] = set()
    eseen: set[str] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "vertex":
            if len(parts) != 2:
                raise GraphParseError(line_no, "expected: vertex NAME")
            name = parts[1]
            if not _NAME.match(name):
                raise GraphParseError(line_no, f"bad vertex name {name!r}")
            if name in vseen:
                raise GraphParseError(line_no, f"duplicate vertex {name!r}")
            vseen.add(name)
            vertices.append(name)
        elif parts[0] == "edge":
            if len(parts) != 4:
                raise GraphParseError(line_no, "expected: edge NAME SRC DST")
            name, src, dst = parts[1], parts[2], parts[3]
            if not _NAME.match(name):
                raise GraphParseError(line_no, f"bad edge name {name!r}")
            if name in eseen:
                raise GraphParseError(line_no, f"duplicate edge {name!r}")
            for end in (src, dst):
                if end not in vseen:
                    raise GraphParseError(line_no, f"undeclared vertex {end!r}")
            eseen.add(name)
            edges.append((name, src, dst))
        else:
            raise GraphParseError(line_no, f"unknown directive {parts[0]!r}")
    return DirectedGraph.of(vertices, edges)


def reaches(g: DirectedGraph, v1: str, v2: str) -> bool:
    """True iff there is a path from ``v1`` to ``v2`` (trivial paths count,
    so ``reaches(g, v, v)`` always holds)."""
    g.check_vertex(v1)
    g.check_vertex(v2)
    return v2 in g._reach[v1]


def index_relative(g: DirectedGraph, v: str, H) -> int:
    """Number of edges out of ``v`` whose range escapes the vertex set ``H``."""
    g.check_vertex(v)
    members = frozenset(H)
    for u in members:
        g.check_vertex(u)
    return sum(1 for e in g.out_edges[v] if e.dst not in members)


def is_hereditary(g: DirectedGraph, H) -> bool:
    """True iff no edge leads from inside ``H`` to outside ``H``."""
    members = frozenset(H)
    for u in members:
        g.check_vertex(u)
    return all(e.dst in members for e in g.edges if e.src in members)


@cache
def hereditary_subsets(g: DirectedGraph) -> tuple[frozenset[str], ...]:
    """All hereditary vertex subsets, sorted by (size, sorted names)."""
    n = len(g.vertices)
    if n > 20:
        raise GraphError("exhaustive hereditary enumeration capped at 20 vertices")
    found: list[frozenset[str]] = []
    for mask in range(1 << n):
        subset = frozenset(v for i, v in enumerate(g.vertices) if mask >> i & 1)
        if is_hereditary(g, subset):
            found.append(subset)
    found.sort(key=lambda s: (len(s), tuple(sorted(s))))
    return tuple(found)


@cache
def enumerate_cycles(g: DirectedGraph) -> tuple[Cycle, ...]:
    """All simple cycles (pairwise distinct edge sources), one canonical
    representative per rotation class, sorted by (length, edge names).

    Each cycle is found from its smallest source: the search only visits
    vertices strictly larger than the base, so every rotation class is
    emitted exactly once, already canonically rotated.
    """
    found: list[Cycle] = []
    for base in sorted(g.vertices):
        path: list[Edge] = []
        visited = {base}

        def walk(current: str) -> None:
            for e in g.out_edges[current]:
                if e.dst == base:
                    found.append(
                        Cycle(
                            tuple(x.name for x in path) + (e.name,),
                            tuple(x.src for x in path) + (e.src,),
                        )
                    )
                elif e.dst > base and e.dst not in visited:
                    visited.add(e.dst)
                    path.append(e)
                    walk(e.dst)
                    path.pop()
                    visited.remove(e.dst)

        walk(base)
    return tuple(sorted(found, key=Cycle.sort_key))


def forked_vertices(g: DirectedGraph) -> frozenset[str]:
    """Vertices with two distinct out-edges e, f such that no other
    out-edge's range reaches r(e), and likewise for r(f)."""
    forked: set[str] = set()
    for v in g.vertices:
        out = g.out_edges[v]
        if len(out) < 2:
            continue
        free = [
            e
            for e in out
            if not any(reaches(g, x.dst, e.dst) for x in out if x.name != e.name)
        ]
        if len(free) >= 2:
            forked.add(v)
    return frozenset(forked)


@dataclass(frozen=True)
class ConnectivityReport:
    weak_components: tuple[tuple[str, ...], ...]
    is_weakly_connected: bool
    is_unilaterally_connected: bool
    is_strongly_connected: bool


def connectivity_report(g: DirectedGraph) -> ConnectivityReport:
    """Weak components (union-find on the underlying undirected graph) and
    the weak/unilateral/strong connectivity flags."""
    parent = {v: v for v in g.vertices}

    def find(v: str) -> str:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in g.edges:
        parent[find(e.src)] = find(e.dst)

    groups: dict[str, list[str]] = {}
    for v in g.vertices:
        groups.setdefault(find(v), []).append(v)
    components = tuple(
        sorted((tuple(sorted(members)) for members in groups.values()))
    )

    unilateral = True
    strong = True
    for i, a in enumerate(g.vertices):
        for b in g.vertices[i + 1 :]:
            ab = b in g._reach[a]
            ba = a in g._reach[b]
            if not (ab or ba):
                unilateral = False
            if not (ab and ba):
                strong = False
    return ConnectivityReport(
        weak_components=components,
        is_weakly_connected=len(components) <= 1,
        is_unilaterally_connected=unilateral,
        is_strongly_connected=strong,
    )


def weak_component_subgraphs(g: DirectedGraph) -> tuple[DirectedGraph, ...]:
    """One subgraph per weak component, preserving declaration order."""
    out = []
    for comp in connectivity_report(g).weak_components:
        members = set(comp)
        vs = [v for v in g.vertices if v in members]
        es = [e for e in g.edges if e.src in members]
        out.append(DirectedGraph.of(vs, es))
    return tuple(out)
