"""Elements of the graph inverse semigroup and exact multiplication.

Every nonzero element has a unique normal form ``alpha . beta*`` where
``alpha`` and ``beta`` are paths with the same range vertex.  The product
of two normal forms either extends one side's path along the other's
(when one middle path is a prefix of the other) or annihilates to zero.
Enumeration of the full semigroup is only possible for acyclic graphs,
where the path set is finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .graph import DirectedGraph, enumerate_cycles


class CyclicGraphError(ValueError):
    """The requested enumeration is infinite because the graph has cycles."""


@dataclass(frozen=True)
class Path:
    """A directed path: possibly empty edge-name sequence with endpoints.

    An empty edge sequence is the trivial path at a vertex, in which case
    source and range coincide.
    """

    source: str
    range: str
    edges: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.edges and self.source != self.range:
            raise ValueError("trivial path must start and end at the same vertex")

    @property
    def is_trivial(self) -> bool:
        return not self.edges


def trivial_path(v: str) -> Path:
    return Path(v, v)


def path_from_edges(g: DirectedGraph, names) -> Path:
    """Build a validated nontrivial path from consecutive edge names."""
    names = tuple(names)
    if not names:
        raise ValueError("use trivial_path for empty paths")
    by_name = {e.name: e for e in g.edges}
    try:
        edges = [by_name[n] for n in names]
    except KeyError as err:
        raise ValueError(f"unknown edge {err.args[0]!r}") from None
    for a, b in zip(edges, edges[1:]):
        if a.dst != b.src:
            raise ValueError(f"edges {a.name!r} and {b.name!r} do not compose")
    return Path(edges[0].src, edges[-1].dst, names)


def concat(p: Path, q: Path) -> Path:
    if p.range != q.source:
        raise ValueError("paths do not compose")
    return Path(p.source, q.range, p.edges + q.edges)


def path_key(g: DirectedGraph, p: Path) -> tuple:
    """Deterministic sort key: (length, edge names, source declaration order)."""
    return (len(p.edges), p.edges, g.vertex_index[p.source])


@dataclass(frozen=True)
class Zero:
    """The absorbing zero element."""


@dataclass(frozen=True)
class NormalForm:
    """A nonzero element ``alpha . beta*``; both paths share their range."""

    alpha: Path
    beta: Path

    def __post_init__(self) -> None:
        if self.alpha.range != self.beta.range:
            raise ValueError("normal form requires matching path ranges")


Element = Zero | NormalForm

ZERO = Zero()


def vertex_element(v: str) -> NormalForm:
    return NormalForm(trivial_path(v), trivial_path(v))


def edge_element(g: DirectedGraph, name: str) -> NormalForm:
    p = path_from_edges(g, [name])
    return NormalForm(p, trivial_path(p.range))


def _split_off(prefix: Path, whole: Path) -> Path | None:
    """The path xi with ``whole == prefix . xi``, or None if ``prefix`` is
    not an initial segment of ``whole`` (trivial xi included)."""
    if prefix.source != whole.source:
        return None
    k = len(prefix.edges)
    if whole.edges[:k] != prefix.edges:
        return None
    return Path(prefix.range, whole.range, whole.edges[k:])


def multiply(x: Element, y: Element) -> Element:
    """The semigroup product; zero absorbs."""
    if isinstance(x, Zero) or isinstance(y, Zero):
        return ZERO
    alpha, beta = x.alpha, x.beta
    zeta, eta = y.alpha, y.beta
    xi = _split_off(beta, zeta)
    if xi is not None:
        return NormalForm(concat(alpha, xi), eta)
    xi = _split_off(zeta, beta)
    if xi is not None:
        return NormalForm(alpha, concat(eta, xi))
    return ZERO


def inverse_of(x: Element) -> Element:
    """Zero maps to zero; ``alpha . beta*`` to ``beta . alpha*``."""
    if isinstance(x, Zero):
        return ZERO
    return NormalForm(x.beta, x.alpha)


@cache
def enumerate_paths(g: DirectedGraph) -> tuple[Path, ...]:
    """All paths of an acyclic graph, one trivial path per vertex included,
    sorted by (length, edge names, source declaration order)."""
    if enumerate_cycles(g):
        raise CyclicGraphError("path set is infinite: graph has cycles")
    acc: list[Path] = []

    def extend(p: Path) -> None:
        acc.append(p)
        for e in g.out_edges[p.range]:
            extend(Path(p.source, e.dst, p.edges + (e.name,)))

    for v in g.vertices:
        extend(trivial_path(v))
    return tuple(sorted(acc, key=lambda p: path_key(g, p)))


def element_key(g: DirectedGraph, x: Element) -> tuple:
    if isinstance(x, Zero):
        return (0,)
    return (
        1,
        len(x.alpha.edges) + len(x.beta.edges),
        path_key(g, x.alpha),
        path_key(g, x.beta),
    )


@cache
def enumerate_elements(g: DirectedGraph) -> tuple[Element, ...]:
    """Zero plus every normal-form pair of paths with a common range."""
    paths = enumerate_paths(g)
    by_range: dict[str, list[Path]] = {}
    for p in paths:
        by_range.setdefault(p.range, []).append(p)
    elems: list[Element] = [ZERO]
    for group in by_range.values():
        for a in group:
            for b in group:
                elems.append(NormalForm(a, b))
    return tuple(sorted(elems, key=lambda x: element_key(g, x)))


@cache
def idempotents(g: DirectedGraph) -> tuple[Element, ...]:
    """Zero plus one ``alpha . alpha*`` per path."""
    elems: list[Element] = [ZERO]
    elems.extend(NormalForm(p, p) for p in enumerate_paths(g))
    return tuple(sorted(elems, key=lambda x: element_key(g, x)))


class FiniteSemigroup:
    """Enumerated element list plus the full multiplication table.

    ``table[i][j]`` is the index of the product of elements i and j.
    """

    def __init__(self, graph: DirectedGraph) -> None:
        self.graph = graph
        self.elements: tuple[Element, ...] = enumerate_elements(graph)
        self._index = {x: i for i, x in enumerate(self.elements)}
        self.table: tuple[tuple[int, ...], ...] = tuple(
            tuple(self._index[multiply(x, y)] for y in self.elements)
            for x in self.elements
        )

    def __len__(self) -> int:
        return len(self.elements)

    def element_index(self, x: Element) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise ValueError(f"element {render_element(x)!r} not in semigroup") from None

    def product(self, i: int, j: int) -> int:
        return self.table[i][j]


@cache
def finite_semigroup(g: DirectedGraph) -> FiniteSemigroup:
    return FiniteSemigroup(g)


def verify_inverse_semigroup(g: DirectedGraph) -> bool:
    """Exhaustively check the inverse-semigroup axioms on the enumerated
    set: associativity, x x' x = x for the path-swap inverse, and pairwise
    commuting idempotents."""
    sem = finite_semigroup(g)
    t = sem.table
    n = len(sem)
    for i in range(n):
        ti = t[i]
        for j in range(n):
            row_ij = t[ti[j]]
            tj = t[j]
            for k in range(n):
                if row_ij[k] != ti[tj[k]]:
                    return False
    inv = [sem.element_index(inverse_of(x)) for x in sem.elements]
    for i in range(n):
        if t[t[i][inv[i]]][i] != i:
            return False
    idem = [i for i in range(n) if t[i][i] == i]
    for a in idem:
        for b in idem:
            if t[a][b] != t[b][a]:
                return False
    return True


def render_path(p: Path) -> str:
    return p.source if p.is_trivial else ".".join(p.edges)


def render_element(x: Element) -> str:
    """``0`` for zero, otherwise ``alpha|beta`` with trivial paths shown
    by their vertex name and nontrivial ones by dot-joined edge names."""
    if isinstance(x, Zero):
        return "0"
    return f"{render_path(x.alpha)}|{render_path(x.beta)}"
