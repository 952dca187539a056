"""Congruence triples (H, W, f) over a directed graph.

A triple consists of a hereditary vertex set H, a set W of vertices of
index 1 relative to H, and an assignment f of values in Z+ ∪ {inf} to
cycles.  Values are forced on most cycles (1 inside H, inf outside H and
W), so only the free cycles (those whose sources all lie in W) are
stored; this makes triple equality a plain component comparison.

Triples are ordered by H-containment, W-containment outside the larger H,
and reverse divisibility of cycle values.  The closed-form meet and join
computed here are cross-checked elsewhere against the poset-theoretic
bounds of the enumerated order, which is the central correctness test of
the whole package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cache, cached_property
from itertools import combinations, product

from .graph import (
    Cycle,
    DirectedGraph,
    GraphError,
    enumerate_cycles,
    hereditary_subsets,
    index_relative,
)


class UnboundedLatticeError(ValueError):
    """Triple enumeration over a cyclic graph needs an explicit bound."""


class UnknownCycleError(GraphError):
    """A cycle that does not occur in the graph (or is not canonical)."""


class _Infinity:
    """The distinguished value divisible by everything."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "inf"


INF = _Infinity()

ExtNat = int | _Infinity


def is_inf(x: ExtNat) -> bool:
    return x is INF


def ext_divides(a: ExtNat, b: ExtNat) -> bool:
    """a divides b; every value divides inf, inf divides only inf."""
    if b is INF:
        return True
    if a is INF:
        return False
    return b % a == 0


def ext_gcd(a: ExtNat, b: ExtNat) -> ExtNat:
    if a is INF:
        return b
    if b is INF:
        return a
    return math.gcd(a, b)


def ext_lcm(a: ExtNat, b: ExtNat) -> ExtNat:
    if a is INF or b is INF:
        return INF
    return math.lcm(a, b)


def render_ext(v: ExtNat) -> str:
    return "inf" if v is INF else str(v)


def _is_ext_value(v) -> bool:
    return v is INF or (isinstance(v, int) and not isinstance(v, bool) and v >= 1)


@dataclass(frozen=True)
class CycleFunction:
    """Explicit cycle values, keyed by canonical cycles (free cycles only)."""

    entries: tuple[tuple[Cycle, ExtNat], ...] = ()

    @staticmethod
    def of(items) -> "CycleFunction":
        table = dict(items)
        return CycleFunction(
            tuple(sorted(table.items(), key=lambda cv: cv[0].sort_key()))
        )

    @cached_property
    def _table(self) -> dict[Cycle, ExtNat]:
        return dict(self.entries)

    def get(self, c: Cycle) -> ExtNat | None:
        return self._table.get(c)


EMPTY_CYCLE_FUNCTION = CycleFunction()


@dataclass(frozen=True)
class CongruenceTriple:
    """(H, W, f): hereditary set, index-1 selection, free-cycle values."""

    H: frozenset[str]
    W: frozenset[str]
    f: CycleFunction = field(default=EMPTY_CYCLE_FUNCTION)

    def cycle_value(self, c: Cycle) -> ExtNat:
        """The full cycle function: 1 inside H, the stored value on free
        cycles, inf everywhere else."""
        if c.source_set <= self.H:
            return 1
        if c.source_set <= self.W:
            v = self.f.get(c)
            if v is None:
                raise LookupError(f"no value stored for free cycle {'.'.join(c.edges)}")
            return v
        return INF


def validate_triple(g: DirectedGraph, t: CongruenceTriple) -> tuple[str, ...]:
    """Empty tuple when the triple is valid, otherwise one message per
    violated clause.  Unknown vertex or cycle references raise instead."""
    for v in sorted(t.H | t.W):
        g.check_vertex(v)
    cycles = enumerate_cycles(g)
    known = set(cycles)
    for c, _ in t.f.entries:
        if c not in known:
            raise UnknownCycleError(f"unknown cycle {'.'.join(c.edges)}")

    violations: list[str] = []
    escaping = [e for e in g.edges if e.src in t.H and e.dst not in t.H]
    if escaping:
        names = ",".join(e.name for e in escaping)
        violations.append(f"H is not hereditary (escaping edges: {names})")
    overlap = t.H & t.W
    if overlap:
        violations.append(f"H and W intersect: {','.join(sorted(overlap))}")
    for v in sorted(t.W - t.H):
        k = index_relative(g, v, t.H)
        if k != 1:
            violations.append(f"vertex {v} has index {k} relative to H, expected 1")
    free = {c for c in cycles if c.source_set <= t.W} - {
        c for c in cycles if c.source_set <= t.H
    }
    domain = {c for c, _ in t.f.entries}
    for c in sorted(free - domain, key=Cycle.sort_key):
        violations.append(f"missing value for free cycle {'.'.join(c.edges)}")
    for c in sorted(domain - free, key=Cycle.sort_key):
        violations.append(f"value assigned to non-free cycle {'.'.join(c.edges)}")
    for c, v in t.f.entries:
        if not _is_ext_value(v):
            violations.append(f"value {v!r} for cycle {'.'.join(c.edges)} is invalid")
    return tuple(violations)


def leq(g: DirectedGraph, t1: CongruenceTriple, t2: CongruenceTriple) -> bool:
    """t1 <= t2 iff H1 ⊆ H2, W1 \\ H2 ⊆ W2, and f2(c) divides f1(c) on
    every cycle."""
    if not t1.H <= t2.H:
        return False
    if not t1.W - t2.H <= t2.W:
        return False
    return all(
        ext_divides(t2.cycle_value(c), t1.cycle_value(c)) for c in enumerate_cycles(g)
    )


@dataclass(frozen=True)
class SetTrace:
    """Auxiliary vertex sets for a pair of triples.

    V0: vertices of (W1 ∪ W2) \\ (H1 ∪ H2) whose every out-edge lands in
    H1 ∪ H2.  X: the part of W1 ∩ W2 outside V0.  J: vertices that reach
    V0 by a path whose edge sources all stay in W1 ∪ W2 (trivial paths
    included, so V0 ⊆ J).
    """

    V0: frozenset[str]
    X: frozenset[str]
    J: frozenset[str]


def set_trace(g: DirectedGraph, t1: CongruenceTriple, t2: CongruenceTriple) -> SetTrace:
    union_w = t1.W | t2.W
    union_h = t1.H | t2.H
    candidates = union_w - union_h
    v0 = frozenset(v for v in candidates if index_relative(g, v, union_h) == 0)
    x = (t1.W & t2.W) - v0

    reach = set(v0)
    changed = True
    while changed:
        changed = False
        for e in g.edges:
            if e.src in union_w and e.dst in reach and e.src not in reach:
                reach.add(e.src)
                changed = True
    j = frozenset(reach & candidates)
    return SetTrace(V0=v0, X=x, J=j)


def _combined_values(g, t1, t2, h, w, combine) -> CycleFunction:
    entries = {}
    for c in enumerate_cycles(g):
        if c.source_set <= w and not c.source_set <= h:
            entries[c] = combine(t1.cycle_value(c), t2.cycle_value(c))
    return CycleFunction.of(entries.items())


def meet(g: DirectedGraph, t1: CongruenceTriple, t2: CongruenceTriple) -> CongruenceTriple:
    """Greatest lower bound: H1 ∩ H2, (W1 ∩ H2) ∪ (W2 ∩ H1) ∪ X, lcm of
    cycle values."""
    h = t1.H & t2.H
    trace = set_trace(g, t1, t2)
    w = (t1.W & t2.H) | (t2.W & t1.H) | trace.X
    return CongruenceTriple(h, w, _combined_values(g, t1, t2, h, w, ext_lcm))


def join(g: DirectedGraph, t1: CongruenceTriple, t2: CongruenceTriple) -> CongruenceTriple:
    """Least upper bound: H1 ∪ H2 ∪ J, the rest of W1 ∪ W2, gcd of cycle
    values."""
    trace = set_trace(g, t1, t2)
    h = t1.H | t2.H | trace.J
    w = (t1.W | t2.W) - h
    return CongruenceTriple(h, w, _combined_values(g, t1, t2, h, w, ext_gcd))


def divisors(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


@cache
def enumerate_triples(
    g: DirectedGraph, bound: int | None = None
) -> tuple[CongruenceTriple, ...]:
    """All congruence triples of an acyclic graph; for a cyclic graph, all
    triples whose free-cycle values lie in divisors(bound) ∪ {inf}.

    The bounded value set is closed under gcd and lcm, so the result is a
    genuine sublattice of the full triple lattice: any pentagon or diamond
    found inside it certifies non-modularity / non-distributivity of the
    whole lattice, while absence is evidence only.
    """
    cycles = enumerate_cycles(g)
    if cycles and bound is None:
        raise UnboundedLatticeError(
            "graph has cycles: triple enumeration needs a bound"
        )
    if bound is not None and bound < 1:
        raise ValueError("bound must be a positive integer")
    values: tuple[ExtNat, ...] = ()
    if cycles:
        values = divisors(bound) + (INF,)

    out: list[CongruenceTriple] = []
    for h in hereditary_subsets(g):
        index_one = sorted(
            v for v in g.vertices if v not in h and index_relative(g, v, h) == 1
        )
        for size in range(len(index_one) + 1):
            for chosen in combinations(index_one, size):
                w = frozenset(chosen)
                free = [c for c in cycles if c.source_set <= w and not c.source_set <= h]
                if not free:
                    out.append(CongruenceTriple(h, w))
                    continue
                for combo in product(values, repeat=len(free)):
                    out.append(
                        CongruenceTriple(h, w, CycleFunction.of(zip(free, combo)))
                    )
    return tuple(out)


def triple_lattice(g: DirectedGraph, bound: int | None = None):
    """The enumerated triples as a finite lattice, with meets and joins
    derived from the order alone (not from the closed-form formulas)."""
    from .lattice import from_poset

    ts = enumerate_triples(g, bound)
    return from_poset(ts, lambda a, b: leq(g, a, b))


def render_triple(t: CongruenceTriple) -> str:
    hs = ",".join(sorted(t.H))
    ws = ",".join(sorted(t.W))
    fs = ",".join(
        f"{'.'.join(c.edges)}:{render_ext(v)}" for c, v in t.f.entries
    )
    return "({%s},{%s},{%s})" % (hs, ws, fs)


def triple_to_json(t: CongruenceTriple) -> dict:
    return {
        "H": sorted(t.H),
        "W": sorted(t.W),
        "f": {".".join(c.edges): render_ext(v) for c, v in t.f.entries},
    }
