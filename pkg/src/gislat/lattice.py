"""Finite lattices with explicit meet/join tables.

A lattice is built from an element list and an order predicate; the
tables are derived from the order alone (greatest lower bound = unique
maximum of the common down-set, found via down-set bitmasks).  Because no
closed-form meet/join ever enters the construction, lattices built here
double as the poset-theoretic oracle for formula-computed meets and joins
elsewhere in the package.

Distributivity and modularity are decided by the defining identities over
all element triples; pentagon/diamond searches provide independent
verdicts and concrete witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np


class NotALatticeError(ValueError):
    """A pair of elements without a unique meet or join."""

    def __init__(self, pair, which: str) -> None:
        a, b = pair
        super().__init__(f"no unique {which} for {a!r} and {b!r}")
        self.pair = pair
        self.which = which


@dataclass(frozen=True)
class SublatticeWitness:
    """Five element indices forming a pentagon or diamond.

    Pentagon members are (bottom, low, high, side, top) with
    bottom < low < high < top a chain and the side element meeting both
    chain elements at the bottom and joining them at the top.  Diamond
    members are (bottom, atom, atom, atom, top).
    """

    kind: str  # "pentagon" | "diamond"
    members: tuple[int, int, int, int, int]


class FiniteLattice:
    """Immutable element list, order matrix, meet/join tables and covers."""

    def __init__(self, labels, leq_matrix, meet_table, join_table) -> None:
        self.labels: tuple = labels
        self.n: int = len(labels)
        self.leq: np.ndarray = leq_matrix
        self.meet_t: np.ndarray = meet_table
        self.join_t: np.ndarray = join_table
        lt = leq_matrix & ~np.eye(self.n, dtype=bool)
        between = (lt.astype(np.uint8) @ lt.astype(np.uint8)) > 0
        cov = lt & ~between
        # cov[a, b]: b covers a
        self.cover_set: frozenset[tuple[int, int]] = frozenset(
            (int(b), int(a)) for a, b in np.argwhere(cov)
        )
        self.lower_covers: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(int(a) for a in np.flatnonzero(cov[:, b]))) for b in range(self.n)
        )
        self.upper_covers: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(int(b) for b in np.flatnonzero(cov[a, :]))) for a in range(self.n)
        )
        self._index = {lab: i for i, lab in enumerate(labels)}

    def __len__(self) -> int:
        return self.n

    def index_of(self, label) -> int:
        return self._index[label]

    def leq_idx(self, i: int, j: int) -> bool:
        return bool(self.leq[i, j])

    def meet(self, i: int, j: int) -> int:
        return int(self.meet_t[i, j])

    def join(self, i: int, j: int) -> int:
        return int(self.join_t[i, j])

    def covers(self, upper: int, lower: int) -> bool:
        return (upper, lower) in self.cover_set


def from_poset(labels: Sequence, leq: Callable) -> FiniteLattice:
    """Build a lattice from elements and an order predicate.

    Raises ValueError if ``leq`` is not a partial order and
    :class:`NotALatticeError` naming the first pair without a unique
    greatest lower bound or least upper bound.
    """
    labels = tuple(labels)
    n = len(labels)
    m = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(labels):
        for j, b in enumerate(labels):
            m[i, j] = bool(leq(a, b))

    if not m.diagonal().all():
        raise ValueError("leq is not reflexive")
    off = ~np.eye(n, dtype=bool)
    if (m & m.T & off).any():
        raise ValueError("leq is not antisymmetric")
    mi = m.astype(np.uint8)
    if ((mi @ mi > 0) & ~m).any():
        raise ValueError("leq is not transitive")

    # down[i] = bitmask of {j : j <= i}; a down-closed set equals down[x]
    # exactly when x is its maximum, so glb lookup is one dict access.
    down = [0] * n
    up = [0] * n
    for i in range(n):
        for j in range(n):
            if m[j, i]:
                down[i] |= 1 << j
            if m[i, j]:
                up[i] |= 1 << j
    down_at = {mask: i for i, mask in enumerate(down)}
    up_at = {mask: i for i, mask in enumerate(up)}

    meet_t = np.zeros((n, n), dtype=np.int64)
    join_t = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i, n):
            lower = down[i] & down[j]
            g = down_at.get(lower)
            if g is None:
                raise NotALatticeError((labels[i], labels[j]), "meet")
            upper = up[i] & up[j]
            u = up_at.get(upper)
            if u is None:
                raise NotALatticeError((labels[i], labels[j]), "join")
            meet_t[i, j] = meet_t[j, i] = g
            join_t[i, j] = join_t[j, i] = u
    return FiniteLattice(labels, m, meet_t, join_t)


def is_distributive(lat: FiniteLattice) -> bool:
    """(a ∨ b) ∧ c == (a ∧ c) ∨ (b ∧ c) over all triples."""
    n, m, j = lat.n, lat.meet_t, lat.join_t
    idx = np.arange(n)
    for a in range(n):
        left = m[j[a][:, None], idx[None, :]]  # (b, c) -> (a∨b)∧c
        a_meet_c = np.broadcast_to(m[a][None, :], (n, n))
        right = j[a_meet_c, m]  # (b, c) -> (a∧c)∨(b∧c)
        if not np.array_equal(left, right):
            return False
    return True


def is_modular(lat: FiniteLattice) -> bool:
    """a <= c implies a ∨ (b ∧ c) == (a ∨ b) ∧ c, over all triples."""
    n, m, j = lat.n, lat.meet_t, lat.join_t
    for a in range(n):
        ja = j[a]
        left = ja[m]  # (b, c) -> a∨(b∧c)
        right = m[ja]  # (b, c) -> (a∨b)∧c
        bad = (left != right) & lat.leq[a][None, :]
        if bad.any():
            return False
    return True


def is_upper_semimodular(lat: FiniteLattice) -> bool:
    """a, b both covering a ∧ b forces a ∨ b to cover both a and b."""
    cov = lat.cover_set
    for a in range(lat.n):
        for b in range(a + 1, lat.n):
            m = int(lat.meet_t[a, b])
            if (a, m) in cov and (b, m) in cov:
                j = int(lat.join_t[a, b])
                if (j, a) not in cov or (j, b) not in cov:
                    return False
    return True


def is_lower_semimodular(lat: FiniteLattice) -> bool:
    """a ∨ b covering both a and b forces a and b to cover a ∧ b."""
    cov = lat.cover_set
    for a in range(lat.n):
        for b in range(a + 1, lat.n):
            j = int(lat.join_t[a, b])
            if (j, a) in cov and (j, b) in cov:
                m = int(lat.meet_t[a, b])
                if (a, m) not in cov or (b, m) not in cov:
                    return False
    return True


def find_pentagon(lat: FiniteLattice) -> SublatticeWitness | None:
    """First pentagon in lexicographic (low, high, side) index order.

    A pentagon exists iff some strictly comparable p < q share both meet
    and join with a third element; (p∧b, p, q, b, p∨b) then has exactly
    the pentagon configuration.
    """
    n, m, j = lat.n, lat.meet_t, lat.join_t
    lt = lat.leq & ~np.eye(n, dtype=bool)
    key = m.astype(np.int64) * n + j.astype(np.int64)
    for p in range(n):
        eq = (key == key[p][None, :]) & lt[p][:, None]
        hits = np.argwhere(eq)
        if hits.size:
            q, b = (int(x) for x in hits[0])
            o = int(m[p, b])
            i = int(j[p, b])
            return SublatticeWitness("pentagon", (o, p, q, b, i))
    return None


def find_diamond(lat: FiniteLattice) -> SublatticeWitness | None:
    """First diamond in lexicographic (atom, atom, atom) index order:
    three distinct elements with all pairwise meets equal and all pairwise
    joins equal."""
    n, m, j = lat.n, lat.meet_t, lat.join_t
    for x in range(n):
        mx, jx = m[x], j[x]
        for y in range(x + 1, n):
            o = m[x, y]
            i = j[x, y]
            cond = (mx == o) & (m[y] == o) & (jx == i) & (j[y] == i)
            cond[: y + 1] = False
            z = int(np.argmax(cond))
            if cond[z]:
                return SublatticeWitness("diamond", (int(o), x, y, z, int(i)))
    return None


def nondistributivity_witness(lat: FiniteLattice) -> SublatticeWitness | None:
    """A pentagon if one exists, else a diamond, else None (distributive)."""
    return find_pentagon(lat) or find_diamond(lat)


def witness_is_valid(lat: FiniteLattice, w: SublatticeWitness) -> bool:
    """Check the exact five-element configuration and sublattice closure."""
    members = w.members
    if len(set(members)) != 5:
        return False
    o, a, b, c, i = members
    lt = lambda x, y: x != y and lat.leq_idx(x, y)
    if w.kind == "pentagon":
        config = (
            lt(o, a)
            and lt(a, b)
            and lt(b, i)
            and lt(o, c)
            and lt(c, i)
            and lat.meet(a, c) == o
            and lat.meet(b, c) == o
            and lat.join(a, c) == i
            and lat.join(b, c) == i
        )
    elif w.kind == "diamond":
        config = all(lt(o, x) and lt(x, i) for x in (a, b, c)) and all(
            lat.meet(x, y) == o and lat.join(x, y) == i
            for x, y in ((a, b), (a, c), (b, c))
        )
    else:
        return False
    if not config:
        return False
    inside = set(members)
    return all(
        lat.meet(x, y) in inside and lat.join(x, y) in inside
        for x in inside
        for y in inside
    )


def _stable_signatures(lat: FiniteLattice) -> list[int]:
    """Order-invariant element colors, refined until the partition is stable."""
    down_counts = lat.leq.sum(axis=0)
    up_counts = lat.leq.sum(axis=1)
    raw = [
        (
            int(down_counts[i]),
            int(up_counts[i]),
            len(lat.lower_covers[i]),
            len(lat.upper_covers[i]),
        )
        for i in range(lat.n)
    ]
    ranks = {s: r for r, s in enumerate(sorted(set(raw)))}
    sig = [ranks[s] for s in raw]
    for _ in range(lat.n):
        raw2 = [
            (
                sig[i],
                tuple(sorted(sig[j] for j in lat.lower_covers[i])),
                tuple(sorted(sig[j] for j in lat.upper_covers[i])),
            )
            for i in range(lat.n)
        ]
        ranks = {s: r for r, s in enumerate(sorted(set(raw2)))}
        new = [ranks[s] for s in raw2]
        if new == sig:
            break
        sig = new
    return sig


def order_isomorphic(lat1: FiniteLattice, lat2: FiniteLattice) -> bool:
    """True iff an order-preserving bijection exists in both directions.

    Backtracking over candidate images, pruned by stable order-invariant
    signatures."""
    if lat1.n != lat2.n:
        return False
    if lat1.n == 0:
        return True
    sig1 = _stable_signatures(lat1)
    sig2 = _stable_signatures(lat2)
    if sorted(sig1) != sorted(sig2):
        return False
    candidates = {
        i: [j for j in range(lat2.n) if sig2[j] == sig1[i]] for i in range(lat1.n)
    }
    order = sorted(range(lat1.n), key=lambda i: len(candidates[i]))
    assigned: dict[int, int] = {}
    used: set[int] = set()

    def backtrack(k: int) -> bool:
        if k == len(order):
            return True
        i = order[k]
        for j in candidates[i]:
            if j in used:
                continue
            ok = all(
                lat1.leq_idx(i, i2) == lat2.leq_idx(j, j2)
                and lat1.leq_idx(i2, i) == lat2.leq_idx(j2, j)
                for i2, j2 in assigned.items()
            )
            if not ok:
                continue
            assigned[i] = j
            used.add(j)
            if backtrack(k + 1):
                return True
            del assigned[i]
            used.remove(j)
        return False

    return backtrack(0)


def hasse_dot(lat: FiniteLattice, render: Callable = str) -> str:
    """Byte-stable DOT rendering of the Hasse diagram: one node per
    element, one undirected-style edge per cover pair, drawn bottom-up."""

    def esc(s: str) -> str:
        return s.replace("\\", "\\\\").replace('"', '\\"')

    lines = [
        "digraph hasse {",
        "  rankdir=BT;",
        "  node [shape=box];",
        "  edge [dir=none];",
    ]
    for i, lab in enumerate(lat.labels):
        lines.append(f'  n{i} [label="{esc(render(lab))}"];')
    for upper, lower in sorted(lat.cover_set, key=lambda p: (p[1], p[0])):
        lines.append(f"  n{lower} -> n{upper};")
    lines.append("}")
    return "\n".join(lines) + "\n"
