"""Brute-force congruences of a finite semigroup.

Congruences are generated from below: every principal congruence (the
least congruence identifying one pair) is computed by a union-find
closure that propagates merges through the multiplication table, and the
full congruence set is the join closure of the principal ones plus the
identity.  The resulting lattice, ordered by refinement, is computed with
no reference to congruence triples and therefore serves as an independent
check of the triple lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .lattice import FiniteLattice, from_poset
from .semigroup import Element, FiniteSemigroup, render_element


class SemigroupTooLargeError(ValueError):
    """The semigroup exceeds the configured brute-force cap."""


@dataclass(frozen=True)
class Congruence:
    """A partition of element indices compatible with multiplication.

    ``blocks`` is canonical: each block sorted ascending, blocks sorted by
    their element tuples.
    """

    blocks: tuple[tuple[int, ...], ...]

    @cached_property
    def block_of(self) -> dict[int, int]:
        return {x: b for b, blk in enumerate(self.blocks) for x in blk}

    def relates(self, i: int, j: int) -> bool:
        return self.block_of[i] == self.block_of[j]

    def refines(self, other: "Congruence") -> bool:
        """True iff every block of self lies inside one block of other."""
        bo = other.block_of
        return all(len({bo[x] for x in blk}) == 1 for blk in self.blocks)

    @property
    def num_elements(self) -> int:
        return sum(len(b) for b in self.blocks)


def _canonical(blocks) -> Congruence:
    return Congruence(tuple(sorted(tuple(sorted(b)) for b in blocks)))


def identity_congruence(n: int) -> Congruence:
    return Congruence(tuple((i,) for i in range(n)))


def _closure(table, n: int, seeds) -> Congruence:
    """Least congruence containing the seed pairs: union-find plus a
    worklist that propagates every merge through left and right products."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pending = list(seeds)
    while pending:
        x, y = pending.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[ry] = rx
        for s in range(n):
            row_s = table[s]
            pending.append((row_s[rx], row_s[ry]))
            pending.append((table[rx][s], table[ry][s]))
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return _canonical(groups.values())


def principal_congruence(sem: FiniteSemigroup, a: Element, b: Element) -> Congruence:
    """The least congruence identifying a and b."""
    i = sem.element_index(a)
    j = sem.element_index(b)
    return _closure(sem.table, len(sem), [(i, j)])


def join_congruences(sem: FiniteSemigroup, c1: Congruence, c2: Congruence) -> Congruence:
    """Least congruence containing both: closure of the union."""
    seeds = []
    for blk in c1.blocks + c2.blocks:
        seeds.extend((blk[0], x) for x in blk[1:])
    return _closure(sem.table, len(sem), seeds)


def meet_congruences(c1: Congruence, c2: Congruence) -> Congruence:
    """Common refinement (intersection of the relations)."""
    groups: dict[tuple[int, int], list[int]] = {}
    for x in c1.block_of:
        groups.setdefault((c1.block_of[x], c2.block_of[x]), []).append(x)
    return _canonical(groups.values())


def enumerate_congruences(sem: FiniteSemigroup, cap: int = 200) -> tuple[Congruence, ...]:
    """All congruences: identity plus the join closure of the principal
    congruences, sorted by partition fingerprint."""
    n = len(sem)
    if n > cap:
        raise SemigroupTooLargeError(
            f"brute-force congruence enumeration capped at {cap} elements, got {n}"
        )
    table = sem.table
    found: set[Congruence] = {identity_congruence(n)}
    queue: list[Congruence] = []
    for i in range(n):
        for j in range(i + 1, n):
            c = _closure(table, n, [(i, j)])
            if c not in found:
                found.add(c)
                queue.append(c)
    while queue:
        c = queue.pop()
        for d in list(found):
            joined = join_congruences(sem, c, d)
            if joined not in found:
                found.add(joined)
                queue.append(joined)
    return tuple(sorted(found, key=lambda c: c.blocks))


def congruence_lattice(sem: FiniteSemigroup, cap: int = 200) -> FiniteLattice:
    """The enumerated congruences ordered by refinement.

    Congruence sets are always lattices; a NotALatticeError here signals an
    internal inconsistency and is allowed to propagate."""
    congs = enumerate_congruences(sem, cap)
    return from_poset(congs, lambda a, b: a.refines(b))


def is_compatible(sem: FiniteSemigroup, c: Congruence) -> bool:
    """Full compatibility check of a partition against the table."""
    t = sem.table
    n = len(sem)
    if sorted(x for blk in c.blocks for x in blk) != list(range(n)):
        return False
    for blk in c.blocks:
        for x in blk:
            for y in blk:
                for s in range(n):
                    if not c.relates(t[s][x], t[s][y]):
                        return False
                    if not c.relates(t[x][s], t[y][s]):
                        return False
    return True


def congruence_to_json(sem: FiniteSemigroup, c: Congruence) -> list[list[str]]:
    """Sorted list of sorted blocks of element renderings."""
    rendered = [sorted(render_element(sem.elements[x]) for x in blk) for blk in c.blocks]
    return sorted(rendered)
