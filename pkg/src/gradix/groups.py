"""Finite groups as validated multiplication tables.

Everything is index-based: a group of order n has elements 0..n-1 and a
dense n x n table.  Intended scale is tables of order <= 16, so the
cubic associativity scan is fine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (MissingIdentity, MissingInverse, NonAssociativeTable,
                     NotNormal, ValidationError)


@dataclass(frozen=True)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverses: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, a: int, h: int) -> int:
        """h a h^-1"""
        return self.mul(self.mul(h, a), self.inv(h))

    def commutator(self, a: int, b: int) -> int:
        return self.mul(self.mul(self.mul(a, b), self.inv(a)), self.inv(b))

    def elements(self) -> range:
        return range(self.order)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"g{i}"

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a]
                   for a in self.elements() for b in self.elements())

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k


def validate_group(table, identity: int | None = None,
                   labels=None) -> FiniteGroup:
    """Check identity, inverses, and associativity; raise on the first failure."""
    n = len(table)
    table = tuple(tuple(row) for row in table)
    if any(len(row) != n for row in table):
        raise ValidationError("table is not square")
    for row in table:
        for x in row:
            if not 0 <= x < n:
                raise ValidationError(f"table entry {x} out of range")

    if identity is None:
        identity = next((e for e in range(n)
                         if all(table[e][a] == a and table[a][e] == a for a in range(n))),
                        None)
        if identity is None:
            raise MissingIdentity("no two-sided identity in table")
    else:
        for a in range(n):
            if table[identity][a] != a or table[a][identity] != a:
                raise MissingIdentity(f"element {identity} is not an identity at {a}")

    inverses = []
    for a in range(n):
        b = next((b for b in range(n)
                  if table[a][b] == identity and table[b][a] == identity), None)
        if b is None:
            raise MissingInverse(f"element {a} has no two-sided inverse")
        inverses.append(b)

    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise NonAssociativeTable(f"associativity fails at {(a, b, c)}")

    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise ValidationError("labels length != order")
    return FiniteGroup(table, identity, tuple(inverses), labels)


@dataclass(frozen=True)
class Subgroup:
    group: FiniteGroup
    members: tuple[int, ...]  # sorted, closed, with identity and inverses

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, a: int) -> bool:
        return a in self._memberset

    @property
    def _memberset(self) -> frozenset:
        return frozenset(self.members)

    def is_normal(self) -> bool:
        g = self.group
        mem = self._memberset
        return all(g.conj(a, h) in mem for a in self.members for h in g.elements())


def subgroup(g: FiniteGroup, members) -> Subgroup:
    mem = frozenset(members)
    if g.identity not in mem:
        raise ValidationError("subgroup misses the identity")
    for a in mem:
        if g.inv(a) not in mem:
            raise ValidationError(f"subgroup not closed under inverse of {a}")
        for b in mem:
            if g.mul(a, b) not in mem:
                raise ValidationError(f"subgroup not closed at {(a, b)}")
    return Subgroup(g, tuple(sorted(mem)))


def center(g: FiniteGroup) -> Subgroup:
    members = [a for a in g.elements()
               if all(g.mul(a, b) == g.mul(b, a) for b in g.elements())]
    return Subgroup(g, tuple(members))


@dataclass(frozen=True)
class CentralSeries:
    """Ascending central series {e} = Z_0 <= Z_1 <= ... until it stabilizes."""

    chain: tuple[Subgroup, ...]
    hypercentral: bool


def central_series(g: FiniteGroup) -> CentralSeries:
    chain = [subgroup(g, [g.identity])]
    while True:
        current = chain[-1]._memberset
        nxt = frozenset(a for a in g.elements()
                        if all(g.commutator(a, h) in current for h in g.elements()))
        if nxt == current:
            break
        chain.append(subgroup(g, nxt))
    return CentralSeries(tuple(chain), chain[-1].order == g.order)


def quotient_group(g: FiniteGroup, n: Subgroup) -> tuple[FiniteGroup, tuple[int, ...]]:
    """G/N plus the projection map; N must be normal."""
    if n.group is not g and n.group != g:
        raise ValidationError("subgroup belongs to a different group")
    if not n.is_normal():
        raise NotNormal(f"subgroup {n.members} is not normal")
    mem = n._memberset
    coset_of: dict[int, int] = {}
    reps: list[int] = []  # cosets ordered by minimal member
    for a in g.elements():
        if a in coset_of:
            continue
        idx = len(reps)
        reps.append(a)
        for h in mem:
            coset_of[g.mul(a, h)] = idx
    proj = tuple(coset_of[a] for a in g.elements())
    table = tuple(tuple(proj[g.mul(reps[i], reps[j])] for j in range(len(reps)))
                  for i in range(len(reps)))
    labels = None
    if g.labels:
        labels = tuple("{" + ",".join(g.label(a) for a in sorted(g.elements())
                                      if proj[a] == i) + "}"
                       for i in range(len(reps)))
    return validate_group(table, identity=proj[g.identity], labels=labels), proj


# -- stock constructions -----------------------------------------------------

def cyclic(n: int) -> FiniteGroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return validate_group(table, identity=0,
                          labels=[f"r{i}" if i else "e" for i in range(n)])


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    pairs = list(itertools.product(a.elements(), b.elements()))
    index = {pq: i for i, pq in enumerate(pairs)}
    table = [[index[(a.mul(p1, p2), b.mul(q1, q2))] for (p2, q2) in pairs]
             for (p1, q1) in pairs]
    labels = [f"({a.label(p)},{b.label(q)})" for (p, q) in pairs]
    return validate_group(table, identity=index[(a.identity, b.identity)],
                          labels=labels)


def elementary_abelian_two(k: int) -> FiniteGroup:
    """(Z/2)^k with element i carrying the bit pattern of i; product is xor."""
    n = 1 << k
    table = [[i ^ j for j in range(n)] for i in range(n)]
    return validate_group(table, identity=0,
                          labels=[format(i, f"0{max(k, 1)}b") for i in range(n)])


def dihedral(n: int) -> FiniteGroup:
    """Order 2n: indices 0..n-1 rotations, n..2n-1 reflections."""
    def mul(a, b):
        fa, ia = divmod(a, n)
        fb, ib = divmod(b, n)
        if not fa and not fb:
            return (ia + ib) % n
        if not fa and fb:
            return n + (ib - ia) % n
        if fa and not fb:
            return n + (ia + ib) % n
        return (ib - ia) % n
    table = [[mul(a, b) for b in range(2 * n)] for a in range(2 * n)]
    labels = [f"r{i}" for i in range(n)] + [f"sr{i}" for i in range(n)]
    return validate_group(table, identity=0, labels=labels)


def symmetric(n: int) -> FiniteGroup:
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    compose = lambda p, q: tuple(p[q[i]] for i in range(n))
    table = [[index[compose(p, q)] for q in perms] for p in perms]
    labels = ["".join(map(str, p)) for p in perms]
    return validate_group(table, identity=index[tuple(range(n))], labels=labels)


def trivial_group() -> FiniteGroup:
    return validate_group([[0]], identity=0, labels=["e"])
