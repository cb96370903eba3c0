"""Exact linear algebra: reduced row echelon forms, subspaces, kernels.

Two parallel implementations live here.  The generic one works over any
FieldSpec with plain Python scalars and is the reference for everything.
The numpy one handles F_p only (int64 arrays reduced mod p) and exists
because the ideal-closure loops enumerate thousands of subspaces; it is
exact as long as p**2 * dim fits in int64, which desk-scale inputs do.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DimensionMismatch
from .fields import FieldSpec, Scalar

Vec = tuple  # coordinate vector, entries are field scalars
Mat = tuple  # tuple of row tuples


# -- generic echelon forms ---------------------------------------------------

class Echelon:
    """Mutable builder for a canonical RREF row set over an exact field."""

    def __init__(self, field: FieldSpec, ambient: int):
        self.field = field
        self.ambient = ambient
        self.rows: list[list[Scalar]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence[Scalar]) -> list[Scalar]:
        """Residue of v after elimination against the current rows."""
        f = self.field
        v = list(v)
        for row, piv in zip(self.rows, self.pivots):
            c = v[piv]
            if c:
                for j in range(piv, self.ambient):
                    v[j] = f.sub(v[j], f.mul(c, row[j]))
        return v

    def add(self, v: Sequence[Scalar]) -> bool:
        """Insert v; returns True when the rank grew."""
        f = self.field
        v = self.reduce(v)
        lead = next((j for j, c in enumerate(v) if c), None)
        if lead is None:
            return False
        inv = f.inv(v[lead])
        v = [f.mul(inv, c) for c in v]
        # keep full reduction: clear the new pivot column above
        for row in self.rows:
            c = row[lead]
            if c:
                for j in range(lead, self.ambient):
                    row[j] = f.sub(row[j], f.mul(c, v[j]))
        at = next((i for i, p in enumerate(self.pivots) if p > lead), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, lead)
        return True

    def extend(self, vectors: Iterable[Sequence[Scalar]]) -> bool:
        grew = False
        for v in vectors:
            grew |= self.add(v)
        return grew

    def contains(self, v: Sequence[Scalar]) -> bool:
        return not any(self.reduce(v))

    def to_subspace(self) -> "Subspace":
        return Subspace(self.field, self.ambient,
                        tuple(tuple(r) for r in self.rows), tuple(self.pivots))


@dataclass(frozen=True)
class Subspace:
    """A subspace held as canonical RREF basis rows; equality is literal."""

    field: FieldSpec
    ambient: int
    basis: Mat
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, field: FieldSpec, ambient: int,
             vectors: Iterable[Sequence[Scalar]] = ()) -> "Subspace":
        ech = Echelon(field, ambient)
        ech.extend(vectors)
        return ech.to_subspace()

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @property
    def is_full(self) -> bool:
        return len(self.basis) == self.ambient

    def _echelon(self) -> Echelon:
        ech = Echelon(self.field, self.ambient)
        ech.rows = [list(r) for r in self.basis]
        ech.pivots = list(self.pivots)
        return ech

    def contains(self, v: Sequence[Scalar]) -> bool:
        if len(v) != self.ambient:
            raise DimensionMismatch(f"vector length {len(v)} != ambient {self.ambient}")
        return self._echelon().contains(v)

    def contains_subspace(self, other: "Subspace") -> bool:
        ech = self._echelon()
        return all(ech.contains(row) for row in other.basis)

    def add(self, other: "Subspace") -> "Subspace":
        ech = self._echelon()
        ech.extend(other.basis)
        return ech.to_subspace()

    def intersect(self, other: "Subspace") -> "Subspace":
        # kernel trick: relations a.U - b.V = 0 give the common vectors
        if self.is_zero or other.is_zero:
            return Subspace.span(self.field, self.ambient)
        cols = [list(r) for r in self.basis] + \
               [[self.field.neg(c) for c in r] for r in other.basis]
        eqs = [tuple(col[k] for col in cols) for k in range(self.ambient)]
        rel = kernel(self.field, eqs, len(cols))
        f = self.field
        vecs = []
        for lam in rel.basis:
            w = [f.zero] * self.ambient
            for a, row in zip(lam[: self.rank], self.basis):
                if a:
                    for j in range(self.ambient):
                        w[j] = f.add(w[j], f.mul(a, row[j]))
            vecs.append(w)
        return Subspace.span(self.field, self.ambient, vecs)

    def coordinates(self) -> Iterator[Vec]:
        """All nonzero vectors of the subspace up to scalars (finite fields)."""
        f = self.field
        for coeffs in projective_points(f.p, self.rank):
            w = [f.zero] * self.ambient
            for a, row in zip(coeffs, self.basis):
                if a:
                    for j in range(self.ambient):
                        w[j] = f.add(w[j], f.mul(a, row[j]))
            yield tuple(w)


# -- solving -----------------------------------------------------------------

def rref(field: FieldSpec, rows: Iterable[Sequence[Scalar]], width: int) -> Echelon:
    ech = Echelon(field, width)
    ech.extend(rows)
    return ech


def kernel(field: FieldSpec, equations: Iterable[Sequence[Scalar]], width: int) -> Subspace:
    """Solution space of the homogeneous system (one equation per row)."""
    equations = [list(e) for e in equations]
    if field.is_finite and equations and width:
        rows = np_kernel(np.array(equations, dtype=np.int64), field.p)
        return np_to_subspace(field, rows, width)
    ech = rref(field, equations, width)
    piv = set(ech.pivots)
    free = [j for j in range(width) if j not in piv]
    vecs = []
    for fcol in free:
        v = [field.zero] * width
        v[fcol] = field.one
        for row, p in zip(ech.rows, ech.pivots):
            v[p] = field.neg(row[fcol])
        vecs.append(v)
    return Subspace.span(field, width, vecs)


def solve_affine(field: FieldSpec, equations: Sequence[Sequence[Scalar]],
                 rhs: Sequence[Scalar]) -> tuple[Vec | None, Subspace]:
    """Particular solution of A x = b (or None) plus the homogeneous kernel."""
    width = len(equations[0]) if equations else 0
    aug = rref(field, [list(e) + [b] for e, b in zip(equations, rhs)], width + 1)
    if width in aug.pivots:
        return None, kernel(field, equations, width)
    x = [field.zero] * width
    for row, p in zip(aug.rows, aug.pivots):
        x[p] = row[width]
    return tuple(x), kernel(field, equations, width)


# -- matrix helpers ----------------------------------------------------------

def mat_vec(field: FieldSpec, m: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> Vec:
    return tuple(
        _dot(field, row, v)
        for row in m
    )


def _dot(field, row, v):
    acc = field.zero
    for a, b in zip(row, v):
        if a and b:
            acc = field.add(acc, field.mul(a, b))
    return acc


def mat_mul(field: FieldSpec, a: Sequence[Sequence[Scalar]],
            b: Sequence[Sequence[Scalar]]) -> Mat:
    bt = list(zip(*b))
    return tuple(tuple(_dot(field, row, col) for col in bt) for row in a)


def mat_eq(a, b) -> bool:
    return all(tuple(ra) == tuple(rb) for ra, rb in zip(a, b)) and len(a) == len(b)


def identity_matrix(field: FieldSpec, n: int) -> Mat:
    return tuple(tuple(field.one if i == j else field.zero for j in range(n))
                 for i in range(n))


def mat_inverse(field: FieldSpec, m: Sequence[Sequence[Scalar]]) -> Mat | None:
    n = len(m)
    aug = rref(field, [list(row) + list(ident) for row, ident in
                       zip(m, identity_matrix(field, n))], 2 * n)
    if aug.pivots[:n] != list(range(n)) or aug.rank != n:
        return None
    return tuple(tuple(row[n:]) for row in aug.rows)


def mat_power(field: FieldSpec, m: Mat, e: int) -> Mat:
    n = len(m)
    if e < 0:
        inv = mat_inverse(field, m)
        if inv is None:
            raise ZeroDivisionError("singular matrix")
        return mat_power(field, inv, -e)
    out = identity_matrix(field, n)
    base = m
    while e:
        if e & 1:
            out = mat_mul(field, out, base)
        base = mat_mul(field, base, base)
        e >>= 1
    return out


def coerce_matrix(field: FieldSpec, rows, n: int, m: int | None = None) -> Mat:
    m = n if m is None else m
    rows = [list(r) for r in rows]
    if len(rows) != n or any(len(r) != m for r in rows):
        raise DimensionMismatch(f"expected {n}x{m} matrix")
    return tuple(tuple(field.coerce(c) for c in r) for r in rows)


# -- projective enumeration --------------------------------------------------

def projective_count(p: int, dim: int) -> int:
    return (p ** dim - 1) // (p - 1)


def projective_points(p: int, dim: int) -> Iterator[tuple[int, ...]]:
    """One representative per projective point, first nonzero coordinate 1,
    in ascending lexicographic order on the full coordinate tuple."""
    for lead in range(dim - 1, -1, -1):
        for tail in itertools.product(range(p), repeat=dim - 1 - lead):
            yield (0,) * lead + (1,) + tail


# -- numpy fast path (F_p only) ----------------------------------------------

def np_rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """RREF of an int64 matrix mod p; returns (nonzero rows, pivot columns)."""
    a = np.array(a, dtype=np.int64) % p
    m, n = a.shape
    r = 0
    pivots: list[int] = []
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = a[r] * pow(int(a[r, c]), p - 2, p) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def np_kernel(a: np.ndarray, p: int) -> np.ndarray:
    """Basis rows of the right kernel of a mod p."""
    red, pivots = np_rref(a, p)
    n = a.shape[1]
    free = [j for j in range(n) if j not in pivots]
    out = np.zeros((len(free), n), dtype=np.int64)
    for k, fcol in enumerate(free):
        out[k, fcol] = 1
        for row, piv in zip(red, pivots):
            out[k, piv] = (-row[fcol]) % p
    return out


def np_to_subspace(field: FieldSpec, rows: np.ndarray, ambient: int) -> Subspace:
    red, pivots = np_rref(rows.reshape(-1, ambient), field.p)
    return Subspace(field, ambient,
                    tuple(tuple(int(c) for c in row) for row in red),
                    tuple(pivots))
