"""Finite-dimensional unital algebras given by structure constants.

An algebra of dimension d stores its multiplication sparsely as entries
(i, j, k, c) meaning e_i * e_j contains c * e_k; products of arbitrary
vectors expand bilinearly.  No associativity or commutativity is assumed
anywhere.  Dense per-basis operator tables are cached lazily for the
closure loops, and over F_p those live in numpy (exact: int64 residues).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (BudgetExceeded, DimensionMismatch, ExactModeUnavailable,
                     ValidationError)
from .fields import FieldSpec, Scalar
from .linalg import (Subspace, Vec, kernel, mat_inverse, mat_vec,
                     projective_count, projective_points, solve_affine)


@dataclass(frozen=True)
class Algebra:
    field: FieldSpec
    dim: int
    mult: tuple[tuple[int, int, int, Scalar], ...]  # sorted (i, j, k, c), c != 0
    unit: Vec
    involution: tuple[tuple[Scalar, ...], ...] | None = None
    labels: tuple[str, ...] | None = None

    # -- element helpers ------------------------------------------------

    def element(self, coords) -> Vec:
        coords = tuple(self.field.coerce(c) for c in coords)
        if len(coords) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {len(coords)}")
        return coords

    def basis_vector(self, i: int) -> Vec:
        return tuple(self.field.one if j == i else self.field.zero
                     for j in range(self.dim))

    def zero_vec(self) -> Vec:
        return (self.field.zero,) * self.dim

    def scalar_vec(self, c) -> Vec:
        return self.scale(self.field.coerce(c), self.unit)

    def add_vec(self, x: Vec, y: Vec) -> Vec:
        f = self.field
        return tuple(f.add(a, b) for a, b in zip(x, y))

    def sub_vec(self, x: Vec, y: Vec) -> Vec:
        f = self.field
        return tuple(f.sub(a, b) for a, b in zip(x, y))

    def neg_vec(self, x: Vec) -> Vec:
        return tuple(self.field.neg(a) for a in x)

    def scale(self, c: Scalar, x: Vec) -> Vec:
        f = self.field
        return tuple(f.mul(c, a) for a in x)

    def is_zero_vec(self, x: Vec) -> bool:
        return not any(x)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"e{i}"

    # -- cached derived tables -------------------------------------------

    @cached_property
    def _by_pair(self) -> dict:
        table: dict[tuple[int, int], list] = {}
        for i, j, k, c in self.mult:
            table.setdefault((i, j), []).append((k, c))
        return table

    @cached_property
    def product_table(self) -> tuple:
        """Dense e_i * e_j vectors."""
        out = []
        f = self.field
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                v = [f.zero] * self.dim
                for k, c in self._by_pair.get((i, j), ()):
                    v[k] = f.add(v[k], c)
                row.append(tuple(v))
            out.append(tuple(row))
        return tuple(out)

    @cached_property
    def _np_tensor(self) -> np.ndarray:
        """C[i, j, k] over F_p as int64."""
        assert self.field.is_finite
        c = np.zeros((self.dim,) * 3, dtype=np.int64)
        for i, j, k, s in self.mult:
            c[i, j, k] = s % self.field.p
        return c

    @cached_property
    def _np_ops(self) -> np.ndarray:
        """Stack of the 2*dim operators v -> e_j v and v -> v e_j."""
        c = self._np_tensor
        left = np.transpose(c, (0, 2, 1))   # left[j][k][m] = C[j][m][k]
        right = np.transpose(c, (1, 2, 0))  # right[j][k][m] = C[m][j][k]
        return np.concatenate([left, right])

    # -- products ---------------------------------------------------------

    def multiply(self, x: Vec, y: Vec) -> Vec:
        f = self.field
        out = [f.zero] * self.dim
        for i, j, k, c in self.mult:
            a = x[i]
            if not a:
                continue
            b = y[j]
            if not b:
                continue
            out[k] = f.add(out[k], f.mul(f.mul(a, b), c))
        return tuple(out)

    def left_by_basis(self, j: int, v) -> Vec:
        """e_j * v"""
        f = self.field
        out = [f.zero] * self.dim
        for m in range(self.dim):
            a = v[m]
            if not a:
                continue
            for k, c in self._by_pair.get((j, m), ()):
                out[k] = f.add(out[k], f.mul(a, c))
        return tuple(out)

    def right_by_basis(self, j: int, v) -> Vec:
        """v * e_j"""
        f = self.field
        out = [f.zero] * self.dim
        for m in range(self.dim):
            a = v[m]
            if not a:
                continue
            for k, c in self._by_pair.get((m, j), ()):
                out[k] = f.add(out[k], f.mul(a, c))
        return tuple(out)

    def star(self, v: Vec) -> Vec:
        if self.involution is None:
            raise ValidationError("algebra has no involution")
        return mat_vec(self.field, self.involution, v)


def make_algebra(field: FieldSpec, dim: int, entries, unit,
                 involution=None, labels=None) -> Algebra:
    """Coerce, canonicalize, and validate a structure-constant algebra."""
    acc: dict[tuple[int, int, int], Scalar] = {}
    for i, j, k, c in entries:
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise ValidationError(f"tensor index {(i, j, k)} out of range for dim {dim}")
        c = field.coerce(c)
        key = (i, j, k)
        prev = acc.get(key, field.zero)
        acc[key] = field.add(prev, c)
    mult = tuple((i, j, k, c) for (i, j, k), c in sorted(acc.items()) if c)
    unit = tuple(field.coerce(c) for c in unit)
    if len(unit) != dim:
        raise DimensionMismatch("unit length != dim")
    if involution is not None:
        involution = tuple(tuple(field.coerce(c) for c in row) for row in involution)
        if len(involution) != dim or any(len(r) != dim for r in involution):
            raise DimensionMismatch("involution matrix shape != dim x dim")
    if labels is not None:
        labels = tuple(str(s) for s in labels)
        if len(labels) != dim:
            raise DimensionMismatch("labels length != dim")

    alg = Algebra(field, dim, mult, unit, involution, labels)
    for j in range(dim):
        e = alg.basis_vector(j)
        if alg.multiply(alg.unit, e) != e or alg.multiply(e, alg.unit) != e:
            raise ValidationError(f"unit is not a two-sided identity at basis {j}")
    if involution is not None:
        _check_involution(alg)
    return alg


def _check_involution(alg: Algebra) -> None:
    if alg.star(alg.unit) != alg.unit:
        raise ValidationError("involution does not fix the unit")
    for i in range(alg.dim):
        if alg.star(alg.star(alg.basis_vector(i))) != alg.basis_vector(i):
            raise ValidationError("involution does not square to the identity")
    for i in range(alg.dim):
        si = alg.star(alg.basis_vector(i))
        for j in range(alg.dim):
            lhs = alg.star(alg.product_table[i][j])
            rhs = alg.multiply(alg.star(alg.basis_vector(j)), si)
            if lhs != rhs:
                raise ValidationError(f"involution does not reverse products at {(i, j)}")


# -- brackets ----------------------------------------------------------------

def multiply(alg: Algebra, x: Vec, y: Vec) -> Vec:
    return alg.multiply(x, y)


def commutator(alg: Algebra, x: Vec, y: Vec) -> Vec:
    return alg.sub_vec(alg.multiply(x, y), alg.multiply(y, x))


def associator(alg: Algebra, x: Vec, y: Vec, z: Vec) -> Vec:
    return alg.sub_vec(alg.multiply(alg.multiply(x, y), z),
                       alg.multiply(x, alg.multiply(y, z)))


def brackets(alg: Algebra, x: Vec, y: Vec, z: Vec) -> tuple[Vec, Vec]:
    """Commutator [x, y] and associator (x, y, z)."""
    return commutator(alg, x, y), associator(alg, x, y, z)


# -- nuclei and center ------------------------------------------------------

@dataclass(frozen=True)
class CentralSubspaces:
    left: Subspace      # x with (x, -, -) = 0
    middle: Subspace    # x with (-, x, -) = 0
    right: Subspace     # x with (-, -, x) = 0
    nucleus: Subspace
    commuter: Subspace  # x with [x, -] = 0
    center: Subspace


def _associator_triples(alg: Algebra):
    """Dense table (e_i, e_j, e_k) for the generic path."""
    prod = alg.product_table
    table = []
    for i in range(alg.dim):
        plane = []
        for j in range(alg.dim):
            row = []
            for k in range(alg.dim):
                row.append(alg.sub_vec(alg.right_by_basis(k, prod[i][j]),
                                       alg.left_by_basis(i, prod[j][k])))
            plane.append(row)
        table.append(plane)
    return table


def _nucleus_blocks_np(alg: Algebra):
    c = alg._np_tensor
    d = alg.dim
    p = alg.field.p
    defect = (np.einsum("ijm,mkl->ijkl", c, c) -
              np.einsum("jkm,iml->ijkl", c, c)) % p
    left = defect.transpose(1, 2, 3, 0).reshape(d ** 3, d)
    middle = defect.transpose(0, 2, 3, 1).reshape(d ** 3, d)
    right = defect.transpose(0, 1, 3, 2).reshape(d ** 3, d)
    comm = ((c - c.transpose(1, 0, 2)) % p).transpose(1, 2, 0).reshape(d * d, d)
    return left, middle, right, comm


def _nucleus_blocks_generic(alg: Algebra):
    d = alg.dim
    trip = _associator_triples(alg)
    left, middle, right = [], [], []
    for a in range(d):
        for b in range(d):
            for l in range(d):
                left.append([trip[i][a][b][l] for i in range(d)])
                middle.append([trip[a][i][b][l] for i in range(d)])
                right.append([trip[a][b][i][l] for i in range(d)])
    comm = []
    prod = alg.product_table
    for j in range(d):
        for l in range(d):
            comm.append([alg.field.sub(prod[i][j][l], prod[j][i][l])
                         for i in range(d)])
    return left, middle, right, comm


def nucleus_equation_rows(alg: Algebra) -> list:
    """Rows whose kernel is the nucleus; reused as membership constraints."""
    if alg.field.is_finite:
        left, middle, right, _ = _nucleus_blocks_np(alg)
        return [tuple(int(x) for x in row)
                for row in np.concatenate([left, middle, right])]
    left, middle, right, _ = _nucleus_blocks_generic(alg)
    return left + middle + right


def nucleus_and_center(alg: Algebra) -> CentralSubspaces:
    f = alg.field
    d = alg.dim
    if f.is_finite:
        left, middle, right, comm = _nucleus_blocks_np(alg)
        stack = lambda blocks: kernel(f, np.concatenate(blocks).tolist(), d)
        return CentralSubspaces(
            left=stack([left]), middle=stack([middle]), right=stack([right]),
            nucleus=stack([left, middle, right]),
            commuter=stack([comm]),
            center=stack([left, middle, right, comm]))
    left, middle, right, comm = _nucleus_blocks_generic(alg)
    return CentralSubspaces(
        left=kernel(f, left, d), middle=kernel(f, middle, d),
        right=kernel(f, right, d),
        nucleus=kernel(f, left + middle + right, d),
        commuter=kernel(f, comm, d),
        center=kernel(f, left + middle + right + comm, d))


# -- inverses ----------------------------------------------------------------

def inverse_system(alg: Algebra, r: Vec):
    """Equations for s with r s = 1 and s r = 1, as (rows, rhs)."""
    f = alg.field
    d = alg.dim
    left = [[f.zero] * d for _ in range(d)]   # (r s)_k rows
    right = [[f.zero] * d for _ in range(d)]  # (s r)_k rows
    for i, j, k, c in alg.mult:
        if r[i]:
            left[k][j] = f.add(left[k][j], f.mul(r[i], c))
        if r[j]:
            right[k][i] = f.add(right[k][i], f.mul(r[j], c))
    return left + right, list(alg.unit) + list(alg.unit)


def two_sided_inverse(alg: Algebra, r: Vec) -> Vec | None:
    """A solution of r s = s r = 1, or None.  Free coordinates are zeroed,
    so the answer is deterministic; uniqueness is not assumed."""
    rows, rhs = inverse_system(alg, r)
    particular, _ = solve_affine(alg.field, rows, rhs)
    return particular


def left_mult_matrix(alg: Algebra, v: Vec):
    """Matrix of x -> v x."""
    f = alg.field
    d = alg.dim
    m = [[f.zero] * d for _ in range(d)]
    for i, j, k, c in alg.mult:
        if v[i]:
            m[k][j] = f.add(m[k][j], f.mul(v[i], c))
    return tuple(tuple(row) for row in m)


def right_mult_matrix(alg: Algebra, v: Vec):
    """Matrix of x -> x v."""
    f = alg.field
    d = alg.dim
    m = [[f.zero] * d for _ in range(d)]
    for i, j, k, c in alg.mult:
        if v[j]:
            m[k][i] = f.add(m[k][i], f.mul(v[j], c))
    return tuple(tuple(row) for row in m)


# -- ideal closures ----------------------------------------------------------

def _closure_np(alg: Algebra, seeds, maps=(), need_rank: int | None = None):
    """Batch fixpoint: repeatedly append all basis products (and extra maps)
    of the current row space, stopping when the rank stabilizes."""
    from .linalg import np_rref
    p = alg.field.p
    d = alg.dim
    ops = alg._np_ops
    if maps:
        extra = np.array([[[int(c) % p for c in row] for row in m] for m in maps],
                         dtype=np.int64)
        ops = np.concatenate([ops, extra])
    rows = np.array([list(map(int, v)) for v in seeds], dtype=np.int64).reshape(-1, d)
    ech, piv = np_rref(rows, p)
    target = d if need_rank is None else need_rank
    while ech.shape[0] < target:
        prods = np.einsum("kij,rj->rki", ops, ech).reshape(-1, d) % p
        nxt, npiv = np_rref(np.concatenate([ech, prods]), p)
        if nxt.shape[0] == ech.shape[0]:
            break
        ech, piv = nxt, npiv
    return ech, piv


def _closure_generic(alg: Algebra, seeds, maps=()):
    from .linalg import Echelon
    ech = Echelon(alg.field, alg.dim)
    ech.extend(seeds)
    while ech.rank < alg.dim:
        batch = []
        for row in [list(r) for r in ech.rows]:
            for j in range(alg.dim):
                batch.append(alg.left_by_basis(j, row))
                batch.append(alg.right_by_basis(j, row))
            for m in maps:
                batch.append(mat_vec(alg.field, m, row))
        if not ech.extend(batch):
            break
    return ech


def ideal_closure(alg: Algebra, generators, maps=()) -> Subspace:
    """Least subspace containing the generators that is closed under left and
    right multiplication by the whole algebra (and under the extra linear
    maps, when given)."""
    gens = [alg.element(v) for v in generators]
    if alg.field.is_finite:
        ech, piv = _closure_np(alg, gens, maps)
        return Subspace(alg.field, alg.dim,
                        tuple(tuple(int(c) for c in row) for row in ech),
                        tuple(piv))
    return _closure_generic(alg, gens, maps).to_subspace()


def _closure_is_full(alg: Algebra, seed, maps=()) -> bool:
    if alg.field.is_finite:
        ech, _ = _closure_np(alg, [seed], maps)
        return ech.shape[0] == alg.dim
    return _closure_generic(alg, [seed], maps).rank == alg.dim


# -- simplicity --------------------------------------------------------------

@dataclass(frozen=True)
class SimplicityVerdict:
    simple: bool
    witness: Vec | None   # generator of a proper nonzero invariant ideal
    mode: str             # "exact" or "randomized"
    checked: int


def random_element(alg: Algebra, rng: random.Random, bound: int = 10) -> Vec:
    f = alg.field
    for _ in range(64):
        if f.is_finite:
            v = tuple(rng.randrange(f.p) for _ in range(alg.dim))
        else:
            v = tuple(f.coerce(rng.randint(-bound, bound)) for _ in range(alg.dim))
        if any(v):
            return v
    return alg.basis_vector(0)


def simple_under(alg: Algebra, maps=(), mode: str = "auto",
                 budget: int = 1_000_000, trials: int = 1000, seed: int = 0,
                 coeff_bound: int = 10) -> SimplicityVerdict:
    """Decide whether the only ideals closed under the extra maps are 0 and
    the whole algebra.  Exact mode enumerates projective points over F_p;
    randomized mode samples and can only refute or report no-counterexample."""
    if mode == "auto":
        mode = "exact" if alg.field.is_finite else "randomized"
    if mode == "exact":
        if not alg.field.is_finite:
            raise ExactModeUnavailable("exact enumeration needs a finite field")
        total = projective_count(alg.field.p, alg.dim)
        if total > budget:
            raise BudgetExceeded(f"{total} projective points exceed budget {budget}")
        checked = 0
        for pt in projective_points(alg.field.p, alg.dim):
            checked += 1
            if not _closure_is_full(alg, pt, maps):
                return SimplicityVerdict(False, pt, "exact", checked)
        return SimplicityVerdict(True, None, "exact", checked)
    rng = random.Random(seed)
    for t in range(trials):
        v = random_element(alg, rng, coeff_bound)
        if not _closure_is_full(alg, v, maps):
            return SimplicityVerdict(False, v, "randomized", t + 1)
    return SimplicityVerdict(True, None, "randomized", trials)


def is_simple(alg: Algebra, mode: str = "auto", budget: int = 1_000_000,
              trials: int = 1000, seed: int = 0) -> SimplicityVerdict:
    return simple_under(alg, (), mode, budget, trials, seed)


def subfield_check(alg: Algebra, s: Subspace, budget: int = 1_000_000) -> bool:
    """Every nonzero element of the subspace has a two-sided inverse lying
    in the subspace again (so s, assumed closed under products, is a field)."""
    if not alg.field.is_finite:
        if s.rank == 1 and s.contains(alg.unit):
            return True  # the scalar line
        raise ExactModeUnavailable("field check over Q needs the scalar line")
    if s.rank and projective_count(alg.field.p, s.rank) > budget:
        raise BudgetExceeded("subspace too large to enumerate")
    for v in s.coordinates():
        inv = two_sided_inverse(alg, v)
        if inv is None or not s.contains(inv):
            return False
    return True


def center_is_field(alg: Algebra, central: CentralSubspaces | None = None,
                    budget: int = 1_000_000) -> bool:
    """Every nonzero central element has a two-sided inverse (necessarily
    central again, but membership is still checked)."""
    z = (central or nucleus_and_center(alg)).center
    return subfield_check(alg, z, budget)


# -- global structure checks -------------------------------------------------

def associator_defect(alg: Algebra) -> Subspace:
    """Span of all basis associators; zero exactly for associative algebras."""
    if alg.field.is_finite:
        c = alg._np_tensor
        p = alg.field.p
        d = alg.dim
        defect = (np.einsum("ijm,mkl->ijkl", c, c) -
                  np.einsum("jkm,iml->ijkl", c, c)) % p
        from .linalg import np_to_subspace
        return np_to_subspace(alg.field, defect.reshape(-1, d), d)
    trip = _associator_triples(alg)
    vecs = [trip[i][j][k] for i in range(alg.dim)
            for j in range(alg.dim) for k in range(alg.dim)]
    return Subspace.span(alg.field, alg.dim, vecs)


def is_associative(alg: Algebra) -> bool:
    return associator_defect(alg).is_zero


def is_ring_automorphism(alg: Algebra, m) -> bool:
    """Bijective, unit-fixing, multiplicative on all basis pairs."""
    if mat_inverse(alg.field, m) is None:
        return False
    if mat_vec(alg.field, m, alg.unit) != alg.unit:
        return False
    cols = [mat_vec(alg.field, m, alg.basis_vector(j)) for j in range(alg.dim)]
    for i in range(alg.dim):
        for j in range(alg.dim):
            if mat_vec(alg.field, m, alg.product_table[i][j]) != \
                    alg.multiply(cols[i], cols[j]):
                return False
    return True


def conjugation_matrix(alg: Algebra, u: Vec):
    """Matrix of x -> (u x) u^{-1}; needs u two-sided invertible."""
    uinv = two_sided_inverse(alg, u)
    if uinv is None:
        raise ValidationError("conjugation by a non-invertible element")
    cols = [alg.multiply(alg.multiply(u, alg.basis_vector(j)), uinv)
            for j in range(alg.dim)]
    return tuple(tuple(cols[j][k] for j in range(alg.dim)) for k in range(alg.dim))
