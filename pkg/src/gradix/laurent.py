"""Skew Laurent polynomial rings T[x_1^{pm1}, ..., x_n^{pm1}; sigma].

Elements are finitely supported maps from Z^n exponent vectors to T,

    (a x^m)(b x^k) = a sigma^m(b) x^{m+k},    sigma^m = sigma_1^{m_1} ... sigma_n^{m_n},

with the sigma_i pairwise commuting automorphisms of T.  Decision operations
need a finite search space, so they demand finite-field T and finite
automorphism orders.

The simplicity obstruction searched here: a nonzero exponent m and a unit u,
fixed by every sigma_i and lying in N(T), with t u = u sigma^m(t) for all t.
Such a pair makes 1 + u x^m central (for associative T this says sigma^m is
inner, conjugation by u^{-1}).  Since sigma^m only depends on m modulo the
orders, the box of residues plus the order points on the axes exhaust all
candidate m.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .algebra import (Algebra, SimplicityVerdict, is_ring_automorphism,
                      left_mult_matrix, nucleus_and_center,
                      nucleus_equation_rows, right_mult_matrix, simple_under,
                      two_sided_inverse)
from .errors import (BudgetExceeded, UnboundedSearch, ValidationError)
from .linalg import (Subspace, Vec, coerce_matrix, identity_matrix, kernel,
                     mat_mul, mat_power, mat_vec, projective_points)

Exp = tuple  # Z^n exponent vector


@dataclass(frozen=True)
class LaurentRing:
    algebra: Algebra
    rank: int
    sigma: tuple                      # one automorphism matrix per variable
    orders: tuple                     # multiplicative orders; None = infinite


def _matrix_order(field, m, cap: int) -> int | None:
    ident = identity_matrix(field, len(m))
    power = m
    for k in range(1, cap + 1):
        if power == ident:
            return k
        power = mat_mul(field, power, m)
    if field.is_finite:
        raise BudgetExceeded(f"automorphism order exceeds {cap}")
    return None


def make_laurent_ring(t: Algebra, sigma, order_cap: int = 1_000_000) -> LaurentRing:
    f = t.field
    sigma = tuple(coerce_matrix(f, m, t.dim) for m in sigma)
    for i, m in enumerate(sigma):
        if not is_ring_automorphism(t, m):
            raise ValidationError(f"sigma[{i}] is not a ring automorphism")
    for i in range(len(sigma)):
        for j in range(i + 1, len(sigma)):
            if mat_mul(f, sigma[i], sigma[j]) != mat_mul(f, sigma[j], sigma[i]):
                raise ValidationError(f"sigma[{i}] and sigma[{j}] do not commute")
    cap = order_cap if f.is_finite else 64
    orders = tuple(_matrix_order(f, m, cap) for m in sigma)
    return LaurentRing(t, len(sigma), sigma, orders)


def _reduce_exp(ring: LaurentRing, m: Exp) -> Exp:
    return tuple(mi % o if o is not None else mi
                 for mi, o in zip(m, ring.orders))


@lru_cache(maxsize=None)
def _sigma_power_cached(ring: LaurentRing, m: Exp):
    f = ring.algebra.field
    out = identity_matrix(f, ring.algebra.dim)
    for mat, mi in zip(ring.sigma, m):
        if mi:
            out = mat_mul(f, out, mat_power(f, mat, mi))
    return out


def sigma_power(ring: LaurentRing, m: Exp):
    return _sigma_power_cached(ring, _reduce_exp(ring, m))


# -- elements -------------------------------------------------------------------

@dataclass(frozen=True)
class LaurentElement:
    terms: tuple      # sorted ((exponent vector, coefficient vector)), coeffs nonzero

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> tuple:
        return tuple(m for m, _ in self.terms)


def laurent_element(ring: LaurentRing, terms) -> LaurentElement:
    acc: dict[Exp, Vec] = {}
    alg = ring.algebra
    for m, coeff in terms:
        m = tuple(int(x) for x in m)
        if len(m) != ring.rank:
            raise ValidationError(f"exponent {m} has rank != {ring.rank}")
        c = alg.element(coeff)
        acc[m] = alg.add_vec(acc[m], c) if m in acc else c
    return LaurentElement(tuple(sorted((m, c) for m, c in acc.items() if any(c))))


def laurent_zero(ring: LaurentRing) -> LaurentElement:
    return LaurentElement(())


def laurent_one(ring: LaurentRing) -> LaurentElement:
    return laurent_element(ring, [((0,) * ring.rank, ring.algebra.unit)])


def x_power(ring: LaurentRing, m, coeff=None) -> LaurentElement:
    coeff = ring.algebra.unit if coeff is None else coeff
    return laurent_element(ring, [(tuple(m), coeff)])


def laurent_add(ring: LaurentRing, a: LaurentElement, b: LaurentElement) -> LaurentElement:
    return laurent_element(ring, list(a.terms) + list(b.terms))


def laurent_neg(ring: LaurentRing, a: LaurentElement) -> LaurentElement:
    alg = ring.algebra
    return LaurentElement(tuple((m, alg.scale(alg.field.neg(alg.field.one), c))
                                for m, c in a.terms))


def laurent_sub(ring: LaurentRing, a: LaurentElement, b: LaurentElement) -> LaurentElement:
    return laurent_add(ring, a, laurent_neg(ring, b))


def laurent_multiply(ring: LaurentRing, a: LaurentElement, b: LaurentElement) -> LaurentElement:
    alg, f = ring.algebra, ring.algebra.field
    acc: dict[Exp, Vec] = {}
    for ma, ca in a.terms:
        twist = sigma_power(ring, ma)
        for mb, cb in b.terms:
            m = tuple(x + y for x, y in zip(ma, mb))
            w = alg.multiply(ca, mat_vec(f, twist, cb))
            acc[m] = alg.add_vec(acc[m], w) if m in acc else w
    return LaurentElement(tuple(sorted((m, c) for m, c in acc.items() if any(c))))


def laurent_commutator(ring: LaurentRing, a: LaurentElement, b: LaurentElement) -> LaurentElement:
    return laurent_sub(ring, laurent_multiply(ring, a, b), laurent_multiply(ring, b, a))


def laurent_associator(ring: LaurentRing, a, b, c) -> LaurentElement:
    return laurent_sub(ring,
                       laurent_multiply(ring, laurent_multiply(ring, a, b), c),
                       laurent_multiply(ring, a, laurent_multiply(ring, b, c)))


# -- decision operations ----------------------------------------------------------

def _require_searchable(ring: LaurentRing) -> None:
    if any(o is None for o in ring.orders):
        raise UnboundedSearch("some automorphism has infinite order")
    if not ring.algebra.field.is_finite:
        raise UnboundedSearch("unit search needs a finite coefficient field")


def is_sigma_simple(ring: LaurentRing, mode: str = "exact",
                    budget: int = 1_000_000, trials: int = 1000,
                    seed: int = 0) -> SimplicityVerdict:
    """No proper nonzero ideal of T invariant under every sigma_i."""
    return simple_under(ring.algebra, maps=ring.sigma, mode=mode,
                        budget=budget, trials=trials, seed=seed)


@lru_cache(maxsize=None)
def _fixed_nuclear_units(ring: LaurentRing) -> tuple:
    """Projective representatives, in lex order, of the two-sided units of T
    fixed by every sigma_i and lying in N(T).  The defining conditions are
    scale-invariant, so representatives suffice."""
    alg = ring.algebra
    f = alg.field
    nuc = nucleus_and_center(alg).nucleus
    out = []
    for v in projective_points(f.p, alg.dim):
        if all(mat_vec(f, s, v) == v for s in ring.sigma) and nuc.contains(v) \
                and two_sided_inverse(alg, v) is not None:
            out.append(v)
    return tuple(out)


def _conjugating_unit(ring: LaurentRing, m: Exp) -> Vec | None:
    """First fixed nuclear unit u with t u = u sigma^m(t) on all basis t."""
    alg, f = ring.algebra, ring.algebra.field
    twist = sigma_power(ring, m)
    for u in _fixed_nuclear_units(ring):
        if all(alg.multiply(alg.basis_vector(b), u)
               == alg.multiply(u, mat_vec(f, twist, alg.basis_vector(b)))
               for b in range(alg.dim)):
            return u
    return None


def _candidate_exponents(ring: LaurentRing):
    """Nonzero residues in the order box plus the order points on the axes,
    together in lex order."""
    cands = {m for m in itertools.product(*[range(o) for o in ring.orders])
             if any(m)}
    for i, o in enumerate(ring.orders):
        cands.add(tuple(o if j == i else 0 for j in range(ring.rank)))
    return sorted(cands)


def inner_witness_search(ring: LaurentRing) -> tuple[Vec, Exp] | None:
    _require_searchable(ring)
    for m in _candidate_exponents(ring):
        u = _conjugating_unit(ring, m)
        if u is not None:
            return u, m
    return None


def verify_central(ring: LaurentRing, c: LaurentElement) -> bool:
    """Commutators with t x^j and all three associator slots against pairs
    a x^j, b x^k, over a full period box of exponents.  Sufficient for
    centrality by bi-additivity and periodicity of the twists."""
    alg = ring.algebra
    box = [range(o) for o in ring.orders]
    singles = [x_power(ring, j, alg.basis_vector(b))
               for j in itertools.product(*box) for b in range(alg.dim)]
    for s in singles:
        if not laurent_commutator(ring, c, s).is_zero():
            return False
    for a in singles:
        for b in singles:
            if not laurent_associator(ring, c, a, b).is_zero():
                return False
            if not laurent_associator(ring, a, c, b).is_zero():
                return False
            if not laurent_associator(ring, a, b, c).is_zero():
                return False
    return True


@dataclass(frozen=True)
class LaurentVerdict:
    sigma_simple: bool
    sigma_witness: Vec | None          # generator of a proper invariant ideal
    witness: tuple[Vec, Exp] | None    # (u, m) obstruction when one exists
    simple: bool
    central_witness: LaurentElement | None


def laurent_simplicity_verdict(ring: LaurentRing,
                               budget: int = 1_000_000) -> LaurentVerdict:
    sig = is_sigma_simple(ring, budget=budget)
    pair = inner_witness_search(ring)
    central = None
    if pair is not None:
        u, m = pair
        central = laurent_add(ring, laurent_one(ring), x_power(ring, m, u))
        if not verify_central(ring, central):
            raise ValidationError("emitted witness failed centrality verification")
    return LaurentVerdict(sig.simple, sig.witness, pair,
                          sig.simple and pair is None, central)


# -- center structure --------------------------------------------------------------

@dataclass(frozen=True)
class CenterStructure:
    orders: tuple
    l_points: tuple                   # residues m (mod orders) with a conjugator
    conjugators: tuple                # the first conjugating unit per l point
    fixed_center: Subspace            # F = Z(T) interesected with the fixed space
    slice_exponents: tuple            # window exponents with nonzero center slice
    slice_bases: tuple                # coefficient-space basis per such exponent


def center_coefficient_space(ring: LaurentRing, m: Exp) -> Subspace:
    """Coefficients t_m admissible for a central element at exponent m:
    t t_m = t_m sigma^m(t), sigma_i(t_m) = t_m, and t_m in N(T)."""
    alg, f = ring.algebra, ring.algebra.field
    d = alg.dim
    twist = sigma_power(ring, m)
    ident = identity_matrix(f, d)
    rows = []
    for b in range(d):
        lmat = left_mult_matrix(alg, alg.basis_vector(b))
        rmat = right_mult_matrix(alg, mat_vec(f, twist, alg.basis_vector(b)))
        for r in range(d):
            row = tuple(f.sub(lmat[r][c], rmat[r][c]) for c in range(d))
            if any(row):
                rows.append(row)
    for s in ring.sigma:
        for r in range(d):
            row = tuple(f.sub(s[r][c], ident[r][c]) for c in range(d))
            if any(row):
                rows.append(row)
    rows.extend(nucleus_equation_rows(alg))
    return kernel(f, rows, d)


def laurent_center_structure(ring: LaurentRing, degree_box) -> CenterStructure:
    """degree_box: inclusive (lo, hi) per variable; the center slice lists the
    window exponents carrying nonzero central coefficients."""
    _require_searchable(ring)
    alg = ring.algebra
    f = alg.field

    l_points, conjugators = [], []
    for m in itertools.product(*[range(o) for o in ring.orders]):
        u = _conjugating_unit(ring, m)
        if u is not None:
            l_points.append(m)
            conjugators.append(u)

    fixed_rows = []
    ident = identity_matrix(f, alg.dim)
    for s in ring.sigma:
        for r in range(alg.dim):
            row = tuple(f.sub(s[r][c], ident[r][c]) for c in range(alg.dim))
            if any(row):
                fixed_rows.append(row)
    fixed = kernel(f, fixed_rows, alg.dim) if fixed_rows \
        else Subspace.span(f, alg.dim, ident)
    f_space = nucleus_and_center(alg).center.intersect(fixed)

    degree_box = [(int(lo), int(hi)) for lo, hi in degree_box]
    if len(degree_box) != ring.rank:
        raise ValidationError(f"degree box has rank != {ring.rank}")
    exps, bases = [], []
    for m in itertools.product(*[range(lo, hi + 1) for lo, hi in degree_box]):
        space = center_coefficient_space(ring, m)
        if not space.is_zero:
            exps.append(m)
            bases.append(space.basis)
    return CenterStructure(ring.orders, tuple(l_points), tuple(conjugators),
                           f_space, tuple(exps), tuple(bases))
