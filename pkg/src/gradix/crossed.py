"""Crossed systems over finite groups and their product algebras.

A crossed system is (T, G, sigma, alpha) with sigma_g unital ring
automorphisms of T and alpha(g,h) nuclear units, subject to

    N1:  sigma_g(sigma_h(a)) = alpha(g,h) sigma_{gh}(a) alpha(g,h)^{-1}
    N2:  alpha(g,h) alpha(gh,s) = sigma_g(alpha(h,s)) alpha(g,hs)
    N3:  sigma_e = id,  alpha(g,e) = alpha(e,g) = 1.

The crossed product lives on basis {e_i u_g} with

    (a u_g)(b u_h) = a sigma_g(b) alpha(g,h) u_{gh}

and carries the canonical G-gradation deg(e_i u_g) = g.  Since the alphas
are nuclear, products involving them need no parenthesization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (Algebra, SimplicityVerdict, is_ring_automorphism,
                      left_mult_matrix, make_algebra, nucleus_and_center,
                      nucleus_equation_rows, right_mult_matrix, simple_under,
                      two_sided_inverse)
from .errors import (AlphaNotNuclearUnit, ExactModeUnavailable, N1Violation,
                     N2Violation, N3Violation, NoNuclearUnit, NotAutomorphism,
                     ValidationError)
from .graded import Gradation, homogeneous_points, validate_gradation
from .groups import FiniteGroup
from .linalg import (Subspace, Vec, coerce_matrix, identity_matrix, kernel,
                     mat_mul, mat_vec)


@dataclass(frozen=True)
class CrossedSystem:
    algebra: Algebra                              # T
    group: FiniteGroup                            # G
    sigma: tuple                                  # matrix per group element
    alpha: tuple                                  # element of T per (g, h)
    alpha_inv: tuple                              # cached two-sided inverses

    @property
    def dim(self) -> int:
        return self.algebra.dim * self.group.order


def validate_crossed_system(t: Algebra, g: FiniteGroup, sigma, alpha) -> CrossedSystem:
    n, d, f = g.order, t.dim, t.field
    if len(sigma) != n:
        raise ValidationError(f"expected {n} automorphisms, got {len(sigma)}")
    if len(alpha) != n or any(len(row) != n for row in alpha):
        raise ValidationError("alpha is not an order x order table")
    sigma = tuple(coerce_matrix(f, m, d) for m in sigma)
    alpha = tuple(tuple(t.element(a) for a in row) for row in alpha)

    for a in range(n):
        if not is_ring_automorphism(t, sigma[a]):
            raise NotAutomorphism(f"sigma[{a}] is not a ring automorphism")

    nuc = nucleus_and_center(t).nucleus
    alpha_inv = []
    for a in range(n):
        row = []
        for b in range(n):
            x = alpha[a][b]
            inv = two_sided_inverse(t, x)
            if inv is None or not nuc.contains(x):
                raise AlphaNotNuclearUnit(f"alpha[{a}][{b}] = {x}")
            row.append(inv)
        alpha_inv.append(tuple(row))
    alpha_inv = tuple(alpha_inv)

    e = g.identity
    if sigma[e] != identity_matrix(f, d):
        raise N3Violation("sigma at the identity is not id")
    for a in range(n):
        if alpha[a][e] != t.unit or alpha[e][a] != t.unit:
            raise N3Violation(f"alpha not normalized at ({a}, identity)")

    for a in range(n):
        for b in range(n):
            ab = g.mul(a, b)
            x, xi = alpha[a][b], alpha_inv[a][b]
            for i in range(d):
                lhs = mat_vec(f, sigma[a], mat_vec(f, sigma[b], t.basis_vector(i)))
                rhs = t.multiply(t.multiply(x, mat_vec(f, sigma[ab], t.basis_vector(i))), xi)
                if lhs != rhs:
                    raise N1Violation(f"at (g,h,basis) = ({a},{b},{i})")

    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = t.multiply(alpha[a][b], alpha[g.mul(a, b)][c])
                rhs = t.multiply(mat_vec(f, sigma[a], alpha[b][c]), alpha[a][g.mul(b, c)])
                if lhs != rhs:
                    raise N2Violation(f"at (g,h,s) = ({a},{b},{c})")

    return CrossedSystem(t, g, sigma, alpha, alpha_inv)


def trivial_system(t: Algebra, g: FiniteGroup) -> CrossedSystem:
    """Group-ring system: sigma = id, alpha = 1."""
    ident = identity_matrix(t.field, t.dim)
    ones = tuple(tuple(t.unit for _ in range(g.order)) for _ in range(g.order))
    return validate_crossed_system(t, g, (ident,) * g.order, ones)


# -- the product ---------------------------------------------------------------

def canonical_units(sys: CrossedSystem) -> list[Vec]:
    """Coordinates of u_g inside the built product, for each g."""
    d, f = sys.algebra.dim, sys.algebra.field
    out = []
    for a in range(sys.group.order):
        v = [f.zero] * sys.dim
        v[a * d: (a + 1) * d] = list(sys.algebra.unit)
        out.append(tuple(v))
    return out


def build_crossed_product(sys: CrossedSystem) -> tuple[Algebra, Gradation]:
    t, g, f = sys.algebra, sys.group, sys.algebra.field
    d, n = t.dim, g.order

    entries = []
    for a in range(n):
        sig = sys.sigma[a]
        for b in range(n):
            ab = g.mul(a, b)
            x = sys.alpha[a][b]
            for j in range(d):
                sj = mat_vec(f, sig, t.basis_vector(j))
                for i in range(d):
                    w = t.multiply(t.multiply(t.basis_vector(i), sj), x)
                    for k, c in enumerate(w):
                        if c:
                            entries.append((a * d + i, b * d + j, ab * d + k, c))
    e = g.identity
    unit = [f.zero] * (d * n)
    unit[e * d: (e + 1) * d] = list(t.unit)

    labels = None
    if t.labels is not None:
        labels = []
        for a in range(n):
            for i in range(d):
                tl = t.labels[i]
                if a == e:
                    labels.append(tl)
                else:
                    head = "" if tl == "1" else tl
                    labels.append(f"{head}u{g.label(a)}")
        labels = tuple(labels)

    prod = make_algebra(f, d * n, entries, tuple(unit), labels=labels)
    degrees = tuple(a for a in range(n) for _ in range(d))
    grad, report = validate_gradation(prod, g, degrees)
    if not report.strong:
        raise ValidationError("built product is not strongly graded")

    nuc = nucleus_and_center(prod).nucleus
    for u in canonical_units(sys):
        if two_sided_inverse(prod, u) is None or not nuc.contains(u):
            raise ValidationError("canonical unit is not a nuclear unit")
    return prod, grad


# -- recognition ---------------------------------------------------------------

def _restrict(vec, idx, where: str) -> Vec:
    keep = set(idx)
    if any(c for i, c in enumerate(vec) if i not in keep):
        raise ValidationError(f"{where}: support leaves the identity component")
    return tuple(vec[i] for i in idx)


def recognize_crossed_system(alg: Algebra, grad: Gradation,
                             units=None) -> CrossedSystem:
    """Extract (T, G, sigma, alpha) from a graded algebra with nuclear units
    in every component; u_e is always the algebra unit."""
    g = grad.group
    f = alg.field
    e = g.identity
    idx = grad.indices_of(e)
    if not idx:
        raise ValidationError("identity component is zero")

    # T = identity component with the restricted product
    pos = {i: k for k, i in enumerate(idx)}
    entries = []
    for i in idx:
        for j in idx:
            w = alg.multiply(alg.basis_vector(i), alg.basis_vector(j))
            w = _restrict(w, idx, "identity component product")
            for k, c in enumerate(w):
                if c:
                    entries.append((pos[i], pos[j], k, c))
    t_labels = tuple(alg.labels[i] for i in idx) if alg.labels else None
    t = make_algebra(f, len(idx), entries,
                     _restrict(alg.unit, idx, "unit"), labels=t_labels)

    nuc = nucleus_and_center(alg).nucleus
    chosen: list[Vec | None] = [None] * g.order
    chosen[e] = alg.unit
    if units is not None:
        if len(units) != g.order:
            raise ValidationError("need one unit per group element")
        for a in range(g.order):
            u = alg.element(units[a])
            if a == e:
                if u != alg.unit:
                    raise ValidationError("the identity-component unit must be 1")
                continue
            if grad.degree_of(u) != a:
                raise ValidationError(f"supplied unit {a} is not homogeneous of degree {a}")
            if not nuc.contains(u) or two_sided_inverse(alg, u) is None:
                raise NoNuclearUnit(f"supplied unit {a} is not a nuclear unit")
            chosen[a] = u
    else:
        if not f.is_finite:
            raise ExactModeUnavailable("unit search needs a finite field or supplied units")
        for a in range(g.order):
            if a == e:
                continue
            for v in homogeneous_points(alg, grad, a):
                if nuc.contains(v) and two_sided_inverse(alg, v) is not None:
                    chosen[a] = v
                    break
            else:
                raise NoNuclearUnit(f"component {a} has no nuclear unit")

    inv = [two_sided_inverse(alg, u) for u in chosen]
    embed = [alg.basis_vector(i) for i in idx]

    sigma = []
    for a in range(g.order):
        cols = []
        for x in embed:
            w = alg.multiply(alg.multiply(chosen[a], x), inv[a])
            cols.append(_restrict(w, idx, f"conjugation by unit {a}"))
        sigma.append(tuple(zip(*cols)))   # columns -> matrix rows

    alpha = []
    for a in range(g.order):
        row = []
        for b in range(g.order):
            w = alg.multiply(alg.multiply(chosen[a], chosen[b]), inv[g.mul(a, b)])
            row.append(_restrict(w, idx, f"alpha({a},{b})"))
        alpha.append(tuple(row))

    return validate_crossed_system(t, g, tuple(sigma), tuple(alpha))


# -- simplicity and centers ------------------------------------------------------

def is_G_simple(t: Algebra, sigma, mode: str = "exact",
                budget: int = 1_000_000, trials: int = 1000,
                seed: int = 0) -> SimplicityVerdict:
    """No proper nonzero ideal of T closed under every sigma_g."""
    maps = tuple(coerce_matrix(t.field, m, t.dim) for m in sigma)
    return simple_under(t, maps=maps, mode=mode, budget=budget,
                        trials=trials, seed=seed)


def fixed_subspace(t: Algebra, sigma) -> Subspace:
    """Common fixed space of the automorphisms."""
    f = t.field
    ident = identity_matrix(f, t.dim)
    rows = []
    for m in sigma:
        for r in range(t.dim):
            row = tuple(f.sub(m[r][c], ident[r][c]) for c in range(t.dim))
            if any(row):
                rows.append(row)
    if not rows:
        return Subspace.span(f, t.dim, ident)
    return kernel(f, rows, t.dim)


def crossed_center(sys: CrossedSystem) -> tuple[Subspace, Subspace]:
    """Center of the crossed product, solved on coefficient tuples (t_g):
      (i)   t t_g = t_g sigma_g(t)          for all t in T
      (ii)  t_{hgh^-1} = sigma_h(t_g) alpha(h,g) alpha(hgh^-1,h)^-1
      (iii) t_g in N(T)
    together with the fixed central subfield Z(T)^G of T."""
    t, g, f = sys.algebra, sys.group, sys.algebra.field
    d, n = t.dim, g.order
    dim = d * n

    def block_row(col_blocks) -> tuple:
        row = [f.zero] * dim
        for blk, seg in col_blocks:
            row[blk * d: (blk + 1) * d] = seg
        return tuple(row)

    lefts = [left_mult_matrix(t, t.basis_vector(i)) for i in range(d)]
    nuc_rows = nucleus_equation_rows(t)
    rows = []
    for a in range(n):
        sig = sys.sigma[a]
        for i in range(d):
            rmat = right_mult_matrix(t, mat_vec(f, sig, t.basis_vector(i)))
            for r in range(d):
                seg = [f.sub(lefts[i][r][c], rmat[r][c]) for c in range(d)]
                if any(seg):
                    rows.append(block_row([(a, seg)]))
        for r in nuc_rows:
            rows.append(block_row([(a, list(r))]))

    for h in range(n):
        for a in range(n):
            k = g.conj(a, h)
            m = mat_mul(f, right_mult_matrix(t, sys.alpha[h][a]), sys.sigma[h])
            m = mat_mul(f, right_mult_matrix(t, sys.alpha_inv[k][h]), m)
            if k == a:
                for r in range(d):
                    seg = [f.sub(f.one if r == c else f.zero, m[r][c])
                           for c in range(d)]
                    if any(seg):
                        rows.append(block_row([(a, seg)]))
            else:
                for r in range(d):
                    seg_a = [f.neg(m[r][c]) for c in range(d)]
                    seg_k = [f.one if r == c else f.zero for c in range(d)]
                    rows.append(block_row([(a, seg_a), (k, seg_k)]))

    z = kernel(f, rows, dim)
    z_t_g = nucleus_and_center(t).center.intersect(fixed_subspace(t, sys.sigma))
    return z, z_t_g
