import random

import pytest

from gradix.algebra import (center_is_field, is_simple, multiply,
                            nucleus_and_center, two_sided_inverse)
from gradix.catalog import (field_algebra, octonions, product_with_swap,
                            quadratic_field_extension, quaternions)
from gradix.cayley import (cayley_double, doubling_report, is_star_simple,
                           mu_square_in_center, star_centers, tower)
from gradix.errors import ExactModeUnavailable, MuZero
from gradix.fields import prime_field, rationals
from gradix.graded import is_graded_simple
from gradix.linalg import Subspace, projective_points

F3 = prime_field(3)
F5 = prime_field(5)
Q = rationals()


def bases_f3():
    return [field_algebra(F3), quadratic_field_extension(F3),
            product_with_swap(F3), quaternions(F3)[0]]


def test_double_product_law():
    rng = random.Random(2)
    base = quaternions(F3)[0]
    mu = F3.coerce(2)
    dbl, _ = cayley_double(base, mu)
    d = base.dim
    for _ in range(40):
        a, b, c, e = (tuple(rng.randrange(3) for _ in range(d))
                      for _ in range(4))
        left = multiply(dbl, a + b, c + e)
        first = base.add_vec(multiply(base, a, c),
                             base.scale(mu, multiply(base, base.star(e), b)))
        second = base.add_vec(multiply(base, e, a),
                              multiply(base, b, base.star(c)))
        assert left == first + second


def test_double_involution_and_adjoined_square():
    base = quadratic_field_extension(F3)
    mu = F3.coerce(2)
    dbl, grad = cayley_double(base, mu)
    d = base.dim
    a = (1, 2)
    b = (0, 1)
    v = a + b
    assert dbl.star(v) == base.star(a) + base.neg_vec(b)
    # l * l = mu
    l = dbl.basis_vector(d)
    assert multiply(dbl, l, l) == dbl.scalar_vec(mu)
    # gradation puts the old part in degree 0 and the new part in degree 1
    assert grad.degrees == (0,) * d + (1,) * d


def test_mu_zero_rejected():
    with pytest.raises(MuZero):
        cayley_double(field_algebra(F3), 0)


def test_double_of_f3_by_nonsquare_is_f9():
    dbl, _ = cayley_double(field_algebra(F3), 2)
    assert is_simple(dbl, mode="exact").simple
    assert center_is_field(dbl)
    for v in projective_points(3, 2):
        assert two_sided_inverse(dbl, v) is not None


def test_double_of_f5_by_square_splits():
    rep = doubling_report(field_algebra(F5), F5.coerce(4))
    assert not rep.criterion_simple
    assert not rep.brute_simple
    assert rep.consistent
    assert rep.brute_witness is not None
    # the witness generates the ideal (x - 2) or (x + 2)
    dbl, _ = cayley_double(field_algebra(F5), 4)
    from gradix.algebra import ideal_closure
    w = ideal_closure(dbl, [rep.brute_witness])
    assert w.rank == 1


def test_mu_square_is_center_relative():
    assert mu_square_in_center(field_algebra(F3), F3.coerce(1)) is True
    assert mu_square_in_center(field_algebra(F3), F3.coerce(2)) is False
    # 2 becomes a square after extending the scalars
    ext = quadratic_field_extension(F3)
    assert mu_square_in_center(ext, F3.coerce(2)) is True


def test_mu_square_over_q():
    assert mu_square_in_center(field_algebra(Q), Q.coerce(4)) is True
    assert mu_square_in_center(field_algebra(Q), Q.coerce(2)) is False
    assert mu_square_in_center(field_algebra(Q), Q.coerce("9/4")) is True


def test_star_centers():
    # trivial involution: everything symmetric, Z_** = Z
    base = field_algebra(F3)
    zs, zss = star_centers(base)
    assert zs.rank == 1 and zss.rank == 1
    # Frobenius involution on F9: only the prime field is symmetric
    ext = quadratic_field_extension(F3)
    zs, zss = star_centers(ext)
    assert zs.rank == 1
    assert zss.rank == 0
    assert zs.contains(ext.unit)


@pytest.mark.parametrize("mu_raw", [1, 2])
def test_center_of_double_decomposes(mu_raw):
    mu = F3.coerce(mu_raw)
    for base in bases_f3():
        dbl, _ = cayley_double(base, mu)
        zs, zss = star_centers(base)
        d = base.dim
        zero = (F3.zero,) * d
        embedded = [row + zero for row in zs.basis] + \
                   [zero + row for row in zss.basis]
        want = Subspace.span(F3, 2 * d, embedded)
        assert nucleus_and_center(dbl).center.basis == want.basis


@pytest.mark.parametrize("mu_raw", [1, 2])
def test_graded_simple_iff_star_simple(mu_raw):
    mu = F3.coerce(mu_raw)
    for base in bases_f3():
        dbl, grad = cayley_double(base, mu)
        assert (is_graded_simple(dbl, grad).simple
                == is_star_simple(base).simple)


def test_center_field_dichotomy():
    for base in bases_f3():
        for mu_raw in (1, 2):
            mu = F3.coerce(mu_raw)
            dbl, _ = cayley_double(base, mu)
            trivial = base.involution == tuple(
                tuple(F3.one if i == j else F3.zero
                      for j in range(base.dim)) for i in range(base.dim))
            if trivial:
                want = (center_is_field(base)
                        and not mu_square_in_center(base, mu))
            else:
                zs, _ = star_centers(base)
                from gradix.algebra import subfield_check
                want = subfield_check(base, zs)
            assert center_is_field(dbl) == want


def test_criterion_equals_brute_on_f3_bases():
    for base in bases_f3():
        for mu_raw in (1, 2):
            rep = doubling_report(base, F3.coerce(mu_raw))
            assert rep.brute_simple is not None
            assert rep.criterion_simple == rep.brute_simple
            assert rep.consistent


def test_nontrivial_involution_gives_simple_double():
    # F9 with Frobenius: Z_* = F3 is a field, so any mu works
    ext = quadratic_field_extension(F3)
    for mu_raw in (1, 2):
        rep = doubling_report(ext, F3.coerce(mu_raw))
        assert rep.criterion_simple and rep.brute_simple


def test_tower_structure():
    stages = tower(F3, [F3.coerce(1), F3.coerce(1)])
    assert [s.algebra.dim for s in stages] == [1, 2, 4]
    assert stages[1].algebra.labels == ("1", "i")
    assert stages[2].algebra.labels == ("1", "i", "j", "ij")
    assert stages[2].gradation.degrees == (0, 1, 2, 3)
    # mu = 1 is a square: first double splits, second is M_2(F3)
    assert not stages[1].report.criterion_simple
    assert stages[2].report.criterion_simple
    assert stages[2].report.brute_simple


def test_tower_reaches_octonions():
    minus = F3.coerce(-1)
    stages = tower(F3, [minus, minus, minus])
    assert stages[-1].algebra.dim == 8
    assert stages[-1].algebra.mult == octonions(F3)[0].mult
    assert stages[-1].report.criterion_simple


def test_rationals_report_unavailable():
    with pytest.raises(ExactModeUnavailable):
        doubling_report(field_algebra(Q), Q.coerce(2))
    with pytest.raises(ExactModeUnavailable):
        tower(Q, [Q.coerce(2)])
