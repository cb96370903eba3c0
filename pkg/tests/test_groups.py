import pytest

from gradix.errors import (MissingIdentity, MissingInverse,
                           NonAssociativeTable, NotNormal, ValidationError)
from gradix.groups import (center, central_series, cyclic, dihedral,
                           direct_product, elementary_abelian_two,
                           quotient_group, subgroup, symmetric,
                           validate_group)


def test_validate_rejects_bad_tables():
    # smallest nonassociative loop: unit and inverses fine, (1*2)*4 != 1*(2*4)
    loop5 = [[0, 1, 2, 3, 4],
             [1, 0, 3, 4, 2],
             [2, 4, 0, 1, 3],
             [3, 2, 4, 0, 1],
             [4, 3, 1, 2, 0]]
    with pytest.raises(NonAssociativeTable):
        validate_group(loop5)
    with pytest.raises(MissingIdentity):
        validate_group([[1, 0], [0, 1]], identity=0)
    with pytest.raises(MissingInverse):
        validate_group([[0, 1], [1, 1]])
    with pytest.raises(ValidationError):
        validate_group([[0, 1], [1]])


def test_identity_inference():
    g = validate_group([[1, 0], [0, 1]])
    assert g.identity == 1


def test_cyclic_structure():
    g = cyclic(6)
    assert g.order == 6 and g.is_abelian()
    assert g.element_order(1) == 6
    assert g.inv(2) == 4
    assert g.label(0) == "e" and g.label(3) == "r3"


def test_dihedral_structure():
    g = dihedral(4)
    assert g.order == 8 and not g.is_abelian()
    r, s = 1, 4
    # s r s^-1 = r^-1
    assert g.conj(r, s) == g.inv(r)
    assert center(g).order == 2


def test_symmetric_not_hypercentral():
    s3 = symmetric(3)
    assert s3.order == 6
    series = central_series(s3)
    assert not series.hypercentral
    assert series.chain[-1].order == 1


def test_two_groups_hypercentral():
    for g in (cyclic(8), dihedral(4), elementary_abelian_two(3),
              direct_product(cyclic(2), cyclic(4))):
        assert central_series(g).hypercentral


def test_quotient_group():
    g = cyclic(6)
    n = subgroup(g, [0, 3])
    q, proj = quotient_group(g, n)
    assert q.order == 3
    assert proj[0] == proj[3]
    # projection is a homomorphism
    for a in g.elements():
        for b in g.elements():
            assert q.mul(proj[a], proj[b]) == proj[g.mul(a, b)]


def test_quotient_requires_normal():
    s3 = symmetric(3)
    # an order-2 subgroup of S3 is not normal
    t = next(a for a in s3.elements()
             if a != s3.identity and s3.element_order(a) == 2)
    with pytest.raises(NotNormal):
        quotient_group(s3, subgroup(s3, [s3.identity, t]))


def test_elementary_abelian_xor():
    g = elementary_abelian_two(3)
    assert g.order == 8
    assert g.mul(3, 5) == 6
    assert all(g.inv(a) == a for a in g.elements())
