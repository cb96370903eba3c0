"""Built-in property battery.

Runs quick randomized and exact checks over the example constructions and
prints one PASS/FAIL line per property.  Returns the number of failures so
the CLI can exit nonzero on any violation.
"""

from __future__ import annotations

import json
import random

from . import jsonio
from .algebra import (associator, center_is_field, ideal_closure, is_simple,
                      multiply, nucleus_and_center)
from .catalog import (field_algebra, group_algebra, matrix_algebra,
                      named_group, octonions, product_algebra,
                      quadratic_field_extension, random_unital_algebra,
                      swap_matrix)
from .cayley import doubling_report
from .crossed import (build_crossed_product, canonical_units,
                      crossed_center, recognize_crossed_system,
                      trivial_system)
from .fields import prime_field, rationals
from .groups import central_series, cyclic
from .laurent import (laurent_simplicity_verdict, make_laurent_ring,
                      verify_central)
from .linalg import kernel, mat_vec
from .magma import word_ideal_span

CHECKS = []


def check(name):
    def wrap(fn):
        CHECKS.append((name, fn))
        return fn
    return wrap


@check("field arithmetic")
def _fields(rng, trials, maxlen):
    for f in (prime_field(2), prime_field(5), rationals()):
        pool = ([f.coerce(k) for k in range(5)] if f.is_finite
                else [f.coerce(f"{rng.randint(-9, 9)}/{rng.randint(1, 9)}")
                      for _ in range(8)])
        for _ in range(trials):
            a, b, c = (rng.choice(pool) for _ in range(3))
            assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
            assert f.parse(f.format(a)) == a


@check("kernel rows annihilate")
def _linalg(rng, trials, maxlen):
    f = prime_field(3)
    for _ in range(trials):
        rows = [tuple(rng.randrange(3) for _ in range(4)) for _ in range(3)]
        for v in kernel(f, rows, 4).basis:
            for row in rows:
                assert sum(r * x for r, x in zip(row, v)) % 3 == 0


@check("central series classification")
def _groups(rng, trials, maxlen):
    assert not central_series(named_group("S3")).hypercentral
    assert central_series(named_group("D4")).hypercentral
    assert central_series(named_group("C6")).hypercentral


@check("matrix algebra structure")
def _matrix(rng, trials, maxlen):
    a = matrix_algebra(prime_field(3), 2)
    central = nucleus_and_center(a)
    assert central.center.rank == 1
    assert center_is_field(a, central)
    assert is_simple(a, mode="exact").simple


@check("associator linearity identity")
def _assoc_identity(rng, trials, maxlen):
    a, _ = octonions(prime_field(3))
    f = a.field
    for _ in range(trials):
        u, r, s, t = (tuple(rng.randrange(3) for _ in range(a.dim))
                      for _ in range(4))
        lhs = a.add_vec(
            a.add_vec(multiply(a, u, associator(a, r, s, t)),
                      multiply(a, associator(a, u, r, s), t)),
            associator(a, u, multiply(a, r, s), t))
        rhs = a.add_vec(associator(a, multiply(a, u, r), s, t),
                        associator(a, u, r, multiply(a, s, t)))
        assert lhs == rhs


@check("center as triple intersection")
def _intersection(rng, trials, maxlen):
    f2 = prime_field(2)
    for _ in range(max(trials // 3, 4)):
        a = random_unital_algebra(f2, rng.randint(1, 4), rng)
        c = nucleus_and_center(a)
        for pair in ((c.left, c.middle), (c.left, c.right), (c.middle, c.right)):
            got = c.commuter.intersect(pair[0]).intersect(pair[1])
            assert got.basis == c.center.basis


@check("word oracle matches closure")
def _oracle(rng, trials, maxlen):
    f2 = prime_field(2)
    for _ in range(max(trials // 2, 5)):
        a = random_unital_algebra(f2, rng.randint(1, 4), rng)
        seed = tuple(rng.randrange(2) for _ in range(a.dim))
        if not any(seed):
            seed = a.basis_vector(0)
        assert (word_ideal_span(a, [seed], max_len=maxlen).basis
                == ideal_closure(a, [seed]).basis)


@check("graded simplicity equivalence")
def _graded(rng, trials, maxlen):
    from .graded import simplicity_equivalence
    f2, f3 = prime_field(2), prime_field(3)
    ga, grad = group_algebra(f2, cyclic(2))
    eq = simplicity_equivalence(ga, grad)
    assert eq.graded_simple.simple and not eq.center_field \
        and not eq.simple.simple and eq.consistent
    from .catalog import quaternions
    qa, qgrad = quaternions(f3)
    eq = simplicity_equivalence(qa, qgrad)
    assert eq.simple.simple and eq.consistent


@check("crossed product roundtrip")
def _crossed(rng, trials, maxlen):
    f9 = quadratic_field_extension(prime_field(3))
    sys = trivial_system(f9, cyclic(2))
    prod, grad = build_crossed_product(sys)
    back = recognize_crossed_system(prod, grad, units=canonical_units(sys))
    prod2, _ = build_crossed_product(back)
    assert prod2.product_table == prod.product_table
    z, _ = crossed_center(sys)
    assert z.basis == nucleus_and_center(prod).center.basis


@check("laurent central witness")
def _laurent(rng, trials, maxlen):
    f2, f3 = prime_field(2), prime_field(3)
    f4 = quadratic_field_extension(f2)
    ring = make_laurent_ring(f4, [f4.involution])
    v = laurent_simplicity_verdict(ring)
    assert v.sigma_simple and not v.simple and v.witness is not None
    assert verify_central(ring, v.central_witness)
    ring2 = make_laurent_ring(product_algebra(f3, 2), [swap_matrix(f3)])
    v2 = laurent_simplicity_verdict(ring2)
    assert v2.witness is not None and list(v2.witness[1]) == [2]


@check("doubling criterion agrees with enumeration")
def _cayley(rng, trials, maxlen):
    f3 = prime_field(3)
    base = field_algebra(f3)
    for mu in (f3.coerce(1), f3.coerce(2)):
        rep = doubling_report(base, mu)
        assert rep.consistent and rep.criterion_simple == rep.brute_simple
    ext = quadratic_field_extension(f3)
    rep = doubling_report(ext, f3.coerce(1))
    assert rep.consistent


@check("reports are deterministic")
def _deterministic(rng, trials, maxlen):
    req = json.dumps({"kind": "algebra",
                      "payload": {"field": {"kind": "Fp", "p": 2}, "dim": 2,
                                  "unit": ["1", "0"],
                                  "mult": [{"i": 0, "j": 0, "k": 0, "c": "1"},
                                           {"i": 0, "j": 1, "k": 1, "c": "1"},
                                           {"i": 1, "j": 0, "k": 1, "c": "1"}]}})
    one = jsonio.render_report(jsonio.run_request(jsonio.parse_request(req)))
    two = jsonio.render_report(jsonio.run_request(jsonio.parse_request(req)))
    assert one == two


def run(trials: int = 25, seed: int = 0, oracle_maxlen: int = 5) -> int:
    failures = 0
    for name, fn in CHECKS:
        rng = random.Random(seed)
        try:
            fn(rng, trials, oracle_maxlen)
        except AssertionError as e:
            failures += 1
            detail = f": {e}" if str(e) else ""
            print(f"[FAIL] {name}{detail}")
        except Exception as e:
            failures += 1
            print(f"[FAIL] {name}: {type(e).__name__}: {e}")
        else:
            print(f"[PASS] {name}")
    print(f"{len(CHECKS) - failures}/{len(CHECKS)} properties hold")
    return failures
