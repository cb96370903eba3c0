"""Scan skew Laurent rings for simplicity and print the central witnesses.

Each row is a coefficient ring + automorphism pair; the scan reports
sigma-simplicity, the first (m, u) witness in lex order if the ring is
not simple, and the exponents carrying center in a small window.
"""

import argparse

from gradix.catalog import (product_algebra, quadratic_field_extension,
                            swap_matrix, truncated_dual)
from gradix.fields import prime_field
from gradix.laurent import (laurent_center_structure,
                            laurent_simplicity_verdict, make_laurent_ring)
from gradix.linalg import identity_matrix


def show(ring, el):
    f = ring.algebra.field
    parts = []
    for m, coeff in el.terms:
        vec = "(" + ",".join(f.format(c) for c in coeff) + ")"
        if all(e == 0 for e in m):
            parts.append(vec)
        else:
            exp = "x^" + (str(m[0]) if ring.rank == 1 else str(list(m)))
            parts.append(f"{vec}{exp}")
    return " + ".join(parts) if parts else "0"


def rings(p):
    f = prime_field(p)
    ext = quadratic_field_extension(f)
    prod2 = product_algebra(f, 2)
    dual = truncated_dual(f)
    frob = ext.involution
    return [
        ("ext, Frobenius", make_laurent_ring(ext, [frob])),
        ("ext, identity", make_laurent_ring(ext, [identity_matrix(f, 2)])),
        ("FxF, swap", make_laurent_ring(prod2, [swap_matrix(f)])),
        ("dual, identity", make_laurent_ring(dual, [identity_matrix(f, 2)])),
        ("ext, rank 2 (frob, id)", make_laurent_ring(
            ext, [frob, identity_matrix(f, 2)])),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=2, help="field characteristic")
    ap.add_argument("--window", type=int, default=4,
                    help="half-width of the center scan window")
    args = ap.parse_args()

    w = args.window
    for name, ring in rings(args.p):
        v = laurent_simplicity_verdict(ring)
        print(f"== {name} (rank {ring.rank}, orders {ring.orders})")
        print(f"   sigma-simple: {v.sigma_simple}   simple: {v.simple}")
        if not v.sigma_simple:
            print(f"   sigma-witness ideal seed: {v.sigma_witness}")
        if v.witness is not None:
            u, m = v.witness
            print(f"   inner witness: u={u} at m={list(m)}")
        if v.central_witness is not None:
            print(f"   central witness: {show(ring, v.central_witness)}")
        cs = laurent_center_structure(ring, [(-w, w)] * ring.rank)
        carrying = [list(e) for e, basis in zip(cs.slice_exponents,
                                                cs.slice_bases) if basis]
        print(f"   L points: {[list(l) for l in cs.l_points]}   "
              f"F rank: {cs.fixed_center.rank}")
        print(f"   center exponents in [-{w},{w}]^{ring.rank}: {carrying}")


if __name__ == "__main__":
    main()
