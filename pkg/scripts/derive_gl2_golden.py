#!/usr/bin/env python3
"""Derive the frozen golden values of the GL(2) regression.

Independent route: expand the central element for the minuscule coweight
directly as the symmetrized sum z = theta_(1,0) + theta_(0,1), average
it, normalize by the (monomial) leading coefficient so the section
property pi(lift) = m[1,0] holds, and expand in the KL basis. The
resulting support and coefficients are the golden values frozen in
heckewb.gl2 and tests/test_gl2.py.

Run:  python3 scripts/derive_gl2_golden.py
"""

import heckewb.center as ct
import heckewb.hecke as hk
import heckewb.kl as kl
import heckewb.spherical as sp
import heckewb.weyl as wl
from heckewb.ring import LaurentPoly, format_laurent
from heckewb.rootdata import build_datum


def main():
    datum = build_datum("GL2")
    lam = (1, 0)

    th_plus = ct.theta(datum, (1, 0))
    th_minus = ct.theta(datum, (0, 1))
    z = th_plus + th_minus
    print("theta_(1,0)          =", hk.format_hecke(th_plus))
    print("theta_(0,1)          =", hk.format_hecke(th_minus))
    print("z = sum of orbit     =", hk.format_hecke(z))
    assert ct.is_central(z), "symmetrized element must be central"

    averaged = sp.pi_map(z)
    print("pi(z)                =", sp.format_spherical(averaged))
    diag = averaged.terms[lam]
    e, c = diag.as_monomial()
    assert c in (1, -1), "averaged leading coefficient must be a unit"
    lift = z.scale(LaurentPoly.monomial(-e, c))
    print("lift = z / diagonal  =", hk.format_hecke(lift))
    assert sp.pi_map(lift) == sp.m(datum, lam), "section property"

    dec = kl.cp_decompose(lift)
    print("KL-basis decomposition:")
    for w in sorted(dec, key=wl.AffineWeylElement.sort_key):
        print(f"  C'[{wl.format_weyl(w)}] * ({format_laurent(dec[w])})")

    coset = wl.coset_elements(datum, lam)
    omega = next(x for x in coset if x.length() == 0)
    middles = [x for x in coset if x.length() == 1]
    print("golden values to freeze:")
    print("  GOLDEN_DELTA  (C'_omega coefficient) =",
          format_laurent(dec[omega]))
    for y in middles:
        print(f"  GOLDEN_MIDDLE (C'[{wl.format_weyl(y)}] coefficient) =",
              format_laurent(dec[y]))


if __name__ == "__main__":
    main()
