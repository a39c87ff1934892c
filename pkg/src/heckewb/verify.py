"""Verification suites behind `hecke verify` and the acceptance tests.

Each function checks one family of exact identities over one datum and
returns a VerifyResult. Everything here is pure and idempotent: two runs
produce identical reports.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import center, hecke, kl, spherical, weyl
from .ring import LaurentPoly, ONE, ZERO
from .rootdata import Coweight, RootDatum

__all__ = [
    "VerifyResult",
    "ACCEPTANCE_DATA",
    "ALL_DATA",
    "verify_centrality",
    "verify_section",
    "verify_multiplicativity",
    "verify_sph_commutativity",
    "verify_satake",
    "verify_parity",
    "verify_bott_samelson",
    "verify_kl_oracle",
    "verify_q1",
    "kl_bar_oracle",
    "orbit_sum_product",
]

ACCEPTANCE_DATA = ("A1-sc", "GL2", "A2-sc", "C2-sc")
ALL_DATA = ("A1-sc", "GL2", "A2-sc", "C2-sc", "G2-sc", "GL3")


@dataclass
class VerifyResult:
    name: str
    ok: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}: {self.detail}"


def _dominants(datum: RootDatum, cutoff: int) -> list[Coweight]:
    return spherical.dominant_coweights(datum, cutoff)


def verify_centrality(datum: RootDatum, cutoff: int = 6) -> VerifyResult:
    """Every z_lam commutes with every T_s and T_omega, exactly."""
    bad = []
    for lam in _dominants(datum, cutoff):
        z = center.central_element(datum, lam, verify=False).element
        if not center.is_central(z):
            bad.append(lam)
    return VerifyResult(
        f"centrality[{datum.label}]", not bad,
        f"{len(_dominants(datum, cutoff))} central elements checked"
        + (f"; failures at {bad}" if bad else ""))


def verify_section(datum: RootDatum, cutoff: int = 6) -> VerifyResult:
    """pi(central_lift(m_lam)) == m_lam exactly."""
    bad = []
    for lam in _dominants(datum, cutoff):
        lifted = center.central_lift(spherical.m(datum, lam), cutoff=cutoff)
        if spherical.pi_map(lifted.element) != spherical.m(datum, lam):
            bad.append(lam)
    return VerifyResult(
        f"section[{datum.label}]", not bad,
        f"{len(_dominants(datum, cutoff))} round trips"
        + (f"; failures at {bad}" if bad else ""))


def verify_multiplicativity(datum: RootDatum, cutoff: int = 6
                            ) -> VerifyResult:
    """lift(m_lam * m_mu) == lift(m_lam) lift(m_mu) for all pairs with
    translation lengths summing within the cutoff."""
    doms = _dominants(datum, cutoff)
    pairs = [(a, b) for a, b in itertools.product(doms, doms)
             if datum.translation_length(a) + datum.translation_length(b)
             <= cutoff]
    bad = []
    for lam, mu in pairs:
        ok, _ = center.lift_is_multiplicative(datum, lam, mu, cutoff=cutoff)
        if not ok:
            bad.append((lam, mu))
    return VerifyResult(
        f"multiplicativity[{datum.label}]", not bad,
        f"{len(pairs)} pairs" + (f"; failures at {bad}" if bad else ""))


def verify_sph_commutativity(datum: RootDatum, cutoff: int = 6
                             ) -> VerifyResult:
    """m_lam * m_mu == m_mu * m_lam and z_lam z_mu == z_mu z_lam."""
    doms = _dominants(datum, cutoff)
    pairs = [(a, b) for a, b in itertools.combinations(doms, 2)
             if datum.translation_length(a) + datum.translation_length(b)
             <= cutoff]
    bad = []
    for lam, mu in pairs:
        if spherical.sph_conv(spherical.m(datum, lam),
                              spherical.m(datum, mu), cutoff=cutoff) \
                != spherical.sph_conv(spherical.m(datum, mu),
                                      spherical.m(datum, lam),
                                      cutoff=cutoff):
            bad.append(("m", lam, mu))
    for lam, mu in itertools.combinations(doms, 2):
        za = center.central_element(datum, lam, verify=False).element
        zb = center.central_element(datum, mu, verify=False).element
        if not hecke.commutator_is_zero(za, zb):
            bad.append(("z", lam, mu))
    return VerifyResult(
        f"sph-commutativity[{datum.label}]", not bad,
        f"{len(pairs)} convolution pairs and "
        f"{len(doms) * (len(doms) - 1) // 2} center pairs"
        + (f"; failures at {bad}" if bad else ""))


def verify_satake(datum: RootDatum, cutoff: int = 6) -> VerifyResult:
    """Dominance triangularity with unit-monomial diagonal."""
    sm = spherical.satake_matrix(datum, cutoff)
    ok = sm.check_triangular()
    diag = {lam: sm.entry(lam, lam) for lam in sm.labels}
    return VerifyResult(
        f"satake[{datum.label}]", ok,
        f"{len(sm.labels)} rows; diagonal "
        + ", ".join(f"{lam}:{d}" for lam, d in sorted(diag.items())))


def verify_parity(datum: RootDatum, cutoff: int = 6) -> VerifyResult:
    """spherical_parity_check on all same-class dominant pairs."""
    doms = _dominants(datum, cutoff)
    pairs = [(a, b) for a, b in itertools.product(doms, doms)
             if datum.component_of(a) == datum.component_of(b)]
    bad = [(a, b) for a, b in pairs
           if not kl.spherical_parity_check(datum, a, b)]
    return VerifyResult(
        f"parity[{datum.label}]", not bad,
        f"{len(pairs)} pairs" + (f"; failures at {bad}" if bad else ""))


def verify_bott_samelson(datum: RootDatum, max_len: int) -> VerifyResult:
    """All words up to max_len: product coefficients in Z>=0[q];
    decomposition coefficients nonnegative with constant parity, and
    coefficient 1 on the top class of a reduced word."""
    letters = range(datum.rank + 1)
    n_words = 0
    bad: list = []
    for n in range(max_len + 1):
        for word in itertools.product(letters, repeat=n):
            n_words += 1
            prod = kl.bott_samelson(datum, word)
            for w, c in prod.terms.items():
                if not (c.is_q_polynomial() and c.has_nonnegative_coeffs()):
                    bad.append(("product", word, w))
            dec = kl.bs_decompose(datum, word)
            x = weyl.from_word(datum, 0, word)
            if x.length() == len(word) and dec.get(x) != ONE:
                bad.append(("top", word))
            for w, c in dec.items():
                if not c.has_nonnegative_coeffs():
                    bad.append(("decompose-sign", word, w))
                parities = {e % 2 for e in c.terms()}
                if len(parities) > 1:
                    bad.append(("decompose-parity", word, w))
    return VerifyResult(
        f"bott-samelson[{datum.label}]", not bad,
        f"{n_words} words up to length {max_len}"
        + (f"; failures: {bad[:3]}" if bad else ""))


def kl_bar_oracle(datum: RootDatum, w) -> dict:
    """Independent KL oracle: solve bar(C) = C for a unitriangular
    ansatz with the strict degree bound, using only bar expansions of
    the T-basis (no mu recursion).

    Returns {y: P_{y,w} in q} including the leading P_{w,w} = 1.
    """
    below = [y
             for shell in weyl.elements_up_to_length(datum, w.length(),
                                                     w.component())
             for y in shell if weyl.bruhat_leq(y, w)]
    below.sort(key=lambda y: -y.length())
    lw = w.length()
    # coefficients of bar(T_y) in the T-basis, for y <= w
    barT = {y: hecke.bar_element(hecke.basis(y)) for y in below}
    coeffs: dict = {w: LaurentPoly.monomial(-lw)}
    polys = {w: ONE}
    for y in below:
        if y == w:
            continue
        d = lw - y.length()
        # known part of the T_y-coefficient of bar(C) from strictly
        # larger terms
        known = ZERO
        for z, cz in coeffs.items():
            known = known + cz.bar() * barT[z].coeff(y)
        kappa = known.shift(lw)
        # p(q) - q^d p(1/q) = kappa; the degree bound splits kappa
        low = {}
        high = {}
        for e, c in kappa.terms().items():
            if e % 2 != 0:
                raise AssertionError("oracle: odd exponent in kappa")
            if e <= d - 1:
                low[e] = c
            else:
                high[e] = c
        p = LaurentPoly.from_terms(low)
        # consistency: the high part must be -q^d p(1/q)
        neg = (-p.bar()).shift(2 * d)
        if LaurentPoly.from_terms(high) != neg:
            raise AssertionError(f"oracle: inconsistent system at {y}")
        if not p.is_q_polynomial():
            raise AssertionError(f"oracle: non-polynomial solution at {y}")
        polys[y] = p
        coeffs[y] = p.shift(-lw)
    return polys


def verify_kl_oracle(datum: RootDatum, cutoff: int) -> VerifyResult:
    """Recursion output equals the bar-involution linear-solve oracle on
    every interval up to the cutoff."""
    table = kl.get_table(datum, cutoff)
    n = 0
    bad = []
    for shell in weyl.elements_up_to_length(datum, cutoff):
        for w in shell:
            oracle = kl_bar_oracle(datum, w)
            for y, p in oracle.items():
                n += 1
                if table.polynomial(y, w) != p:
                    bad.append((y, w))
            # and the table must not contain extra support
            support = {y for y in table.cp[w].terms}
            if support != set(oracle):
                bad.append(("support", w))
    return VerifyResult(
        f"kl-oracle[{datum.label}]", not bad,
        f"{n} polynomials compared up to length {cutoff}"
        + (f"; failures: {bad[:3]}" if bad else ""))


def orbit_sum_product(datum: RootDatum, lams) -> dict[Coweight, int]:
    """Brute-force oracle: multiply Weyl-orbit sums in the group algebra
    of the cocharacter lattice and decompose into orbit sums."""
    prod: dict[Coweight, int] = {tuple(0 for _ in range(datum.dim)): 1}
    for lam in lams:
        nxt: dict[Coweight, int] = {}
        for mu, c in prod.items():
            for nu in datum.weyl_orbit(tuple(lam)):
                key = tuple(a + b for a, b in zip(mu, nu))
                nxt[key] = nxt.get(key, 0) + c
        prod = nxt
    out: dict[Coweight, int] = {}
    while prod:
        lam = max(prod, key=lambda t: (datum.translation_length(t), t))
        dom = datum.dominant_rep(lam)
        c = prod[lam]
        out[dom] = out.get(dom, 0) + c
        for nu in datum.weyl_orbit(dom):
            r = prod.get(nu, 0) - c
            if r:
                prod[nu] = r
            else:
                prod.pop(nu, None)
    return {lam: c for lam, c in out.items() if c}


def verify_q1(datum: RootDatum, cutoff: int = 6) -> VerifyResult:
    """sph_conv specialized at q = 1 equals the orbit-sum oracle."""
    doms = _dominants(datum, cutoff)
    bad = []
    n = 0
    for lam, mu in itertools.combinations_with_replacement(doms, 2):
        n += 1
        conv = spherical.sph_conv(spherical.m(datum, lam),
                                  spherical.m(datum, mu),
                                  cutoff=2 * cutoff)
        got = {nu: c.specialize_q(1) for nu, c in conv.terms.items()}
        got = {nu: c for nu, c in got.items() if c}
        if got != orbit_sum_product(datum, [lam, mu]):
            bad.append((lam, mu))
    return VerifyResult(
        f"q1-oracle[{datum.label}]", not bad,
        f"{n} products" + (f"; failures at {bad}" if bad else ""))
