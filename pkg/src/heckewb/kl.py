"""Kazhdan-Lusztig polynomials and basis, Bott-Samelson products, and
the parity checks on spherical double cosets.

The KL basis element for w is

    C'_w = v^{-l(w)} * sum_{y <= w} P_{y,w}(q) T_y,

bar-invariant with unitriangular polynomial part. Tables are computed
per winding component after stripping the length-0 part (length-0
elements act by algebra automorphisms, and Bruhat order is
component-wise), by the standard recursion

    C'_{ws} C'_s = C'_w + sum_{z s < z} mu(z, ws) C'_z    (ws < w)

with mu(z, x) read off the coefficient of v^{-l(z)-1} in C'_x.

The table grows on demand and can be persisted through heckewb.cache;
recomputation verifies against a loaded file when asked. Positivity and
the degree bound deg P_{y,w} <= (l(w)-l(y)-1)/2 are asserted at build
time; these hold at every cutoff this package is meant for (desk scale),
and a violation is reported as an internal invariant failure rather than
silently accepted.
"""

from __future__ import annotations

from . import hecke, weyl
from .errors import (ConventionViolationError, CutoffExceededError,
                     LatticeClassError, NonDominantError)
from .hecke import HeckeElement
from .ring import LaurentPoly, ONE, ZERO
from .rootdata import Coweight, RootDatum
from .weyl import AffineWeylElement

__all__ = [
    "KLTable",
    "get_table",
    "kl_polynomial",
    "kl_basis",
    "bott_samelson",
    "bs_decompose",
    "cp_decompose",
    "spherical_parity_check",
]


class KLTable:
    """KL data for one datum, all elements of length <= cutoff in the
    identity winding component."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.cutoff = -1
        self.cp: dict[AffineWeylElement, HeckeElement] = {}
        self.shells: list[list[AffineWeylElement]] = []

    # -- construction --------------------------------------------------

    def extend(self, cutoff: int) -> "KLTable":
        if cutoff <= self.cutoff:
            return self
        datum = self.datum
        self.shells = weyl.elements_up_to_length(datum, cutoff)
        for n in range(max(self.cutoff + 1, 0), cutoff + 1):
            for w in self.shells[n]:
                if w not in self.cp:
                    self.cp[w] = self._build(w)
        self.cutoff = cutoff
        return self

    def _build(self, w: AffineWeylElement) -> HeckeElement:
        datum = self.datum
        if w.length() == 0:
            return hecke.basis(w)
        i = weyl.first_descent(w)
        x = w * weyl.simple_reflection(datum, i)
        cx = self.cp[x]
        # C'_x * C'_s = v^{-1} (C'_x T_s + C'_x)
        raw = hecke.HeckeElement(datum, hecke._rmul_gen(datum, cx.terms, i))
        prod = (raw + cx).scale(LaurentPoly.monomial(-1))
        out = prod
        lx = x.length()
        for z, c in cx.terms.items():
            lz = z.length()
            if lz < lx and weyl.is_descent(z, i):
                mu = c.coeff(-lz - 1)
                if mu:
                    out = out - self.cp[z].scale(mu)
        self._validate(w, out)
        return out

    def _validate(self, w: AffineWeylElement, cw: HeckeElement):
        lw = w.length()
        if cw.coeff(w) != LaurentPoly.monomial(-lw):
            raise ConventionViolationError(
                f"KL: leading coefficient of C'_{w} is {cw.coeff(w)}")
        for y, c in cw.terms.items():
            ly = y.length()
            if y != w:
                if ly >= lw or not weyl.bruhat_leq(y, w):
                    raise ConventionViolationError(
                        f"KL: support of C'_{w} leaves the Bruhat interval")
            if not c.has_nonnegative_coeffs():
                raise ConventionViolationError(
                    f"KL: negative coefficient in C'_{w} at {y}")
            for e in c.terms():
                if (e + lw) % 2 != 0:
                    raise ConventionViolationError(
                        f"KL: parity failure in C'_{w} at {y}")
                if y != w and e > -ly - 1:
                    raise ConventionViolationError(
                        f"KL: degree bound failure in C'_{w} at {y}")

    # -- lookups --------------------------------------------------------

    def _strip(self, x: AffineWeylElement
               ) -> tuple[int, AffineWeylElement]:
        k = x.component()
        if k == 0:
            return 0, x
        return k, weyl.omega_power(self.datum, -k) * x

    def polynomial(self, y: AffineWeylElement,
                   w: AffineWeylElement) -> LaurentPoly:
        """P_{y,w} as a polynomial in q. Same winding component required."""
        ky, y0 = self._strip(y)
        kw, w0 = self._strip(w)
        if ky != kw:
            raise LatticeClassError(
                f"{y} and {w} lie in different winding components")
        if w0.length() > self.cutoff:
            raise CutoffExceededError(
                f"length {w0.length()} exceeds table cutoff {self.cutoff}")
        if y0 == w0:
            return ONE
        if not weyl.bruhat_leq(y0, w0):
            return ZERO
        c = self.cp[w0].coeff(y0)
        return c.shift(w0.length())

    def basis_element(self, w: AffineWeylElement) -> HeckeElement:
        """C'_w; the length-0 part twists by left multiplication."""
        k, w0 = self._strip(w)
        if w0.length() > self.cutoff:
            raise CutoffExceededError(
                f"length {w0.length()} exceeds table cutoff {self.cutoff}")
        cw = self.cp[w0]
        if k == 0:
            return cw
        return HeckeElement(
            self.datum, hecke._lmul_omega(self.datum, cw.terms, k))

    def mu(self, z: AffineWeylElement, w: AffineWeylElement) -> int:
        p = self.polynomial(z, w)
        d = w.length() - z.length() - 1
        if d < 0 or d % 2:
            return 0
        return p.coeff(d)

    def records(self) -> list[tuple[str, str, LaurentPoly]]:
        """Flat (y-word, w-word, polynomial) view, sorted; the on-disk
        exchange format."""
        out = []
        for w, cw in self.cp.items():
            _, wword = weyl.reduced_word(w)
            wkey = ".".join(f"s{i}" for i in wword) if wword else "e"
            for y in cw.terms:
                _, yword = weyl.reduced_word(y)
                ykey = ".".join(f"s{i}" for i in yword) if yword else "e"
                out.append((ykey, wkey, self.polynomial(y, w)))
        out.sort()
        return out


_TABLES: dict[str, KLTable] = {}


def get_table(datum: RootDatum, cutoff: int,
              cache_dir=None, verify_cache: bool = False) -> KLTable:
    """The shared KL table for a datum, extended to the cutoff.

    With a cache directory, a stored table of sufficient cutoff is
    loaded instead of recomputed; verify_cache forces recomputation and
    an exact comparison against the stored records.
    """
    table = _TABLES.get(datum.label)
    if table is None:
        table = KLTable(datum)
        _TABLES[datum.label] = table
    if cache_dir is None:
        return table.extend(cutoff)
    from . import cache
    loaded = cache.load_kl_table(cache_dir, datum)
    if loaded is not None and verify_cache:
        fresh = KLTable(datum).extend(loaded.cutoff)
        if fresh.records() != loaded.records():
            raise ConventionViolationError(
                "cached KL table disagrees with recomputation")
    if loaded is not None and loaded.cutoff > table.cutoff:
        _TABLES[datum.label] = loaded
        table = loaded
    table.extend(cutoff)
    if loaded is None or loaded.cutoff < table.cutoff:
        cache.save_kl_table(cache_dir, table)
    return table


def kl_polynomial(y: AffineWeylElement, w: AffineWeylElement,
                  cutoff: int | None = None) -> LaurentPoly:
    """P_{y,w} in q; the table grows on demand up to the given cutoff
    (default: exactly as far as w requires)."""
    datum = y.datum
    if cutoff is not None and w.length() > cutoff:
        raise CutoffExceededError(
            f"length {w.length()} exceeds cutoff {cutoff}")
    table = get_table(datum, w.length())
    return table.polynomial(y, w)


def kl_basis(w: AffineWeylElement) -> HeckeElement:
    """C'_w = v^{-l(w)} sum P_{y,w}(q) T_y; bar-invariant."""
    return get_table(w.datum, w.length()).basis_element(w)


def bott_samelson(datum: RootDatum, word) -> HeckeElement:
    """The product of (T_{s_i} + 1) along the word.

    The T_y-coefficient is the point-count polynomial of the fiber of
    the corresponding tower of P^1-bundles over a point of the y-orbit;
    all coefficients lie in Z>=0[q].
    """
    h = hecke.unit(datum)
    for i in word:
        h = HeckeElement(datum, hecke._rmul_gen(datum, h.terms, i)) + h
    return h


def cp_decompose(h: HeckeElement) -> dict[AffineWeylElement, LaurentPoly]:
    """Expand an element in the KL basis by greedy top-down elimination."""
    out: dict[AffineWeylElement, LaurentPoly] = {}
    rest = h
    while not rest.is_zero():
        w = max(rest.terms, key=AffineWeylElement.sort_key)
        a = rest.coeff(w).shift(w.length())
        out[w] = a
        rest = rest - kl_basis(w).scale(a)
    return out


def bs_decompose(datum: RootDatum, word
                 ) -> dict[AffineWeylElement, LaurentPoly]:
    """KL-basis coefficients of prod v^{-1}(T_{s_i} + 1).

    For a reduced word of w the C'_w-coefficient is 1; every coefficient
    has nonnegative entries with exponents of constant parity.
    """
    word = list(word)
    h = bott_samelson(datum, word).scale(LaurentPoly.monomial(-len(word)))
    get_table(datum, len(word))
    return cp_decompose(h)


def _max_coset_element(datum: RootDatum, lam: Coweight) -> AffineWeylElement:
    return max(weyl.coset_elements(datum, lam),
               key=AffineWeylElement.sort_key)


def spherical_parity_check(datum: RootDatum, lam: Coweight,
                           mu: Coweight) -> bool:
    """Parity and Ext-degree conditions for a pair of spherical orbits.

    With w_lam, w_mu the maximal double-coset representatives: the
    length difference must be even, and for distinct coweights
    deg P_{w_mu, w_lam} <= (l(w_lam) - l(w_mu) - 2)/2 (the degree bound
    behind semisimplicity). Equal coweights pass outright: there the
    relevant obstruction is the vanishing H^1 of a single orbit and no
    KL bound enters.
    """
    lam, mu = tuple(lam), tuple(mu)
    for x in (lam, mu):
        if not datum.is_dominant(x):
            raise NonDominantError(f"{x} is not dominant")
    if datum.component_of(lam) != datum.component_of(mu):
        raise LatticeClassError(
            f"{lam} and {mu} lie in different lattice classes")
    wl = _max_coset_element(datum, lam)
    wm = _max_coset_element(datum, mu)
    diff = wl.length() - wm.length()
    if diff % 2 != 0:
        return False
    if lam == mu:
        return True
    table = get_table(datum, max(wl.length(), wm.length()))
    p = table.polynomial(wm, wl)
    if p.is_zero():
        return True
    return 2 * p.q_degree() <= diff - 2
