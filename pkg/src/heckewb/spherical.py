"""The spherical algebra: the double-coset basis, the averaging map, and
spherical convolution.

Measure convention: vol(Iw) = 1 throughout. The averaging map is left
multiplication by the characteristic class 1_K (no division), and
spherical convolution divides by the finite Poincare polynomial P_W(q)
exactly once. Every computation stays in integer Laurent polynomials and
any convention mismatch surfaces as an exact-division failure.

m_lam is the characteristic class of one double coset: the sum of T_x
over the coset with coefficient 1 (not the intersection-cohomology
class; those live in the KL module).
"""

from __future__ import annotations

import re

from . import hecke, weyl
from .errors import (CutoffExceededError, DatumMismatchError,
                     GrammarError, NonDominantError, NotBiInvariantError,
                     ConventionViolationError)
from .hecke import HeckeElement
from .ring import (LaurentPoly, ONE, ZERO, format_laurent, parse_laurent)
from .rootdata import Coweight, RootDatum

__all__ = [
    "SphericalElement",
    "m",
    "embed",
    "pi_map",
    "sph_conv",
    "SatakeMatrix",
    "satake_matrix",
    "poincare_polynomial",
    "dominant_coweights",
    "format_spherical",
    "parse_spherical",
    "spherical_to_obj",
    "spherical_from_obj",
]

DEFAULT_CUTOFF = 6


class SphericalElement:
    """Finitely supported map from dominant coweights to coefficients."""

    __slots__ = ("datum", "terms")

    def __init__(self, datum: RootDatum, terms: dict[Coweight, LaurentPoly]):
        self.datum = datum
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, lam: Coweight) -> LaurentPoly:
        return self.terms.get(tuple(lam), ZERO)

    def support(self) -> list[Coweight]:
        return sorted(self.terms,
                      key=lambda t: (self.datum.translation_length(t), t))

    def __add__(self, other: "SphericalElement") -> "SphericalElement":
        self._check(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            s = out.get(lam)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(lam, None)
            else:
                out[lam] = s
        return SphericalElement(self.datum, out)

    def __sub__(self, other: "SphericalElement") -> "SphericalElement":
        return self + other.scale(-1)

    def scale(self, c) -> "SphericalElement":
        if isinstance(c, int):
            c = LaurentPoly.from_int(c)
        if c.is_zero():
            return SphericalElement(self.datum, {})
        return SphericalElement(self.datum,
                                {lam: p * c for lam, p in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, SphericalElement)
                and self.datum is other.datum and self.terms == other.terms)

    def __repr__(self):
        return f"<{format_spherical(self)} over {self.datum.label}>"

    def _check(self, other):
        if other.datum is not self.datum:
            raise DatumMismatchError(
                f"elements over {self.datum.label} and {other.datum.label}")


def m(datum: RootDatum, lam: Coweight) -> SphericalElement:
    """The double-coset basis element m_lam (lam dominant)."""
    lam = tuple(lam)
    if not datum.is_dominant(lam):
        raise NonDominantError(f"{lam} is not dominant")
    return SphericalElement(datum, {lam: ONE})


def embed(c: SphericalElement,
          cutoff: int = DEFAULT_CUTOFF) -> HeckeElement:
    """Characteristic embedding: m_lam becomes the sum of T_x over the
    double coset of t_lam. Injective and linear."""
    datum = c.datum
    terms: dict = {}
    for lam, coeff in c.terms.items():
        if datum.translation_length(lam) > cutoff:
            raise CutoffExceededError(
                f"coweight {lam} exceeds the length cutoff {cutoff}")
        for x in weyl.coset_elements(datum, lam):
            terms[x] = coeff
    return HeckeElement(datum, terms)


def pi_map(h) -> SphericalElement:
    """The averaging map: left convolution with 1_K, recognized in the
    m-basis.

    The result of 1_K * h must be constant on every double coset it
    touches; a non-constant coset raises NotBiInvariantError. That error
    is expected behavior for non-central input, not a bug.
    """
    if hasattr(h, "element"):  # CentralElement convenience
        h = h.element
    datum = h.datum
    averaged = hecke.one_K(datum) * h
    buckets: dict[Coweight, LaurentPoly] = {}
    for x in averaged.terms:
        buckets.setdefault(weyl.double_coset(x), ZERO)
    out: dict[Coweight, LaurentPoly] = {}
    for lam in buckets:
        seen = {averaged.coeff(x) for x in weyl.coset_elements(datum, lam)}
        if len(seen) != 1:
            raise NotBiInvariantError(
                f"averaged element is not constant on the double coset "
                f"of {lam}; it has no m-basis expansion")
        c = seen.pop()
        if not c.is_zero():
            out[lam] = c
    return SphericalElement(datum, out)


def poincare_polynomial(datum: RootDatum) -> LaurentPoly:
    """P_W(q): the length generating function of the finite Weyl group."""
    return LaurentPoly.from_terms(
        {2 * k: c for k, c in enumerate(datum.poincare_terms())})


def sph_conv(c1: SphericalElement, c2: SphericalElement,
             cutoff: int = DEFAULT_CUTOFF) -> SphericalElement:
    """Spherical convolution: embed, multiply, divide by P_W(q) once,
    recognize in the m-basis. Unital, associative, commutative."""
    c1._check(c2)
    datum = c1.datum
    prod = embed(c1, cutoff) * embed(c2, cutoff)
    pw = poincare_polynomial(datum)
    try:
        normalized = HeckeElement(
            datum, {w: c.exact_div(pw) for w, c in prod.terms.items()})
    except Exception as exc:
        raise ConventionViolationError(
            f"convolution product not divisible by P_W(q): {exc}") from exc
    buckets: dict[Coweight, None] = {}
    for x in normalized.terms:
        buckets.setdefault(weyl.double_coset(x))
    out: dict[Coweight, LaurentPoly] = {}
    for lam in buckets:
        seen = {normalized.coeff(x)
                for x in weyl.coset_elements(datum, lam)}
        if len(seen) != 1:
            raise NotBiInvariantError(
                "internal error: convolution of bi-invariant classes is "
                f"not constant on the double coset of {lam}")
        c = seen.pop()
        if not c.is_zero():
            out[lam] = c
    return SphericalElement(datum, out)


def dominant_coweights(datum: RootDatum, cutoff: int) -> list[Coweight]:
    """Dominant coweights with translation length at most the cutoff,
    sorted by (length, coordinates).

    For GLn only winding classes 0..n-1 are listed: central translations
    have length 0, so every other class is a unit twist of these.
    """
    out = []
    if datum.is_gl:
        n = datum.gl_n
        lo, hi = -cutoff - 1, cutoff + 2

        def rec(prefix):
            if len(prefix) == n:
                if 0 <= sum(prefix) < n \
                        and datum.translation_length(prefix) <= cutoff:
                    out.append(tuple(prefix))
                return
            start = prefix[-1] if prefix else hi - 1
            for x in range(min(start, hi - 1), lo - 1, -1):
                rec(prefix + [x])

        rec([])
    else:
        # coordinates in the simple-coroot basis; dominant implies
        # nonnegative coordinates and each pairs with 2rho to 2
        bound = cutoff // 2

        def rec(prefix):
            if len(prefix) == datum.dim:
                lam = tuple(prefix)
                if datum.is_dominant(lam) \
                        and datum.translation_length(lam) <= cutoff:
                    out.append(lam)
                return
            for x in range(bound + 1):
                rec(prefix + [x])

        rec([])
    return sorted(out, key=lambda t: (datum.translation_length(t), t))


class SatakeMatrix:
    """The matrix of the averaging map on {z_lam} against {m_mu}.

    entries[(mu, lam)] is the m_mu-coefficient of pi(z_lam). Dominance
    triangularity with unit-monomial diagonal certifies that the
    averaging map restricted to the span of the z_lam is injective with
    a computable inverse.
    """

    def __init__(self, datum: RootDatum, labels: list[Coweight],
                 entries: dict[tuple[Coweight, Coweight], LaurentPoly]):
        self.datum = datum
        self.labels = labels
        self.entries = entries

    def entry(self, mu: Coweight, lam: Coweight) -> LaurentPoly:
        return self.entries.get((tuple(mu), tuple(lam)), ZERO)

    def check_triangular(self) -> bool:
        """Strict dominance triangularity with unit-monomial diagonal;
        raises ConventionViolationError when the diagonal is not a unit."""
        d = self.datum
        for (mu, lam), c in self.entries.items():
            if c.is_zero():
                continue
            if mu == lam:
                if not c.is_unit_monomial():
                    raise ConventionViolationError(
                        f"Satake diagonal at {lam} is {c}, not a unit "
                        "monomial")
                continue
            if d.component_of(mu) != d.component_of(lam):
                return False
            if not (d.dominance_leq(mu, lam) and mu != lam):
                return False
        return True


def satake_matrix(datum: RootDatum,
                  cutoff: int = DEFAULT_CUTOFF) -> SatakeMatrix:
    from . import center  # deferred: center depends on this module

    labels = dominant_coweights(datum, cutoff)
    entries: dict[tuple[Coweight, Coweight], LaurentPoly] = {}
    for lam in labels:
        col = center._pi_z(datum, lam)
        for mu, c in col.terms.items():
            entries[(mu, lam)] = c
    return SatakeMatrix(datum, labels, entries)


# -- text and JSON forms ----------------------------------------------

def format_spherical(c: SphericalElement) -> str:
    if not c.terms:
        return "0"
    parts = []
    for lam in reversed(c.support()):
        p = c.terms[lam]
        ps = format_laurent(p)
        coords = ",".join(str(x) for x in lam)
        if p == ONE:
            parts.append(f"m[{coords}]")
        elif p.is_monomial() and p.coeffs[0] > 0:
            parts.append(f"{ps}*m[{coords}]")
        else:
            parts.append(f"({ps})*m[{coords}]")
    return " + ".join(parts)


_M_TERM_RE = re.compile(
    r"^\s*(?:\(\s*(?P<par>[^()]*?)\s*\)|(?P<bare>[^()\[\]]*?))"
    r"\s*\*?\s*m\[\s*(?P<coords>[^\]]*?)\s*\]\s*$")


def parse_spherical(datum: RootDatum, text: str) -> SphericalElement:
    text = text.strip()
    if text == "0":
        return SphericalElement(datum, {})
    out: dict[Coweight, LaurentPoly] = {}
    for sign, chunk in hecke._split_terms(text):
        mt = _M_TERM_RE.match(chunk)
        if not mt:
            raise GrammarError(f"bad spherical term: {chunk.strip()!r}")
        coeff_text = mt.group("par")
        if coeff_text is None:
            coeff_text = mt.group("bare").strip() or "1"
        coeff = parse_laurent(coeff_text)
        if sign < 0:
            coeff = -coeff
        try:
            lam = tuple(int(x) for x in mt.group("coords").split(","))
        except ValueError as exc:
            raise GrammarError(f"bad coweight in m[...]: {exc}") from exc
        if len(lam) != datum.dim:
            raise GrammarError(
                f"coweight {lam} has wrong rank for {datum.label}")
        if not datum.is_dominant(lam):
            raise NonDominantError(f"{lam} is not dominant")
        cur = out.get(lam, ZERO) + coeff
        if cur.is_zero():
            out.pop(lam, None)
        else:
            out[lam] = cur
    return SphericalElement(datum, out)


def spherical_to_obj(c: SphericalElement) -> dict:
    return {
        "kind": "spherical",
        "datum": c.datum.label,
        "terms": [{"coweight": list(lam), "coeff": c.terms[lam].to_pairs()}
                  for lam in c.support()],
    }


def spherical_from_obj(datum: RootDatum, obj: dict) -> SphericalElement:
    if obj.get("kind") != "spherical":
        raise GrammarError("not a serialized spherical element")
    if obj.get("datum") != datum.label:
        raise DatumMismatchError(
            f"element was serialized over {obj.get('datum')}, "
            f"requested {datum.label}")
    out: dict[Coweight, LaurentPoly] = {}
    for t in obj["terms"]:
        lam = tuple(int(x) for x in t["coweight"])
        if not datum.is_dominant(lam):
            raise NonDominantError(f"{lam} is not dominant")
        cur = out.get(lam, ZERO) + LaurentPoly.from_pairs(t["coeff"])
        if cur.is_zero():
            out.pop(lam, None)
        else:
            out[lam] = cur
    return SphericalElement(datum, out)
