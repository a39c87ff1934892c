"""The Iwahori-Hecke algebra of the extended affine Weyl group.

Elements are finitely supported maps from group elements to Laurent
polynomials, written in the T-basis. THE convention of this repo is the
function-theoretic quadratic relation

    T_s * T_s = (q - 1) T_s + q T_e,

with T_x T_s = T_{xs} when the length goes up, and T_omega acting by
relabeling (length-0 elements are units). Multiplication is driven by
right multiplication by generators along reduced words of the shorter
factor, which matches the recursion structure everywhere else in the
package and caches well.

Elements are immutable after construction; all operations are pure.

Text grammar:  ``(q-1)*T[s0] + q*T[e] - v*T[omega^1.s1]``
with the bracket holding a reduced word preceded by an optional
omega part.
"""

from __future__ import annotations

import re

from . import weyl
from .errors import DatumMismatchError, GrammarError
from .ring import (LaurentPoly, ONE, QM1, Q, ZERO, format_laurent,
                   parse_laurent)
from .rootdata import RootDatum
from .weyl import AffineWeylElement

__all__ = [
    "HeckeElement",
    "basis",
    "unit",
    "one_K",
    "mul",
    "invert_basis",
    "bar_element",
    "commutator_is_zero",
    "format_hecke",
    "parse_hecke",
    "hecke_to_obj",
    "hecke_from_obj",
]


class HeckeElement:
    """A finitely supported T-basis combination over one datum."""

    __slots__ = ("datum", "terms")

    def __init__(self, datum: RootDatum,
                 terms: dict[AffineWeylElement, LaurentPoly]):
        self.datum = datum
        self.terms = terms

    # -- linear structure ---------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, w: AffineWeylElement) -> LaurentPoly:
        return self.terms.get(w, ZERO)

    def support(self) -> list[AffineWeylElement]:
        return sorted(self.terms, key=AffineWeylElement.sort_key)

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return HeckeElement(self.datum, out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(-1)

    def __neg__(self) -> "HeckeElement":
        return self.scale(-1)

    def scale(self, c) -> "HeckeElement":
        if isinstance(c, int):
            c = LaurentPoly.from_int(c)
        if c.is_zero():
            return HeckeElement(self.datum, {})
        return HeckeElement(self.datum,
                            {w: p * c for w, p in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return (isinstance(other, HeckeElement)
                and self.datum is other.datum and self.terms == other.terms)

    def __repr__(self):
        return f"<{format_hecke(self)} over {self.datum.label}>"

    def _check(self, other: "HeckeElement"):
        if other.datum is not self.datum:
            raise DatumMismatchError(
                f"elements over {self.datum.label} and {other.datum.label}")

    def max_length(self) -> int:
        return max((w.length() for w in self.terms), default=0)


def unit(datum: RootDatum) -> HeckeElement:
    return HeckeElement(datum, {weyl.identity(datum): ONE})


def basis(w: AffineWeylElement, coeff: LaurentPoly = ONE) -> HeckeElement:
    if coeff.is_zero():
        return HeckeElement(w.datum, {})
    return HeckeElement(w.datum, {w: coeff})


def one_K(datum: RootDatum) -> HeckeElement:
    """The characteristic class of the maximal compact: the sum of T_w
    over the finite Weyl group."""
    return HeckeElement(
        datum, {w: ONE for w in weyl.finite_weyl_elements(datum)})


# -- generator actions ------------------------------------------------

def _rmul_gen(datum: RootDatum, terms, i: int):
    """terms * T_{s_i} as a raw dict."""
    out: dict[AffineWeylElement, LaurentPoly] = {}
    for w, c in terms.items():
        ws = weyl.mul_gen(w, i)
        if weyl.is_descent(w, i):
            _acc(out, ws, c * Q)
            _acc(out, w, c * QM1)
        else:
            _acc(out, ws, c)
    return out


def _lmul_gen(datum: RootDatum, terms, i: int):
    """T_{s_i} * terms as a raw dict."""
    out: dict[AffineWeylElement, LaurentPoly] = {}
    for w, c in terms.items():
        winv = w.inverse()
        sw = weyl.mul_gen(winv, i).inverse()
        if weyl.is_descent(winv, i):
            _acc(out, sw, c * Q)
            _acc(out, w, c * QM1)
        else:
            _acc(out, sw, c)
    return out


def _rmul_omega(datum: RootDatum, terms, k: int):
    if k == 0:
        return dict(terms)
    om = weyl.omega_power(datum, k)
    return {w * om: c for w, c in terms.items()}


def _lmul_omega(datum: RootDatum, terms, k: int):
    if k == 0:
        return dict(terms)
    om = weyl.omega_power(datum, k)
    return {om * w: c for w, c in terms.items()}


def _acc(out, w, c):
    s = out.get(w)
    s = c if s is None else s + c
    if s.is_zero():
        out.pop(w, None)
    else:
        out[w] = s


def _word_cost(h: HeckeElement) -> int:
    return sum(len(weyl.reduced_word(w)[1]) + 1 for w in h.terms)


def mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Convolution product. Folds generator actions along reduced words
    of whichever factor makes that cheaper."""
    a._check(b)
    datum = a.datum
    if not a.terms or not b.terms:
        return HeckeElement(datum, {})
    if _word_cost(b) * len(a.terms) <= _word_cost(a) * len(b.terms):
        out: dict[AffineWeylElement, LaurentPoly] = {}
        for y, cy in b.terms.items():
            om, letters = weyl.reduced_word(y)
            t = _rmul_omega(datum, a.terms, om.component())
            for i in letters:
                t = _rmul_gen(datum, t, i)
            for w, c in t.items():
                _acc(out, w, c * cy)
        return HeckeElement(datum, out)
    out = {}
    for x, cx in a.terms.items():
        om, letters = weyl.reduced_word(x)
        t = b.terms
        for i in reversed(letters):
            t = _lmul_gen(datum, t, i)
        t = _lmul_omega(datum, t, om.component())
        for w, c in t.items():
            _acc(out, w, c * cx)
    return HeckeElement(datum, out)


_INV_CACHE: dict[tuple[str, AffineWeylElement], HeckeElement] = {}


def invert_basis(w: AffineWeylElement) -> HeckeElement:
    """The inverse of the basis element T_w.

    Built from T_s^{-1} = q^{-1} T_s + (q^{-1} - 1) T_e along a reduced
    word; length-0 elements are units with T_omega^{-1} = T_{omega^-1}.
    """
    key = (w.datum.label, w)
    cached = _INV_CACHE.get(key)
    if cached is not None:
        return cached
    datum = w.datum
    om, letters = weyl.reduced_word(w)
    qinv = LaurentPoly.monomial(-2)
    qinv_m1 = qinv - ONE
    terms = {weyl.identity(datum): ONE}
    for i in reversed(letters):
        ts = _rmul_gen(datum, terms, i)
        out: dict[AffineWeylElement, LaurentPoly] = {}
        for x, c in ts.items():
            _acc(out, x, c * qinv)
        for x, c in terms.items():
            _acc(out, x, c * qinv_m1)
        terms = out
    terms = _rmul_omega(datum, terms, -om.component())
    result = HeckeElement(datum, terms)
    _INV_CACHE[key] = result
    return result


def bar_element(h: HeckeElement) -> HeckeElement:
    """The bar involution: v -> v^{-1} on coefficients and
    T_w -> (T_{w^{-1}})^{-1} on the basis. A ring involution."""
    out = HeckeElement(h.datum, {})
    for w, c in h.terms.items():
        out = out + invert_basis(w.inverse()).scale(c.bar())
    return out


def commutator_is_zero(a: HeckeElement, b: HeckeElement) -> bool:
    return mul(a, b) == mul(b, a)


# -- text form ----------------------------------------------------------

def _word_str(w: AffineWeylElement) -> str:
    om, letters = weyl.reduced_word(w)
    parts = []
    k = om.component()
    if k:
        parts.append(f"omega^{k}")
    parts.extend(f"s{i}" for i in letters)
    return ".".join(parts) if parts else "e"


def format_hecke(h: HeckeElement) -> str:
    if not h.terms:
        return "0"
    parts = []
    for w in reversed(h.support()):
        c = h.terms[w]
        cs = format_laurent(c)
        if c == ONE:
            parts.append(f"T[{_word_str(w)}]")
        elif c.is_monomial() and c.coeffs[0] > 0:
            parts.append(f"{cs}*T[{_word_str(w)}]")
        else:
            parts.append(f"({cs})*T[{_word_str(w)}]")
    return " + ".join(parts)


_TERM_RE = re.compile(
    r"^\s*(?:\(\s*(?P<par>[^()]*?)\s*\)|(?P<bare>[^()\[\]]*?))"
    r"\s*\*?\s*T\[\s*(?P<word>[^\]]*?)\s*\]\s*$")


def _split_terms(text: str):
    """Split a sum at top-level '+'/'-', keeping signs with the terms.

    A sign directly after '^' belongs to an exponent, not to the sum.
    """
    depth = 0
    terms = []
    cur = ""
    sign = 1
    prev = ""
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in "+-" and prev != "^":
            if cur.strip():
                terms.append((sign, cur))
                sign = 1 if ch == "+" else -1
                cur = ""
            elif ch == "-":
                sign = -sign
        else:
            cur += ch
        if not ch.isspace():
            prev = ch
    if cur.strip():
        terms.append((sign, cur))
    return terms


def parse_hecke(datum: RootDatum, text: str) -> HeckeElement:
    """Parse the element grammar back to an element (inverse of
    format_hecke on canonical output)."""
    text = text.strip()
    if text == "0":
        return HeckeElement(datum, {})
    out: dict[AffineWeylElement, LaurentPoly] = {}
    for sign, chunk in _split_terms(text):
        m = _TERM_RE.match(chunk)
        if not m:
            raise GrammarError(f"bad algebra term: {chunk.strip()!r}")
        coeff_text = m.group("par")
        if coeff_text is None:
            coeff_text = m.group("bare").strip()
            if coeff_text in ("", "+"):
                coeff_text = "1"
        coeff = parse_laurent(coeff_text)
        word = m.group("word")
        k = 0
        letters: list[int] = []
        for tok in ([] if word == "e" else word.split(".")):
            tok = tok.strip()
            mo = re.fullmatch(r"omega\^(-?\d+)", tok)
            if mo:
                k = int(mo.group(1))
                continue
            ms = re.fullmatch(r"s(\d+)", tok)
            if not ms:
                raise GrammarError(f"bad letter {tok!r} in T[...]")
            letters.append(int(ms.group(1)))
        w = weyl.from_word(datum, k, letters)
        _acc(out, w, coeff if sign > 0 else -coeff)
    return HeckeElement(datum, out)


# -- JSON form -----------------------------------------------------------

def hecke_to_obj(h: HeckeElement) -> dict:
    terms = []
    for w in h.support():
        om, letters = weyl.reduced_word(w)
        terms.append({
            "omega": om.component(),
            "word": list(letters),
            "coeff": h.terms[w].to_pairs(),
        })
    return {"kind": "hecke", "datum": h.datum.label, "terms": terms}


def hecke_from_obj(datum: RootDatum, obj: dict) -> HeckeElement:
    if obj.get("kind") != "hecke":
        raise GrammarError("not a serialized algebra element")
    if obj.get("datum") != datum.label:
        raise DatumMismatchError(
            f"element was serialized over {obj.get('datum')}, "
            f"requested {datum.label}")
    out: dict[AffineWeylElement, LaurentPoly] = {}
    for t in obj["terms"]:
        w = weyl.from_word(datum, int(t.get("omega", 0)),
                           [int(i) for i in t["word"]])
        _acc(out, w, LaurentPoly.from_pairs(t["coeff"]))
    return HeckeElement(datum, out)
