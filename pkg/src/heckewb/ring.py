"""Exact Laurent-polynomial arithmetic in v, with q = v**2.

Values are immutable and canonical (no stored zero coefficients), so
equality and hashing are structural and polynomials can be shared freely
across threads. Coefficients are Python integers; nothing here ever
rounds.

The Tate-twist bookkeeping of the rest of the package rides on the
convention q = v**2: a twist by (-1) is multiplication by q, a
cohomological shift by [1] is multiplication by v**-1.

>>> p = parse_laurent("v + v^-1")
>>> p * p == parse_laurent("q + 2 + q^-1")
True
>>> format_laurent(bar(p * p))
'q + 2 + q^-1'

The inner add/mul loops live in a kernel module selected at import time:
the compiled Cython kernel when available, otherwise the pure-Python
fallback. Set HECKEWB_PURE=1 to force the fallback.
"""

from __future__ import annotations

import os
import re
from fractions import Fraction

from .errors import GrammarError, InexactDivisionError, OddExponentError

__all__ = [
    "LaurentPoly",
    "BACKEND",
    "ZERO",
    "ONE",
    "V",
    "V_INV",
    "Q",
    "Q_INV",
    "QM1",
    "add",
    "mul",
    "neg",
    "bar",
    "exact_div",
    "specialize_q",
    "parse_laurent",
    "format_laurent",
]

if os.environ.get("HECKEWB_PURE") == "1":
    from . import _ring_py as _K
    BACKEND = "pure"
else:
    try:
        from . import _ring_cy as _K  # type: ignore[attr-defined]
        BACKEND = "compiled"
    except ImportError:
        from . import _ring_py as _K
        BACKEND = "pure"


class LaurentPoly:
    """An integer Laurent polynomial in v, stored densely.

    ``off`` is the lowest exponent present, ``coeffs`` the coefficient
    run starting there. Do not call the constructor with non-canonical
    data; use the classmethods.
    """

    __slots__ = ("off", "coeffs")

    def __init__(self, off: int = 0, coeffs: tuple[int, ...] = ()):
        self.off = off
        self.coeffs = coeffs

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return ZERO

    @classmethod
    def one(cls) -> "LaurentPoly":
        return ONE

    @classmethod
    def from_int(cls, n: int) -> "LaurentPoly":
        if n == 0:
            return ZERO
        return cls(0, (n,))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        """coeff * v**exp"""
        if coeff == 0:
            return ZERO
        return cls(exp, (coeff,))

    @classmethod
    def from_terms(cls, terms) -> "LaurentPoly":
        """Build from a mapping exponent -> coefficient."""
        items = [(e, c) for e, c in terms.items() if c != 0]
        if not items:
            return ZERO
        lo = min(e for e, _ in items)
        hi = max(e for e, _ in items)
        out = [0] * (hi - lo + 1)
        for e, c in items:
            out[e - lo] += c
        return cls(*_K.add(lo, tuple(out), 0, ()))

    @classmethod
    def from_pairs(cls, pairs) -> "LaurentPoly":
        """Build from [[exponent, coefficient], ...] (the JSON wire form)."""
        acc: dict[int, int] = {}
        for e, c in pairs:
            acc[e] = acc.get(e, 0) + c
        return cls.from_terms(acc)

    # -- structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def terms(self) -> dict[int, int]:
        return {self.off + k: c for k, c in enumerate(self.coeffs) if c}

    def to_pairs(self) -> list[list[int]]:
        return [[e, c] for e, c in sorted(self.terms().items())]

    def coeff(self, exp: int) -> int:
        k = exp - self.off
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def min_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return self.off

    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return self.off + len(self.coeffs) - 1

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def as_monomial(self) -> tuple[int, int]:
        """Return (exponent, coefficient); raises unless a single term."""
        if len(self.coeffs) != 1:
            raise ValueError(f"not a monomial: {self}")
        return self.off, self.coeffs[0]

    def is_unit_monomial(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] in (1, -1)

    def has_even_exponents_only(self) -> bool:
        return all(c == 0 or (self.off + k) % 2 == 0
                   for k, c in enumerate(self.coeffs))

    def is_q_polynomial(self) -> bool:
        """True iff the value lies in Z[q], i.e. even exponents >= 0."""
        return self.is_zero() or (self.off >= 0
                                  and self.has_even_exponents_only())

    def q_degree(self) -> int:
        """Degree in q; requires a nonzero value of Z[q^{±1}]."""
        if not self.has_even_exponents_only():
            raise OddExponentError(f"odd v-exponent present in {self}")
        return self.max_exp() // 2

    def has_nonnegative_coeffs(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly(*_K.add(self.off, self.coeffs,
                                   other.off, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(*_K.neg(self.off, self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly(*_K.mul(self.off, self.coeffs,
                                   other.off, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers: use shift/monomial inverses")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v**k."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.off + k, self.coeffs)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.off == other.off and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.off, self.coeffs))

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r})"

    def __str__(self):
        return format_laurent(self)

    # -- the operations with diagnostic failure modes ----------------

    def bar(self) -> "LaurentPoly":
        """The bar involution v -> v**-1."""
        if not self.coeffs:
            return self
        return LaurentPoly(-(self.off + len(self.coeffs) - 1),
                           tuple(reversed(self.coeffs)))

    def exact_div(self, d: "LaurentPoly") -> "LaurentPoly":
        """Divide by d, requiring exactness in Z[v^{±1}].

        An inexact division raises InexactDivisionError carrying the
        remainder; callers treat that as a convention-violation signal.
        """
        d = _coerce(d)
        if d is NotImplemented or not isinstance(d, LaurentPoly):
            raise TypeError("divisor must be a Laurent polynomial")
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        num = list(self.coeffs)
        den = d.coeffs
        if len(num) < len(den):
            raise InexactDivisionError(
                f"{self} is not divisible by {d}", remainder=self)
        out = [0] * (len(num) - len(den) + 1)
        lead = den[-1]
        for k in range(len(out) - 1, -1, -1):
            c = num[k + len(den) - 1]
            if c % lead != 0:
                rem = LaurentPoly(*_K.add(self.off, tuple(num), 0, ()))
                raise InexactDivisionError(
                    f"{self} is not divisible by {d}", remainder=rem)
            t = c // lead
            out[k] = t
            if t:
                for j, dc in enumerate(den):
                    num[k + j] -= t * dc
        if any(num):
            rem = LaurentPoly(*_K.add(self.off, tuple(num), 0, ()))
            raise InexactDivisionError(
                f"{self} is not divisible by {d}", remainder=rem)
        return LaurentPoly(*_K.add(self.off - d.off, tuple(out), 0, ()))

    def specialize_q(self, c: int):
        """Evaluate at q = c; requires the value to lie in Z[q^{±1}].

        Returns an int when the result is integral, else a Fraction.
        An odd v-exponent raises OddExponentError (a half-twist leak).
        """
        if not self.has_even_exponents_only():
            raise OddExponentError(
                f"odd v-exponent present in {self}; not in Z[q^(+-1)]")
        total = Fraction(0)
        for e, coef in self.terms().items():
            k = e // 2
            if k >= 0:
                total += coef * (c ** k)
            else:
                total += Fraction(coef, c ** (-k))
        if total.denominator == 1:
            return int(total)
        return total


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.from_int(x)
    return NotImplemented


ZERO = LaurentPoly(0, ())
ONE = LaurentPoly(0, (1,))
V = LaurentPoly(1, (1,))
V_INV = LaurentPoly(-1, (1,))
Q = LaurentPoly(2, (1,))
Q_INV = LaurentPoly(-2, (1,))
QM1 = LaurentPoly(0, (-1, 0, 1))  # q - 1


# module-level spellings of the operations, matching the contract surface
def add(p: LaurentPoly, other: LaurentPoly) -> LaurentPoly:
    return p + other


def mul(p: LaurentPoly, other: LaurentPoly) -> LaurentPoly:
    return p * other


def neg(p: LaurentPoly) -> LaurentPoly:
    return -p


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


def exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    return p.exact_div(d)


def specialize_q(p: LaurentPoly, c: int):
    return p.specialize_q(c)


# -- text grammar ----------------------------------------------------
#
#   laurent := term (('+'|'-') term)*
#   term    := int | [int '*'] var ['^' int]
#   var     := 'v' | 'q'            (q expands to v^2)

_TOKEN = re.compile(r"\s*(?:(\d+)|([vq])|(\^)|(\*)|(\+)|(-))")


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the text grammar, e.g. ``3*v^-2 + 1 + q^2``."""
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise GrammarError(f"bad character in polynomial: {text[pos:]!r}")
        pos = m.end()
        for kind, val in enumerate(m.groups()):
            if val is not None:
                toks.append(("int" if kind == 0 else val, val))
                break
    toks.append(("end", ""))

    acc: dict[int, int] = {}
    i = 0

    def peek():
        return toks[i][0]

    def take(kind):
        nonlocal i
        if toks[i][0] != kind:
            raise GrammarError(f"expected {kind} in polynomial: {text!r}")
        tok = toks[i]
        i += 1
        return tok[1]

    def parse_signed_int() -> int:
        nonlocal i
        sign = 1
        while peek() in ("+", "-"):
            if take(peek()) == "-":
                sign = -sign
        return sign * int(take("int"))

    first = True
    while peek() != "end":
        sign = 1
        if peek() in ("+", "-"):
            while peek() in ("+", "-"):
                if take(peek()) == "-":
                    sign = -sign
        elif not first:
            raise GrammarError(f"missing '+' or '-' in polynomial: {text!r}")
        first = False
        coeff = 1
        have_coeff = False
        if peek() == "int":
            coeff = int(take("int"))
            have_coeff = True
            if peek() == "*":
                take("*")
        if peek() in ("v", "q"):
            var = take(peek())
            exp = 1
            if peek() == "^":
                take("^")
                exp = parse_signed_int()
            vexp = exp * (2 if var == "q" else 1)
            acc[vexp] = acc.get(vexp, 0) + sign * coeff
        elif have_coeff:
            acc[0] = acc.get(0, 0) + sign * coeff
        else:
            raise GrammarError(f"dangling sign in polynomial: {text!r}")
    return LaurentPoly.from_terms(acc)


def _term_str(coeff: int, var: str, exp: int) -> str:
    if exp == 0:
        return str(coeff)
    base = var if exp == 1 else f"{var}^{exp}"
    if coeff == 1:
        return base
    if coeff == -1:
        return "-" + base
    return f"{coeff}*{base}"


def format_laurent(p: LaurentPoly) -> str:
    """Canonical text form; uses q whenever every exponent is even."""
    if p.is_zero():
        return "0"
    terms = sorted(p.terms().items(), reverse=True)
    use_q = p.has_even_exponents_only()
    parts = []
    for e, c in terms:
        if use_q:
            parts.append(_term_str(c, "q", e // 2))
        else:
            parts.append(_term_str(c, "v", e))
    out = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            out += " - " + part[1:]
        else:
            out += " + " + part
    return out
