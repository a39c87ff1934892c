"""The extended affine Weyl group: translations semidirect the finite
Weyl group.

Elements are kept in (translation, finite part) normal form: the finite
part is the integer matrix of its action on coweights. Multiplication is
the semidirect-product law and costs O(rank) work; reduced words are
derived on demand by descent stripping and cached per datum (idempotent
dict writes, safe under concurrent readers).

Letter numbering: ``s0`` is the affine reflection (translation by the
highest coroot composed with the reflection in the highest root);
``s1..sr`` are the finite simple reflections. Length-0 elements are the
powers of the winding generator ``omega`` (GLn only; trivial for the
simply-connected series).

Text form: ``w[s0.s1]*omega^k`` denotes (s0 s1) * omega**k, with
``w[e]`` for the identity and the omega factor omitted when k = 0.

>>> d = build_datum("A1-sc")
>>> s0, s1 = simple_reflection(d, 0), simple_reflection(d, 1)
>>> (s0 * s1).length()
2
>>> format_weyl(s0 * s1 * s0)
'w[s0.s1.s0]'
>>> t = translation_element(d, (1,))
>>> reduced_word(t)[1]
(0, 1)
"""

from __future__ import annotations

import re

from .errors import (DatumMismatchError, GrammarError, NonDominantError,
                     UnsupportedDatumError)
from .rootdata import Coweight, RootDatum, build_datum

__all__ = [
    "AffineWeylElement",
    "identity",
    "simple_reflection",
    "translation_element",
    "omega_power",
    "finite_element",
    "from_word",
    "multiply",
    "length",
    "reduced_word",
    "is_descent",
    "is_left_descent",
    "bruhat_leq",
    "double_coset",
    "coset_elements",
    "finite_weyl_elements",
    "elements_up_to_length",
    "format_weyl",
    "parse_weyl",
]


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


class AffineWeylElement:
    """One element of the extended affine Weyl group, in normal form."""

    __slots__ = ("datum", "tr", "mat", "_hash", "_len", "_inv")

    def __init__(self, datum: RootDatum, tr: Coweight, mat):
        self.datum = datum
        self.tr = tr
        self.mat = mat
        self._hash = hash((tr, mat))
        self._len = -1
        self._inv = None

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        if other.datum is not self.datum:
            raise DatumMismatchError(
                f"cannot multiply elements over {self.datum.label} "
                f"and {other.datum.label}")
        m = self.mat
        tr = tuple(a + b for a, b in
                   zip(self.tr, (_dot(row, other.tr) for row in m)))
        cols = tuple(zip(*other.mat))
        mat = tuple(tuple(_dot(row, col) for col in cols) for row in m)
        return AffineWeylElement(self.datum, tr, mat)

    def inverse(self) -> "AffineWeylElement":
        if self._inv is None:
            minv = self.datum.wf_inverse[self.mat]
            tr = tuple(-_dot(row, self.tr) for row in minv)
            inv = AffineWeylElement(self.datum, tr, minv)
            inv._len = self._len
            inv._inv = self
            self._inv = inv
        return self._inv

    def apply(self, coweight: Coweight) -> Coweight:
        """Act on a coweight: translation after the finite part."""
        return tuple(a + _dot(row, coweight)
                     for a, row in zip(self.tr, self.mat))

    def length(self) -> int:
        """Iwahori-Matsumoto length, cached per instance."""
        if self._len < 0:
            d = self.datum
            total = 0
            for alpha in d.positive_roots:
                p = _dot(alpha, self.tr)
                # alpha composed with the finite part, as a root vector
                back = tuple(
                    sum(alpha[k] * self.mat[k][j] for k in range(len(alpha)))
                    for j in range(len(alpha)))
                if _dot(back, d._probe) > 0:
                    total += abs(p)
                else:
                    total += abs(p - 1)
            self._len = total
        return self._len

    def component(self) -> int:
        return self.datum.component_of(self.tr)

    def is_identity(self) -> bool:
        return not any(self.tr) and self.mat == _ctx(self.datum).ident_mat

    def finite_word(self) -> tuple[int, ...]:
        """Reduced word of the finite part, in affine letter numbering."""
        return tuple(i + 1 for i in self.datum.wf_words[self.mat])

    def sort_key(self):
        return (self.length(), self.component(), self.tr,
                tuple(x for row in self.mat for x in row))

    def __eq__(self, other):
        return (isinstance(other, AffineWeylElement)
                and self.tr == other.tr and self.mat == other.mat)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"<{format_weyl(self)} over {self.datum.label}>"


class _Ctx:
    """Per-datum caches for the group machinery."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.ident_mat = tuple(
            tuple(1 if i == j else 0 for j in range(datum.dim))
            for i in range(datum.dim))
        zero = tuple(0 for _ in range(datum.dim))
        self.identity = AffineWeylElement(datum, zero, self.ident_mat)
        # finite reflection matrices, indexed by finite index 0..rank-1
        fin = []
        for i in range(datum.rank):
            alpha = datum.simple_roots[i]
            cov = datum.simple_coroots[i]
            fin.append(tuple(
                tuple((1 if k == j else 0) - alpha[j] * cov[k]
                      for j in range(datum.dim))
                for k in range(datum.dim)))
        # affine letter i: 0 -> t_{theta^vee} s_theta, i>=1 -> finite s_{i-1}
        theta, thetav = datum.highest_root, datum.highest_coroot
        s_theta = tuple(
            tuple((1 if k == j else 0) - theta[j] * thetav[k]
                  for j in range(datum.dim))
            for k in range(datum.dim))
        self.simples = (AffineWeylElement(datum, thetav, s_theta),) + tuple(
            AffineWeylElement(datum, zero, m) for m in fin)
        # affine simple roots as (root vector, constant) pairs
        self.affine_roots = ((tuple(-x for x in theta), 1),) + tuple(
            (datum.simple_roots[i], 0) for i in range(datum.rank))
        self.omega_cache: dict[int, AffineWeylElement] = {0: self.identity}
        if datum.is_gl:
            self.omega_cache[1] = AffineWeylElement(
                datum, datum.omega_tr, datum.omega_mat)
        self.rw_cache: dict[AffineWeylElement, tuple] = {}
        self.coset_cache: dict[Coweight, tuple] = {}
        # value-keyed caches for the hot generator actions; writes are
        # idempotent, so concurrent readers are safe
        self.mulgen_cache: dict[tuple, AffineWeylElement] = {}
        self.descent_cache: dict[tuple, bool] = {}


_CONTEXTS: dict[str, _Ctx] = {}


def _ctx(datum: RootDatum) -> _Ctx:
    ctx = _CONTEXTS.get(datum.label)
    if ctx is None:
        ctx = _Ctx(datum)
        _CONTEXTS[datum.label] = ctx
    return ctx


# -- constructors ----------------------------------------------------

def identity(datum: RootDatum) -> AffineWeylElement:
    return _ctx(datum).identity


def simple_reflection(datum: RootDatum, i: int) -> AffineWeylElement:
    """The affine simple reflection s_i, 0 <= i <= rank."""
    simples = _ctx(datum).simples
    if not 0 <= i < len(simples):
        raise GrammarError(f"no simple reflection s{i} over {datum.label}")
    return simples[i]


def translation_element(datum: RootDatum, coweight: Coweight
                        ) -> AffineWeylElement:
    return AffineWeylElement(datum, tuple(coweight), _ctx(datum).ident_mat)


def finite_element(datum: RootDatum, mat) -> AffineWeylElement:
    zero = tuple(0 for _ in range(datum.dim))
    return AffineWeylElement(datum, zero, mat)


def omega_power(datum: RootDatum, k: int) -> AffineWeylElement:
    """The length-0 representative of winding class k."""
    ctx = _ctx(datum)
    if not datum.is_gl:
        if k != 0:
            raise UnsupportedDatumError(
                f"{datum.label} has trivial fundamental group; "
                "omega^k is only defined for k = 0")
        return ctx.identity
    if k in ctx.omega_cache:
        return ctx.omega_cache[k]
    if k > 0:
        ctx.omega_cache[k] = omega_power(datum, k - 1) * ctx.omega_cache[1]
    else:
        ctx.omega_cache[k] = omega_power(datum, k + 1) * ctx.omega_cache[1].inverse()
    return ctx.omega_cache[k]


def finite_weyl_elements(datum: RootDatum) -> tuple[AffineWeylElement, ...]:
    return tuple(finite_element(datum, m) for m in datum.wf_mats)


def from_word(datum: RootDatum, omega_k: int, letters) -> AffineWeylElement:
    """omega**k times the product of the given simple reflections."""
    x = omega_power(datum, omega_k)
    for i in letters:
        x = x * simple_reflection(datum, i)
    return x


# -- the group-combinatorics operations -------------------------------

def multiply(x: AffineWeylElement, y: AffineWeylElement) -> AffineWeylElement:
    return x * y


def length(x: AffineWeylElement) -> int:
    return x.length()


def is_descent(x: AffineWeylElement, i: int) -> bool:
    """True iff length(x * s_i) < length(x).

    Computed through the action on affine roots, never through words:
    (root, k) maps to (u root, k - <tr, u root>) for x with finite part
    u, and a descent is exactly a negative image of the i-th affine
    simple root. Cached per datum.
    """
    ctx = _ctx(x.datum)
    key = (x, i)
    r = ctx.descent_cache.get(key)
    if r is None:
        alpha, k = ctx.affine_roots[i]
        minv = x.datum.wf_inverse[x.mat]
        dim = len(alpha)
        back = tuple(sum(alpha[r] * minv[r][j] for r in range(dim))
                     for j in range(dim))
        knew = k - _dot(back, x.tr)
        if knew != 0:
            r = knew < 0
        else:
            r = _dot(back, x.datum._probe) < 0
        ctx.descent_cache[key] = r
    return r


def mul_gen(x: AffineWeylElement, i: int) -> AffineWeylElement:
    """x * s_i with the result (and its length) cached per datum."""
    ctx = _ctx(x.datum)
    key = (x, i)
    r = ctx.mulgen_cache.get(key)
    if r is None:
        r = x * ctx.simples[i]
        if x._len >= 0:
            r._len = x._len + (-1 if is_descent(x, i) else 1)
        ctx.mulgen_cache[key] = r
    return r


def is_left_descent(x: AffineWeylElement, i: int) -> bool:
    """True iff length(s_i * x) < length(x)."""
    return is_descent(x.inverse(), i)


def first_descent(x: AffineWeylElement) -> int:
    for i in range(x.datum.rank + 1):
        if is_descent(x, i):
            return i
    return -1


def reduced_word(x: AffineWeylElement):
    """Return (omega_part, letters) with x = omega_part * prod(s_i).

    Greedy descent stripping from the right; the omega part is the
    length-0 remainder. Cached per datum.
    """
    ctx = _ctx(x.datum)
    cached = ctx.rw_cache.get(x)
    if cached is not None:
        return cached
    letters = []
    y = x
    while True:
        i = first_descent(y)
        if i < 0:
            break
        letters.append(i)
        y = mul_gen(y, i)
    result = (y, tuple(reversed(letters)))
    ctx.rw_cache[x] = result
    return result


def bruhat_leq(y: AffineWeylElement, x: AffineWeylElement) -> bool:
    """Bruhat order; elements of different winding classes are
    incomparable (compare after stripping omega)."""
    if y.datum is not x.datum:
        raise DatumMismatchError("elements over different data")
    if y.component() != x.component():
        return False
    lx, ly = x.length(), y.length()
    if ly > lx:
        return False
    while lx > 0:
        if ly > lx:
            return False
        i = first_descent(x)
        if is_descent(y, i):
            y = mul_gen(y, i)
            ly -= 1
        x = mul_gen(x, i)
        lx -= 1
    return y == x


def double_coset(x: AffineWeylElement) -> Coweight:
    """The dominant coweight indexing the finite-Weyl double coset of x."""
    return x.datum.dominant_rep(x.tr)


def coset_elements(datum: RootDatum, lam: Coweight
                   ) -> tuple[AffineWeylElement, ...]:
    """All elements of the double coset of t_lam, for dominant lam,
    sorted by (length, normal form)."""
    lam = tuple(lam)
    if not datum.is_dominant(lam):
        raise NonDominantError(f"{lam} is not dominant")
    ctx = _ctx(datum)
    cached = ctx.coset_cache.get(lam)
    if cached is not None:
        return cached
    out = []
    for mu in sorted(datum.weyl_orbit(lam)):
        for mat in datum.wf_mats:
            out.append(AffineWeylElement(datum, mu, mat))
    result = tuple(sorted(out, key=AffineWeylElement.sort_key))
    ctx.coset_cache[lam] = result
    return result


def elements_up_to_length(datum: RootDatum, cutoff: int, component: int = 0
                          ) -> list[list[AffineWeylElement]]:
    """Shells of elements of a fixed winding class, indexed by length."""
    start = omega_power(datum, component)
    shells = [[start]]
    seen = {start}
    for _ in range(cutoff):
        nxt = []
        for x in shells[-1]:
            for i in range(datum.rank + 1):
                if not is_descent(x, i):
                    y = mul_gen(x, i)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
        nxt.sort(key=AffineWeylElement.sort_key)
        shells.append(nxt)
    return shells


# -- text form ---------------------------------------------------------

_WEYL_RE = re.compile(
    r"^\s*w\[\s*([^\]]*?)\s*\]\s*(?:\*\s*omega\^(-?\d+)\s*)?$")


def format_weyl(x: AffineWeylElement) -> str:
    k = x.component()
    body = x * omega_power(x.datum, -k) if k else x
    _, letters = reduced_word(body)
    word = ".".join(f"s{i}" for i in letters) if letters else "e"
    out = f"w[{word}]"
    if k:
        out += f"*omega^{k}"
    return out


def _parse_letters(word: str, what: str):
    if word == "e":
        return ()
    letters = []
    for tok in word.split("."):
        m = re.fullmatch(r"s(\d+)", tok.strip())
        if not m:
            raise GrammarError(f"bad letter {tok!r} in {what}")
        letters.append(int(m.group(1)))
    return tuple(letters)


def parse_weyl(datum: RootDatum, text: str) -> AffineWeylElement:
    """Parse ``w[s0.s1]*omega^k`` back to an element."""
    m = _WEYL_RE.match(text)
    if not m:
        raise GrammarError(f"bad group element: {text!r}")
    letters = _parse_letters(m.group(1), "group element")
    k = int(m.group(2)) if m.group(2) else 0
    x = identity(datum)
    for i in letters:
        x = x * simple_reflection(datum, i)
    return x * omega_power(datum, k)
