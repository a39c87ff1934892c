"""Root data: finite root systems, coweight lattices, finite Weyl groups.

Coordinates. A coweight is an integer tuple in a fixed basis of the
cocharacter lattice: the simple-coroot basis for the simply-connected
series (A1-sc, A2-sc, C2-sc, G2-sc), the standard basis of Z**n for GLn.
A root is stored as the integer vector of its pairings against that
basis, so ``pairing(coweight, root)`` is a plain dot product.

Everything on a RootDatum is computed once at construction and the
object is immutable afterwards, so data can be shared freely between
threads. ``build_datum`` interns one instance per label.

>>> d = build_datum("GL2")
>>> len(d.positive_roots)
1
>>> weyl_orbit(d, (1, 0)) == {(1, 0), (0, 1)}
True
>>> translation_length(d, (1, 0))
1
"""

from __future__ import annotations

import functools
import hashlib
from fractions import Fraction

from .errors import NonDominantError, UnsupportedDatumError

__all__ = [
    "Coweight",
    "RootDatum",
    "SUPPORTED_LABELS",
    "build_datum",
    "weyl_orbit",
    "dominance_leq",
    "translation_length",
]

# a coweight: integer coordinates in the cocharacter-lattice basis
Coweight = tuple[int, ...]

_SC_CARTAN = {
    "A1-sc": ((2,),),
    "A2-sc": ((2, -1), (-1, 2)),
    "C2-sc": ((2, -1), (-2, 2)),
    "G2-sc": ((2, -1), (-3, 2)),
}
_GL_RANKS = {"GL2": 2, "GL3": 3}
SUPPORTED_LABELS = ("A1-sc", "A2-sc", "C2-sc", "G2-sc", "GL2", "GL3")
_EXPECTED_POSITIVE = {
    "A1-sc": 1, "A2-sc": 3, "C2-sc": 4, "G2-sc": 6, "GL2": 1, "GL3": 3,
}


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _mat_vec(m, v):
    return tuple(_dot(row, v) for row in m)


def _mat_mul(a, b):
    n = len(b)
    cols = tuple(zip(*b))
    return tuple(tuple(_dot(row, col) for col in cols) for row in a)


def _vec_mat(v, m):
    """Row vector times matrix: the X^* action used on roots."""
    return tuple(sum(v[k] * m[k][j] for k in range(len(v)))
                 for j in range(len(m[0])))


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n))
                 for i in range(n))


class RootDatum:
    """Immutable container for one supported root datum.

    Not constructed directly; use :func:`build_datum`.
    """

    def __init__(self, label: str):
        if label not in SUPPORTED_LABELS:
            raise UnsupportedDatumError(
                f"unsupported datum {label!r}; supported labels are "
                + ", ".join(SUPPORTED_LABELS))
        self.label = label
        if label in _SC_CARTAN:
            self.cartan = _SC_CARTAN[label]
            self.rank = len(self.cartan)
            self.dim = self.rank
            # simple root i pairs with coroot-basis vector e_j as cartan[i][j]
            self.simple_roots = tuple(tuple(row) for row in self.cartan)
            self.simple_coroots = tuple(
                tuple(1 if i == j else 0 for j in range(self.dim))
                for i in range(self.rank))
            self.is_gl = False
            self.gl_n = 0
        else:
            n = _GL_RANKS[label]
            self.gl_n = n
            self.is_gl = True
            self.rank = n - 1
            self.dim = n
            self.simple_roots = tuple(
                tuple(1 if j == i else (-1 if j == i + 1 else 0)
                      for j in range(n))
                for i in range(self.rank))
            self.simple_coroots = self.simple_roots
            self.cartan = tuple(
                tuple(_dot(self.simple_roots[i], self.simple_coroots[j])
                      for j in range(self.rank))
                for i in range(self.rank))

        self._probe = self._build_probe()
        self.positive_roots, self.positive_coroots = self._generate_roots()
        self._pos_root_set = frozenset(self.positive_roots)
        self.highest_root, self.highest_coroot = max(
            zip(self.positive_roots, self.positive_coroots),
            key=lambda rc: _dot(rc[0], self._probe))
        self.delta_plus = self._minimal_strictly_dominant()
        (self.wf_mats, self.wf_words, self.wf_lengths,
         self.wf_inverse) = self._enumerate_finite_weyl()
        self.longest_length = max(self.wf_lengths.values())
        if self.is_gl:
            # the winding generator: translation by e_1 composed with the
            # cyclic coordinate shift; a length-0 element of W_ext
            n = self.gl_n
            self.omega_mat = tuple(
                tuple(1 if j == (i - 1) % n else 0 for j in range(n))
                for i in range(n))
            self.omega_tr = tuple(1 if i == 0 else 0 for i in range(n))
        else:
            self.omega_mat = None
            self.omega_tr = None
        self._validate()
        self.fingerprint = self._fingerprint()

    # -- construction helpers ----------------------------------------

    def _build_probe(self) -> tuple[int, ...]:
        """An integer vector pairing strictly positively with every
        simple root; used to decide root positivity."""
        if self.is_gl:
            n = self.gl_n
            return tuple(n - 1 - i for i in range(n))
        # solve cartan^T-free: rows are the simple roots; want dot = 1
        n = self.dim
        rows = [[Fraction(x) for x in r] + [Fraction(1)]
                for r in self.simple_roots]
        for col in range(n):
            piv = next(r for r in range(col, n) if rows[r][col] != 0)
            rows[col], rows[piv] = rows[piv], rows[col]
            pivval = rows[col][col]
            rows[col] = [x / pivval for x in rows[col]]
            for r in range(n):
                if r != col and rows[r][col] != 0:
                    f = rows[r][col]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
        sol = [rows[i][n] for i in range(n)]
        lcm = 1
        for x in sol:
            lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
        return tuple(int(x * lcm) for x in sol)

    def _generate_roots(self):
        pairs = {(self.simple_roots[i], self.simple_coroots[i])
                 for i in range(self.rank)}
        frontier = set(pairs)
        while frontier:
            new = set()
            for root, coroot in frontier:
                for i in range(self.rank):
                    r2 = tuple(
                        a - _dot(root, self.simple_coroots[i]) * b
                        for a, b in zip(root, self.simple_roots[i]))
                    c2 = tuple(
                        a - _dot(self.simple_roots[i], coroot) * b
                        for a, b in zip(coroot, self.simple_coroots[i]))
                    if (r2, c2) not in pairs:
                        pairs.add((r2, c2))
                        new.add((r2, c2))
            frontier = new
        pos = sorted((rc for rc in pairs if _dot(rc[0], self._probe) > 0),
                     key=lambda rc: (_dot(rc[0], self._probe), rc[0]))
        return (tuple(r for r, _ in pos), tuple(c for _, c in pos))

    def _minimal_strictly_dominant(self) -> Coweight:
        """The strictly dominant lattice element of minimal translation
        length (ties broken by coordinates); drives the dominant
        decomposition of arbitrary coweights."""
        if self.is_gl:
            n = self.gl_n
            return tuple(n - 1 - i for i in range(n))
        best = None
        bound = 1
        while best is None:
            for coords in _box(self.dim, bound):
                if all(_dot(a, coords) > 0 for a in self.simple_roots):
                    key = (self.translation_length(coords), coords)
                    if best is None or key < best:
                        best = key
            bound += 1
        return best[1]

    def _enumerate_finite_weyl(self):
        gens = []
        for i in range(self.rank):
            alpha = self.simple_roots[i]
            cov = self.simple_coroots[i]
            gens.append(tuple(
                tuple((1 if k == j else 0) - alpha[j] * cov[k]
                      for j in range(self.dim))
                for k in range(self.dim)))
        ident = _identity(self.dim)
        words = {ident: ()}
        lengths = {ident: 0}
        shell = [ident]
        order = [ident]
        depth = 0
        while shell:
            depth += 1
            nxt = []
            for m in shell:
                for i, g in enumerate(gens):
                    m2 = _mat_mul(m, g)
                    if m2 not in words:
                        words[m2] = words[m] + (i,)
                        lengths[m2] = depth
                        nxt.append(m2)
                        order.append(m2)
            shell = nxt
        inverse = {}
        mats = tuple(order)
        for m in mats:
            for m2 in mats:
                if _mat_mul(m, m2) == ident:
                    inverse[m] = m2
                    break
        return mats, words, lengths, inverse

    def _validate(self):
        for i in range(self.rank):
            if self.cartan[i][i] != 2:
                raise AssertionError("Cartan diagonal must be 2")
            for j in range(self.rank):
                if i != j and self.cartan[i][j] > 0:
                    raise AssertionError("Cartan off-diagonal must be <= 0")
        for root, coroot in zip(self.positive_roots, self.positive_coroots):
            if _dot(root, coroot) != 2:
                raise AssertionError("<coroot, root> must equal 2")
        if len(self.positive_roots) != _EXPECTED_POSITIVE[self.label]:
            raise AssertionError(
                f"{self.label}: expected {_EXPECTED_POSITIVE[self.label]} "
                f"positive roots, generated {len(self.positive_roots)}")

    def _fingerprint(self) -> str:
        blob = repr((self.label, self.cartan, self.positive_roots,
                     self.positive_coroots, self.simple_coroots)).encode()
        return hashlib.sha256(blob).hexdigest()[:16]

    # -- the lattice/Weyl primitives ----------------------------------

    def pairing(self, coweight: Coweight, root) -> int:
        return _dot(root, coweight)

    def root_is_positive(self, root) -> bool:
        return _dot(root, self._probe) > 0

    def reflect(self, coweight: Coweight, i: int) -> Coweight:
        """Apply the i-th simple reflection (0-based finite index)."""
        c = _dot(self.simple_roots[i], coweight)
        return tuple(a - c * b
                     for a, b in zip(coweight, self.simple_coroots[i]))

    def is_dominant(self, coweight: Coweight) -> bool:
        return all(_dot(a, coweight) >= 0 for a in self.simple_roots)

    def dominant_rep(self, coweight: Coweight) -> Coweight:
        lam = tuple(coweight)
        while True:
            for i in range(self.rank):
                if _dot(self.simple_roots[i], lam) < 0:
                    lam = self.reflect(lam, i)
                    break
            else:
                return lam

    def weyl_orbit(self, coweight: Coweight) -> set[Coweight]:
        seen = {tuple(coweight)}
        frontier = [tuple(coweight)]
        while frontier:
            nxt = []
            for lam in frontier:
                for i in range(self.rank):
                    mu = self.reflect(lam, i)
                    if mu not in seen:
                        seen.add(mu)
                        nxt.append(mu)
            frontier = nxt
        return seen

    def translation_length(self, coweight: Coweight) -> int:
        return sum(abs(_dot(a, coweight)) for a in self.positive_roots)

    def component_of(self, coweight: Coweight) -> int:
        """Class of the coweight in the lattice modulo the coroot
        lattice: 0 for the simply-connected series, the coordinate sum
        (winding number) for GLn."""
        if self.is_gl:
            return sum(coweight)
        return 0

    def dominance_leq(self, lam: Coweight, mu: Coweight) -> bool:
        """True iff mu - lam is a nonnegative integer combination of
        positive coroots; both arguments must be dominant."""
        if not self.is_dominant(lam):
            raise NonDominantError(f"{lam} is not dominant")
        if not self.is_dominant(mu):
            raise NonDominantError(f"{mu} is not dominant")
        diff = tuple(b - a for a, b in zip(lam, mu))
        if self.is_gl:
            if sum(diff) != 0:
                return False
            partial = 0
            for x in diff[:-1]:
                partial += x
                if partial < 0:
                    return False
            return True
        # simply connected: coordinates are simple-coroot coefficients
        return all(x >= 0 for x in diff)

    def poincare_terms(self) -> list[int]:
        """Length multiset of the finite Weyl group, as q-coefficients."""
        out = [0] * (self.longest_length + 1)
        for length in self.wf_lengths.values():
            out[length] += 1
        return out

    # -- identity ------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, RootDatum) and other.label == self.label

    def __hash__(self):
        return hash(self.label)

    def __repr__(self):
        return f"RootDatum({self.label!r})"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _box(dim, bound):
    if dim == 1:
        for x in range(-bound, bound + 1):
            yield (x,)
        return
    for rest in _box(dim - 1, bound):
        for x in range(-bound, bound + 1):
            yield (x,) + rest


@functools.lru_cache(maxsize=None)
def build_datum(label: str) -> RootDatum:
    """Return the interned root datum for a supported label."""
    return RootDatum(label)


def weyl_orbit(datum: RootDatum, coweight: Coweight) -> set[Coweight]:
    return datum.weyl_orbit(tuple(coweight))


def dominance_leq(datum: RootDatum, lam: Coweight, mu: Coweight) -> bool:
    return datum.dominance_leq(tuple(lam), tuple(mu))


def translation_length(datum: RootDatum, coweight: Coweight) -> int:
    return datum.translation_length(tuple(coweight))
