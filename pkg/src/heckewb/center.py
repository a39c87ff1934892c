"""The Bernstein presentation: theta elements, central elements, and the
central lift inverting the averaging map.

theta normalization: theta_lam = v^{-l(t_lam)} T_{t_lam} for dominant
lam, extended multiplicatively to the whole lattice through a dominant
decomposition lam = lam_plus - lam_minus. The decomposition adds the
minimal multiple of a fixed minimal strictly dominant element; theta is
independent of the decomposition (tested), so only determinism matters.

The central element z_lam is the sum of theta over the Weyl orbit of a
dominant lam. The central lift solves pi(sum a_lam z_lam) = c by
back-substitution along dominance order; the Satake matrix is
unitriangular up to monomials, so the solve stays in integer Laurent
polynomials and fails loudly otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import hecke, spherical, weyl
from .errors import (CentralityError, ConventionViolationError,
                     CutoffExceededError, NonDominantError)
from .hecke import HeckeElement
from .ring import LaurentPoly, ONE
from .rootdata import Coweight, RootDatum
from .spherical import SphericalElement

__all__ = [
    "CentralElement",
    "theta",
    "central_element",
    "is_central",
    "central_lift",
    "lift_is_multiplicative",
    "DEFAULT_CUTOFF",
]

DEFAULT_CUTOFF = 6


@dataclass(frozen=True)
class CentralElement:
    """A central Hecke element together with its z-basis label."""

    element: HeckeElement
    label: dict[Coweight, LaurentPoly] = field(default_factory=dict)

    def __eq__(self, other):
        if isinstance(other, CentralElement):
            return self.element == other.element
        return NotImplemented


_THETA_CACHE: dict[tuple[str, Coweight], HeckeElement] = {}
_Z_CACHE: dict[tuple[str, Coweight], HeckeElement] = {}
_PI_Z_CACHE: dict[tuple[str, Coweight], SphericalElement] = {}


def dominant_decomposition(datum: RootDatum, lam: Coweight
                           ) -> tuple[Coweight, Coweight]:
    """lam = plus - minus with both parts dominant; minus is the least
    multiple of the datum's minimal strictly dominant element."""
    lam = tuple(lam)
    delta = datum.delta_plus
    k = 0
    for alpha in datum.simple_roots:
        p = datum.pairing(lam, alpha)
        if p < 0:
            d = datum.pairing(delta, alpha)
            need = (-p + d - 1) // d
            if need > k:
                k = need
    minus = tuple(k * x for x in delta)
    plus = tuple(a + b for a, b in zip(lam, minus))
    return plus, minus


def theta(datum: RootDatum, lam: Coweight) -> HeckeElement:
    """The Bernstein element theta_lam; multiplicative in lam."""
    lam = tuple(lam)
    key = (datum.label, lam)
    cached = _THETA_CACHE.get(key)
    if cached is not None:
        return cached
    if datum.is_dominant(lam):
        t = weyl.translation_element(datum, lam)
        out = hecke.basis(t, LaurentPoly.monomial(-t.length()))
    else:
        plus, minus = dominant_decomposition(datum, lam)
        tplus = weyl.translation_element(datum, plus)
        tminus = weyl.translation_element(datum, minus)
        out = hecke.basis(tplus).scale(
            LaurentPoly.monomial(tminus.length() - tplus.length()))
        out = out * hecke.invert_basis(tminus)
    _THETA_CACHE[key] = out
    return out


def central_element(datum: RootDatum, lam: Coweight,
                    verify: bool = True) -> CentralElement:
    """z_lam: the orbit sum of theta over the Weyl orbit of dominant lam.

    With verify on, centrality is checked against every generator at
    construction; a failure is an internal-consistency error.
    """
    lam = tuple(lam)
    if not datum.is_dominant(lam):
        raise NonDominantError(f"{lam} is not dominant")
    key = (datum.label, lam)
    z = _Z_CACHE.get(key)
    if z is None:
        z = HeckeElement(datum, {})
        for mu in sorted(datum.weyl_orbit(lam)):
            z = z + theta(datum, mu)
        _Z_CACHE[key] = z
    if verify and not is_central(z):
        raise CentralityError(
            f"z_{lam} over {datum.label} failed the centrality check; "
            "this indicates an implementation bug")
    return CentralElement(z, {lam: ONE})


def is_central(h: HeckeElement, cutoff: int | None = None) -> bool:
    """True iff h commutes with every T_{s_i} and every T_omega.

    Commuting with the generators suffices for centrality. When a cutoff
    is given, additionally brute-check against every T_x of length at
    most the cutoff (identity winding class).
    """
    datum = h.datum
    for i in range(datum.rank + 1):
        if (hecke._rmul_gen(datum, h.terms, i)
                != hecke._lmul_gen(datum, h.terms, i)):
            return False
    if datum.is_gl:
        if (hecke._rmul_omega(datum, h.terms, 1)
                != hecke._lmul_omega(datum, h.terms, 1)):
            return False
    if cutoff is not None:
        for shell in weyl.elements_up_to_length(datum, cutoff):
            for x in shell:
                if not hecke.commutator_is_zero(h, hecke.basis(x)):
                    return False
    return True


def _pi_z(datum: RootDatum, lam: Coweight) -> SphericalElement:
    key = (datum.label, lam)
    cached = _PI_Z_CACHE.get(key)
    if cached is None:
        cached = spherical.pi_map(central_element(datum, lam,
                                                  verify=False).element)
        _PI_Z_CACHE[key] = cached
    return cached


def central_lift(c: SphericalElement,
                 cutoff: int = DEFAULT_CUTOFF) -> CentralElement:
    """The central element mapping to c under the averaging map.

    Solved by back-substitution along dominance order: pick a dominance-
    maximal coweight in the residual support, divide by the (monomial)
    diagonal Satake entry, subtract, repeat. A non-monomial diagonal
    flags convention breakage.
    """
    datum = c.datum
    for lam in c.terms:
        if datum.translation_length(lam) > cutoff:
            raise CutoffExceededError(
                f"support coweight {lam} has translation length "
                f"{datum.translation_length(lam)} > cutoff {cutoff}")
    residual = c
    label: dict[Coweight, LaurentPoly] = {}
    out = HeckeElement(datum, {})
    while not residual.is_zero():
        lam = _dominance_maximal(datum, list(residual.terms))
        diag = _pi_z(datum, lam).terms.get(lam)
        if diag is None or not diag.is_unit_monomial():
            raise ConventionViolationError(
                f"Satake diagonal entry at {lam} is "
                f"{diag}; expected a unit monomial")
        e, cf = diag.as_monomial()
        a = residual.terms[lam] * LaurentPoly.monomial(-e, cf)
        label[lam] = a
        out = out + central_element(datum, lam, verify=False).element.scale(a)
        residual = residual - _pi_z(datum, lam).scale(a)
        if lam in residual.terms:
            raise ConventionViolationError(
                f"triangular solve failed to clear the {lam} entry")
    return CentralElement(out, label)


def _dominance_maximal(datum: RootDatum, lams: list[Coweight]) -> Coweight:
    def beats(mu, lam):
        return (mu != lam
                and datum.component_of(mu) == datum.component_of(lam)
                and datum.dominance_leq(lam, mu))

    candidates = [lam for lam in lams
                  if not any(beats(mu, lam) for mu in lams)]
    return max(candidates,
               key=lambda t: (datum.translation_length(t), t))


def lift_is_multiplicative(datum: RootDatum, lam: Coweight, mu: Coweight,
                           cutoff: int = DEFAULT_CUTOFF
                           ) -> tuple[bool, HeckeElement]:
    """Check lift(m_lam * m_mu) == lift(m_lam) lift(m_mu); returns the
    boolean together with the difference for diagnostics."""
    conv = spherical.sph_conv(spherical.m(datum, lam),
                              spherical.m(datum, mu), cutoff=cutoff)
    lhs = central_lift(conv, cutoff=cutoff).element
    rhs = (central_lift(spherical.m(datum, lam), cutoff=cutoff).element
           * central_lift(spherical.m(datum, mu), cutoff=cutoff).element)
    diff = lhs - rhs
    return diff.is_zero(), diff
