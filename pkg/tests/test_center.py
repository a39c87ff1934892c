import itertools

import pytest

import heckewb.center as ct
import heckewb.hecke as hk
import heckewb.spherical as sp
import heckewb.weyl as wl
from heckewb.errors import NonDominantError
from heckewb.ring import LaurentPoly, ONE, parse_laurent
from heckewb.rootdata import build_datum

A1 = build_datum("A1-sc")
GL2 = build_datum("GL2")
A2 = build_datum("A2-sc")


def T(datum, *letters, omega=0):
    return hk.basis(wl.from_word(datum, omega, letters))


def test_theta_zero_is_unit():
    for d in (A1, GL2, A2):
        zero = tuple(0 for _ in range(d.dim))
        assert ct.theta(d, zero) == hk.unit(d)


def test_theta_dominant_is_normalized_translation():
    t = wl.translation_element(A1, (1,))
    assert ct.theta(A1, (1,)) \
        == hk.basis(t, LaurentPoly.monomial(-2))


def test_theta_antidominant_expands_the_basis_inverse():
    # theta_{-alpha} = v^2 (T_{t_alpha})^{-1}; top term the opposite
    # translation, all other support strictly shorter
    th = ct.theta(A1, (-1,))
    t = wl.translation_element(A1, (1,))
    assert th == hk.invert_basis(t).scale(LaurentPoly.monomial(2))
    tneg = wl.translation_element(A1, (-1,))
    assert tneg in th.terms
    for w in th.terms:
        assert w == tneg or w.length() < tneg.length()


def test_theta_is_decomposition_independent():
    # adding extra dominant ballast to both sides must not change theta
    for d, lam in [(A1, (-1,)), (GL2, (0, 1)), (A2, (-1, 1))]:
        th = ct.theta(d, lam)
        for extra in (1, 2):
            ballast = tuple(extra * x for x in d.delta_plus)
            plus = tuple(a + b for a, b in zip(lam, ballast))
            plus, minus = ct.dominant_decomposition(d, plus)
            minus = tuple(a + b for a, b in zip(minus, ballast))
            plus_elt = wl.translation_element(d, plus)
            minus_elt = wl.translation_element(d, minus)
            alt = hk.basis(plus_elt).scale(LaurentPoly.monomial(
                minus_elt.length() - plus_elt.length())) \
                * hk.invert_basis(minus_elt)
            assert alt == th


@pytest.mark.parametrize("datum,rng", [
    (A1, [(k,) for k in range(-3, 4)]),
    (GL2, [(a, b) for a in range(-2, 3) for b in range(-2, 3)]),
])
def test_theta_multiplicativity(datum, rng):
    for lam, mu in itertools.product(rng, rng):
        s = tuple(a + b for a, b in zip(lam, mu))
        assert ct.theta(datum, lam) * ct.theta(datum, mu) \
            == ct.theta(datum, s)
        assert ct.theta(datum, lam) * ct.theta(datum, mu) \
            == ct.theta(datum, mu) * ct.theta(datum, lam)


def test_theta_multiplicativity_rank2_sample():
    rng = [(-1, 0), (0, -1), (1, 1), (2, -1), (0, 0)]
    for lam, mu in itertools.product(rng, rng):
        s = tuple(a + b for a, b in zip(lam, mu))
        assert ct.theta(A2, lam) * ct.theta(A2, mu) == ct.theta(A2, s)


def test_central_element_examples():
    zero = ct.central_element(A1, (0,))
    assert zero.element == hk.unit(A1)

    z = ct.central_element(GL2, (1, 0))
    # frozen from the symmetrization oracle: theta_(1,0) + theta_(0,1)
    expected = (T(GL2, 1, omega=1).scale(parse_laurent("v^-1"))
                + T(GL2, 0, omega=1).scale(parse_laurent("v^-1"))
                + T(GL2, omega=1).scale(parse_laurent("v^-1 - v")))
    assert z.element == expected
    assert z.element == ct.theta(GL2, (1, 0)) + ct.theta(GL2, (0, 1))


def test_central_element_requires_dominant():
    with pytest.raises(NonDominantError):
        ct.central_element(GL2, (0, 1))


def test_is_central_examples():
    assert ct.is_central(hk.unit(A1))
    assert not ct.is_central(T(A1, 0))
    z = ct.central_element(A1, (1,), verify=False).element
    assert ct.is_central(z)
    assert ct.is_central(z, cutoff=4)  # brute-force depth agrees


@pytest.mark.parametrize(
    "label", ["A1-sc", "GL2", "A2-sc", "C2-sc", "G2-sc", "GL3"])
def test_z_central_up_to_cutoff(label):
    d = build_datum(label)
    for lam in sp.dominant_coweights(d, 6):
        z = ct.central_element(d, lam, verify=False).element
        assert ct.is_central(z), lam


def test_center_is_commutative():
    doms = sp.dominant_coweights(A2, 6)
    for lam, mu in itertools.combinations(doms, 2):
        za = ct.central_element(A2, lam, verify=False).element
        zb = ct.central_element(A2, mu, verify=False).element
        assert hk.commutator_is_zero(za, zb)


def test_central_lift_of_unit():
    lift = ct.central_lift(sp.m(A1, (0,)))
    assert lift.element == hk.unit(A1)
    assert lift.label == {(0,): ONE}


def test_central_lift_minuscule_is_monomial_twist_of_z():
    lift = ct.central_lift(sp.m(GL2, (1, 0)))
    z = ct.central_element(GL2, (1, 0)).element
    assert lift.element == z.scale(LaurentPoly.monomial(1))
    assert lift.label == {(1, 0): LaurentPoly.monomial(1)}


@pytest.mark.parametrize("label", ["A1-sc", "GL2", "A2-sc"])
def test_section_property(label):
    d = build_datum(label)
    for lam in sp.dominant_coweights(d, 6):
        lift = ct.central_lift(sp.m(d, lam))
        assert sp.pi_map(lift.element) == sp.m(d, lam)


def test_central_lift_cutoff_error():
    from heckewb.errors import CutoffExceededError
    with pytest.raises(CutoffExceededError):
        ct.central_lift(sp.m(A1, (4,)), cutoff=6)  # length 8 support


def test_lift_is_multiplicative_examples():
    ok, diff = ct.lift_is_multiplicative(A1, (0,), (0,))
    assert ok and diff.is_zero()
    ok, _ = ct.lift_is_multiplicative(A1, (1,), (0,))
    assert ok
    ok, _ = ct.lift_is_multiplicative(A1, (1,), (1,))
    assert ok


def test_lift_label_solves_triangular_system():
    conv = sp.sph_conv(sp.m(A1, (1,)), sp.m(A1, (1,)))
    lift = ct.central_lift(conv)
    rebuilt = hk.HeckeElement(A1, {})
    for lam, a in lift.label.items():
        rebuilt = rebuilt \
            + ct.central_element(A1, lam, verify=False).element.scale(a)
    assert rebuilt == lift.element
    assert sp.pi_map(lift.element) == conv
