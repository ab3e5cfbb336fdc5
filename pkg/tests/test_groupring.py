import random
from fractions import Fraction

import pytest

from curvalg.groupring import (
    GroupRingElement,
    TABLEAU_T1,
    TABLEAU_T2,
    TABLEAU_TPRIME,
    catalog,
    embed_fix12,
    embed_fix45,
    rho_element,
    sigma_element,
    young_symmetrizer,
)
from curvalg.perms import YoungTableau, all_perms
from curvalg.scalars import Eisenstein, OMEGA, Polynomial, RationalFunction


def random_element(rng, r=5, nterms=4):
    perms = all_perms(r)
    return GroupRingElement(
        r,
        {
            rng.choice(perms): Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            for _ in range(nterms)
        },
    )


def test_eta_is_pinned():
    eta = catalog("eta")
    third = Fraction(1, 3)
    assert eta.terms == {
        (1, 2, 3): RationalFunction(third),
        (2, 1, 3): RationalFunction(-third),
        (2, 3, 1): RationalFunction(-third),
        (3, 2, 1): RationalFunction(third),
    }


def test_xi_is_pinned():
    nu = RationalFunction.nu()
    third = Fraction(1, 3)
    xi = catalog("xi")
    assert xi.coefficient((1, 2, 3)) == third * RationalFunction.one()
    assert xi.coefficient((1, 3, 2)) == third * nu
    assert xi.coefficient((2, 1, 3)) == third * (1 - nu)
    assert xi.coefficient((2, 3, 1)) == -third * nu
    assert xi.coefficient((3, 1, 2)) == third * (nu - 1)
    assert xi.coefficient((3, 2, 1)) == -third * RationalFunction.one()


def test_z1_is_pinned():
    z1 = catalog("z1")
    third = Fraction(1, 3)
    assert z1.coefficient((1, 2, 3)) == RationalFunction(third)
    assert z1.coefficient((2, 3, 1)) == RationalFunction(OMEGA) * third
    assert z1.coefficient((3, 1, 2)) == RationalFunction(OMEGA.conjugate()) * third


def test_critical_f_equals_xi_at_one_half():
    assert catalog("f") == catalog("xi", nu=Fraction(1, 2))


def test_idempotents_multiply():
    eta = catalog("eta")
    xi = catalog("xi")
    assert eta * eta == eta
    assert xi * xi == xi  # identity of rational functions in nu
    for name in ("h_s", "h_a", "e_s", "e_a", "f_s", "f_a", "f"):
        elem = catalog(name)
        assert elem.is_idempotent(), name
    for name in ("sym2a", "sym2b", "sym2c", "alt2a", "alt2b", "alt2c",
                 "z1", "z2", "sym3", "sym6", "alt6"):
        assert catalog(name).is_idempotent(), name


def test_young_symmetrizer_t1_t2():
    assert young_symmetrizer(TABLEAU_T1) == catalog("xi", nu=0).scale(3)
    assert young_symmetrizer(TABLEAU_T2) == catalog("eta").scale(3)


def test_young_symmetrizer_essential_idempotence():
    # frame (2,2): y.y = (4!/2) y ; frame (3,2): y.y = (5!/5) y
    t = YoungTableau(((1, 3), (2, 4)))
    y = young_symmetrizer(t)
    assert y * y == y.scale(12)
    yp = young_symmetrizer(TABLEAU_TPRIME)
    assert len(yp.terms) == 48
    assert all(c in (RationalFunction(1), RationalFunction(-1)) for c in yp.terms.values())
    assert yp * yp == yp.scale(24)
    assert not yp.is_idempotent()


def test_star_of_eta():
    expected = GroupRingElement(
        3,
        {
            (1, 2, 3): Fraction(1, 3),
            (2, 1, 3): Fraction(-1, 3),
            (3, 1, 2): Fraction(-1, 3),
            (3, 2, 1): Fraction(1, 3),
        },
    )
    assert catalog("eta").star() == expected


def test_star_of_xi():
    nu = RationalFunction.nu()
    third = Fraction(1, 3)
    xs = catalog("xi").star()
    assert xs.coefficient((1, 3, 2)) == third * nu
    assert xs.coefficient((2, 3, 1)) == third * (nu - 1)
    assert xs.coefficient((3, 1, 2)) == -third * nu


def test_star_involution_and_antiautomorphism(rng):
    for _ in range(200):
        a = random_element(rng)
        b = random_element(rng)
        assert a.star().star() == a
        assert (a * b).star() == b.star() * a.star()


def test_multiply_associative_and_unit(rng):
    unit = GroupRingElement.unit(5)
    for _ in range(20):
        a, b, c = (random_element(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert unit * a == a and a * unit == a


def test_multiply_size_mismatch():
    with pytest.raises(ValueError):
        catalog("eta") * GroupRingElement.unit(5)


def test_embeddings():
    assert embed_fix12(GroupRingElement.basis((2, 1, 3))).support() == [(1, 2, 4, 3, 5)]
    assert embed_fix12(GroupRingElement.unit(3)) == GroupRingElement.unit(5)
    assert embed_fix45(GroupRingElement.basis((2, 1, 3))).support() == [(2, 1, 3, 4, 5)]
    assert embed_fix45(GroupRingElement.basis((3, 1, 2))).support() == [(3, 1, 2, 4, 5)]
    with pytest.raises(ValueError):
        embed_fix12(GroupRingElement.unit(5))


def test_unknown_catalog_name():
    with pytest.raises(KeyError):
        catalog("nope")


def test_render_sorted():
    assert catalog("eta").render() == (
        "1/3*[1,2,3] - 1/3*[2,1,3] - 1/3*[2,3,1] + 1/3*[3,2,1]"
    )


@pytest.mark.parametrize("variant", ["12", "45"])
@pytest.mark.parametrize("eps", [1, -1])
def test_sigma_rho_nonvanishing(variant, eps):
    rho = rho_element(eps, variant)
    assert not rho.is_zero()
    sigma = sigma_element(RationalFunction.nu(), eps, variant)
    assert not sigma.is_zero()
    factor = Polynomial((Eisenstein(-1), Eisenstein(2)))  # 2nu - 1
    for coeff in sigma.terms.values():
        assert (coeff.num % factor).is_zero()
        assert coeff.den == Polynomial.one()
    assert sigma.substitute_nu(Fraction(1, 2)).is_zero()
    for nu0 in (-1, 0, 1, 2):
        assert not sigma.substitute_nu(nu0).is_zero()


def test_sigma_substitution_matches_concrete_build():
    sym = sigma_element(RationalFunction.nu(), 1, "12").substitute_nu(2)
    direct = sigma_element(2, 1, "12")
    assert sym == direct
