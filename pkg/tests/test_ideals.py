from fractions import Fraction

import pytest

from curvalg.fixtureio import parse_scalar
from curvalg.groupring import GroupRingElement, catalog
from curvalg.ideals import (
    all_pair_psets,
    basis_from_span,
    coefficient_matrix,
    commutation_check,
    delta,
    derivative_relations,
    left_ideal_basis,
    linear_identities,
    pset_label,
    vanishing_nu_condition,
)
from curvalg.perms import S3_ORDER
from curvalg.scalars import Eisenstein, RationalFunction


def rf(expr):
    return parse_scalar(expr)


def test_eta_basis_matches_reference(eta_basis):
    h1, h2 = eta_basis.basis
    ninth = Fraction(1, 9)
    assert [h1.coefficient(p) for p in S3_ORDER] == [
        RationalFunction(c * ninth) for c in (-1, 2, -1, 2, -1, -1)
    ]
    assert [h2.coefficient(p) for p in S3_ORDER] == [
        RationalFunction(c * ninth) for c in (2, -1, -1, -1, -1, 2)
    ]


def test_xi_basis_matches_reference(xi_basis):
    h1, h2 = xi_basis.basis
    row1 = ["(4-2*nu)/9", "(-2+4*nu)/9", "(4-2*nu)/9", "(-2+4*nu)/9", "(-2-2*nu)/9", "(-2-2*nu)/9"]
    row2 = ["(-2+4*nu)/9", "(4-2*nu)/9", "(-2-2*nu)/9", "(-2-2*nu)/9", "(4-2*nu)/9", "(-2+4*nu)/9"]
    assert [h1.coefficient(p) for p in S3_ORDER] == [rf(e) for e in row1]
    assert [h2.coefficient(p) for p in S3_ORDER] == [rf(e) for e in row2]
    assert coefficient_matrix(xi_basis) == (
        tuple(rf(e) for e in row1),
        tuple(rf(e) for e in row2),
    )


def test_full_symmetrizer_basis():
    basis = left_ideal_basis(catalog("f_s"))
    assert basis.dim == 1
    assert basis.block == (3,)
    assert basis.basis[0] == catalog("f_s")


def test_basis_membership(eta_basis, xi_basis):
    for basis in (eta_basis, xi_basis):
        estar = basis.generator.star()
        for h in basis.basis:
            assert h * estar == h


def test_left_ideal_basis_rejects_bad_input():
    with pytest.raises(ValueError):
        left_ideal_basis(catalog("eta").scale(2))  # not idempotent
    with pytest.raises(ValueError):
        left_ideal_basis(catalog("e_s"))  # two nonzero blocks
    with pytest.raises(ValueError):
        left_ideal_basis(GroupRingElement.zero(3))  # zero transform


def test_delta_examples(eta_basis, xi_basis):
    assert delta(xi_basis, (1, 2)) == rf("4*(1-nu)*(1+nu)/27")
    assert delta(eta_basis, (1, 6)).is_zero()
    assert delta(eta_basis, (2, 4)).is_zero()
    assert delta(eta_basis, (3, 5)).is_zero()
    assert delta(eta_basis, (1, 2))
    assert delta(xi_basis, (1, 6)) == rf("4*(2*nu-1)/27")


def test_delta_zero_pattern_matches_table(eta_basis):
    zeros = {ps for ps in all_pair_psets() if not delta(eta_basis, ps)}
    assert zeros == {(1, 6), (2, 4), (3, 5)}


def test_eta_identities_match_reference(eta_basis):
    ids = linear_identities(eta_basis, (1, 2))
    assert ids.pivots == (S3_ORDER[0], S3_ORDER[1])
    one = RationalFunction.one()
    zero = RationalFunction.zero()
    assert ids.rule_row(S3_ORDER[5]) == {S3_ORDER[0]: one, S3_ORDER[1]: zero}
    assert ids.rule_row(S3_ORDER[4]) == {S3_ORDER[0]: -one, S3_ORDER[1]: -one}
    assert ids.rule_row(S3_ORDER[3]) == {S3_ORDER[0]: zero, S3_ORDER[1]: one}
    assert ids.rule_row(S3_ORDER[2]) == {S3_ORDER[0]: -one, S3_ORDER[1]: -one}


def test_xi_identities_match_reference(xi_basis):
    ids = linear_identities(xi_basis, (1, 2))
    g = "(nu^2-1)"
    expected = {
        5: ("-(nu^2-2*nu)/" + g, "-(nu^2-nu+1)/" + g),
        3: ("-(nu^2-nu+1)/" + g, "-(nu^2-2*nu)/" + g),
        4: ("-(2*nu-1)/" + g, "(nu^2-nu+1)/" + g),
        6: ("(nu^2-nu+1)/" + g, "-(2*nu-1)/" + g),
    }
    for pos, (b1, b2) in expected.items():
        row = ids.rule_row(S3_ORDER[pos - 1])
        assert row[S3_ORDER[0]] == rf(b1)
        assert row[S3_ORDER[1]] == rf(b2)


def test_singular_pivot_raises_with_label(eta_basis):
    with pytest.raises(ValueError, match="16"):
        linear_identities(eta_basis, (1, 6))


def test_identity_rows_annihilate_basis(eta_basis, xi_basis):
    # substituting a rule row into every basis functional gives zero
    for basis in (eta_basis, xi_basis):
        for pset in all_pair_psets():
            if not delta(basis, pset):
                continue
            ids = linear_identities(basis, pset)
            for s, row in ids.rules.items():
                for h in basis.basis:
                    acc = -h.coefficient(s)
                    for p, b in row.items():
                        acc = acc + b * h.coefficient(p)
                    assert acc.is_zero()


def test_identities_depend_only_on_pivots(eta_basis, xi_basis):
    # an independently constructed basis must give the same rules
    for basis in (eta_basis, xi_basis):
        alt = basis_from_span(basis.generator)
        assert alt.basis != basis.basis
        for pset in all_pair_psets():
            if not delta(basis, pset):
                continue
            assert linear_identities(basis, pset).rules == linear_identities(alt, pset).rules


def test_commutation_examples():
    eta = catalog("eta")
    xi = catalog("xi")
    assert commutation_check(catalog("sym2b"), eta) is True
    assert commutation_check(catalog("sym2a"), eta) is False
    cond = commutation_check(catalog("alt2c"), xi)
    assert cond.roots == frozenset({Eisenstein(-1)})
    cond = commutation_check(catalog("sym3"), xi)
    assert not cond.always and not cond.roots
    # concrete family member gives a plain boolean
    assert commutation_check(catalog("alt2c"), catalog("xi", nu=-1)) is True
    assert commutation_check(catalog("alt2c"), catalog("xi", nu=0)) is False


def test_vanishing_condition_of_zero_element():
    cond = vanishing_nu_condition(GroupRingElement.zero(3))
    assert cond.always


def test_derivative_relations():
    rel = derivative_relations()
    assert not rel["eta_fixes_h_s"]
    assert not rel["eta_fixes_h_a"]
    assert rel["xi0_fixes_h_s"]
    assert rel["xi2_fixes_h_a"]
    assert rel["nu_fixing_h_s"].roots == frozenset({Eisenstein(0)})
    assert rel["nu_fixing_h_a"].roots == frozenset({Eisenstein(2)})


def test_pset_label():
    assert pset_label((1, 6)) == "16"
    assert pset_label((6, 1)) == "16"
