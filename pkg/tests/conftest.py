import random
from fractions import Fraction

import pytest

from curvalg.groupring import TABLEAU_TPRIME, catalog, young_symmetrizer
from curvalg.ideals import left_ideal_basis
from curvalg.tensorpoly import symmetrize_product


@pytest.fixture(scope="session")
def y_tprime():
    return young_symmetrizer(TABLEAU_TPRIME)


@pytest.fixture(scope="session")
def base_operator(y_tprime):
    return y_tprime.star().scale(Fraction(1, 24))


@pytest.fixture(scope="session")
def appendix_a(base_operator):
    return {eps: symmetrize_product(base_operator, "uw", eps) for eps in (1, -1)}


@pytest.fixture(scope="session")
def eta_basis():
    return left_ideal_basis(catalog("eta"))


@pytest.fixture(scope="session")
def xi_basis():
    return left_ideal_basis(catalog("xi"))


@pytest.fixture()
def rng():
    return random.Random(1234)
