from fractions import Fraction

import pytest

from rowmotion.poset import chain_product, root_poset_a


@pytest.fixture(scope="session")
def p22():
    return chain_product(2, 2)


@pytest.fixture(scope="session")
def p23():
    return chain_product(2, 3)


@pytest.fixture(scope="session")
def p33():
    return chain_product(3, 3)


@pytest.fixture(scope="session")
def a3():
    return root_poset_a(3)


def frac(num, den=1):
    return Fraction(num, den)
