import pytest

from groupcover import (
    alternating_group,
    build_catalog,
    cyclic_group,
    dihedral_group,
    direct_product,
    elementary_group,
    parse_presentation,
    quaternion_group,
    special_linear_group,
    symmetric_group,
)

K235_TEXT = "< x, y, z | x^2, y^3, z^5 >"
HIGMAN_TEXT = (
    "< a, b, c, d | a b a^-1 = b^2, b c b^-1 = c^2, "
    "c d c^-1 = d^2, d a d^-1 = a^2 >"
)
HNN_TEXT = "< a, b, t | [a,b], t^-1 a^2 t = a^3, t^-1 b^2 t = b^3 >"


@pytest.fixture(scope="session")
def catalog():
    return build_catalog()


@pytest.fixture(scope="session")
def klein():
    return direct_product(cyclic_group(2), cyclic_group(2))


@pytest.fixture(scope="session")
def c6():
    return cyclic_group(6)


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def s5():
    return symmetric_group(5)


@pytest.fixture(scope="session")
def a4():
    return alternating_group(4)


@pytest.fixture(scope="session")
def a5():
    return alternating_group(5)


@pytest.fixture(scope="session")
def q8():
    return quaternion_group()


@pytest.fixture(scope="session")
def d4():
    return dihedral_group(4)


@pytest.fixture(scope="session")
def sl25():
    return special_linear_group(5)


@pytest.fixture(scope="session")
def e8():
    return elementary_group(2, 3)


@pytest.fixture(scope="session")
def k235():
    return parse_presentation(K235_TEXT)


@pytest.fixture(scope="session")
def higman():
    return parse_presentation(HIGMAN_TEXT)


@pytest.fixture(scope="session")
def hnn():
    return parse_presentation(HNN_TEXT)
