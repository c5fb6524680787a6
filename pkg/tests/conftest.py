import pytest

from hochwerk.groups import make_cyclic, make_dihedral, make_symmetric


@pytest.fixture(scope="session")
def C1():
    return make_cyclic(1)


@pytest.fixture(scope="session")
def C2():
    return make_cyclic(2)


@pytest.fixture(scope="session")
def C3():
    return make_cyclic(3)


@pytest.fixture(scope="session")
def S3():
    return make_symmetric(3)


@pytest.fixture(scope="session")
def D4():
    return make_dihedral(4)
