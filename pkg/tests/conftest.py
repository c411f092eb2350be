import pytest

from zhuind import catalog


@pytest.fixture(scope="session")
def va1():
    return catalog.algebra("a_va1")


@pytest.fixture(scope="session")
def va2():
    return catalog.algebra("a_va2")


@pytest.fixture(scope="session")
def vp():
    return catalog.algebra("a_vp")


@pytest.fixture(scope="session")
def vb():
    return catalog.algebra("vb")


@pytest.fixture(scope="session")
def heis():
    return catalog.algebra("heis")


@pytest.fixture(scope="session")
def vir():
    return catalog.algebra("vir")
