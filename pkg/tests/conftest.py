import pytest

from bruhatkit import canonical_order, enumerate_group, root_system


@pytest.fixture(scope="session")
def a1():
    return root_system("A", 1)


@pytest.fixture(scope="session")
def a2():
    return root_system("A", 2)


@pytest.fixture(scope="session")
def a3():
    return root_system("A", 3)


@pytest.fixture(scope="session")
def a4():
    return root_system("A", 4)


@pytest.fixture(scope="session")
def b2():
    return root_system("B", 2)


@pytest.fixture(scope="session")
def b3():
    return root_system("B", 3)


@pytest.fixture(scope="session")
def g2():
    return root_system("G", 2)


@pytest.fixture(scope="session")
def d4():
    return root_system("D", 4)


@pytest.fixture(scope="session")
def s3(a2):
    return canonical_order(enumerate_group(a2))


@pytest.fixture(scope="session")
def s4(a3):
    return canonical_order(enumerate_group(a3))


@pytest.fixture(scope="session")
def s5(a4):
    return canonical_order(enumerate_group(a4))


@pytest.fixture(scope="session")
def b3_group(b3):
    return canonical_order(enumerate_group(b3))


@pytest.fixture(scope="session")
def g2_group(g2):
    return canonical_order(enumerate_group(g2))


@pytest.fixture(scope="session")
def d4_group(d4):
    return canonical_order(enumerate_group(d4))
