import pytest

from ginvlab import build_example_ring, build_matrix_ring, build_zmod


@pytest.fixture(scope="session")
def z4():
    return build_zmod(4)


@pytest.fixture(scope="session")
def z6():
    return build_zmod(6)


@pytest.fixture(scope="session")
def z30():
    return build_zmod(30)


@pytest.fixture(scope="session")
def m2gf2():
    return build_matrix_ring(2, 2)


@pytest.fixture(scope="session")
def m2gf3():
    return build_matrix_ring(2, 3)


@pytest.fixture(scope="session")
def example():
    return build_example_ring()
