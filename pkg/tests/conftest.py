import pytest
from hypothesis import settings

from tsslab import groups

settings.register_profile("suite", deadline=None, max_examples=40)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def z6():
    return groups.make_cyclic(6)


@pytest.fixture(scope="session")
def d8():
    return groups.make_dihedral(4)


@pytest.fixture(scope="session")
def s3():
    return groups.make_symmetric(3)


@pytest.fixture(scope="session")
def s4():
    return groups.make_symmetric(4)


@pytest.fixture(scope="session")
def sd18():
    return groups.make_semidirect_cyclic(groups.SemidirectParams(3, 6, 2))


@pytest.fixture(scope="session")
def small_corpus(z6, d8, s3, s4, sd18):
    return [
        groups.make_cyclic(5),
        z6,
        groups.make_dihedral(3),
        d8,
        groups.make_dihedral(6),
        s3,
        s4,
        sd18,
        groups.make_semidirect_cyclic(groups.SemidirectParams(7, 3, 2)),
        groups.direct_product(groups.make_cyclic(2), d8),
    ]
