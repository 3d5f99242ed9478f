import pytest

from tdesign.constructions import two_octagons


@pytest.fixture(scope="session")
def octagons():
    return two_octagons(1, 2, 1)
