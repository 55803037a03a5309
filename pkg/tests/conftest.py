import numpy as np
import pytest

from mirrorstage import ArgbMatrix


@pytest.fixture
def rng():
    return np.random.default_rng(20260808)


def random_matrix(rng, width, height):
    return ArgbMatrix(rng.integers(0, 256, size=(4, height, width), dtype=np.uint8))
