import numpy as np
import pytest

from noisyoneway.channels import NoiseChannel


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def random_channel(rng):
    def draw() -> NoiseChannel:
        B = rng.uniform(0.0, 3.0)
        return NoiseChannel(B = B, C = B / 2 + rng.uniform(0.0, 3.0), S = rng.uniform(), t = rng.uniform(0.0, 2.0))
    return draw


@pytest.fixture
def bell():
    return np.array([1, 0, 0, 1], dtype = complex) / np.sqrt(2)
