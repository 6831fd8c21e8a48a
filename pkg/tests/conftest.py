import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from elliptikit.frame import frame_from_sides
from elliptikit.sampling import random_frames


@pytest.fixture(scope="session")
def base_frame():
    """Scalene reference frame used across the example tests."""
    return frame_from_sides(1.0, 0.8, 0.6)


@pytest.fixture(scope="session")
def generic_frame():
    """Scalene frame that stays non-right in the euclidean limit."""
    return frame_from_sides(1.0, 0.85, 0.62)


@pytest.fixture(scope="session")
def octant_frame():
    return frame_from_sides(np.pi / 2, np.pi / 2, np.pi / 2)


@pytest.fixture(scope="session")
def frame_batch():
    """Well-conditioned random frames for property sweeps."""
    return [f for f in random_frames(60, seed=2024) if f.staudtian > 1e-3]


@pytest.fixture()
def rng():
    return np.random.default_rng(5150)
