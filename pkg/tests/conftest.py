import math
import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).resolve().parent))

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=40,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

SQRT3_2 = math.sqrt(3.0) / 2.0


def cd(c: int, d: int) -> tuple[int, int]:
    """Lattice coordinates of c*(0,1) + d*(1,-1).

    At gamma = sqrt(3)/2 with the vertical field only these two step
    directions bond, so (c, d) space is the natural square grid for
    building fixtures.
    """
    return (d, c - d)


@pytest.fixture
def rng():
    return np.random.default_rng(0)
