import numpy as np
import pytest

from sirminer.schemas.core_schemas import MeasureKind, MiningParams
from sirminer.services.series import TimeSeriesPair

@pytest.fixture
def w1_pair():
    # point products [2, 2, -9, -9, 2, 2]
    return TimeSeriesPair([1, 1, 3, 3, 1, 1], [2, 2, -3, -3, 2, 2])

@pytest.fixture
def w1_params():
    return MiningParams(measure=MeasureKind.AP, tau=1.0, l_min=2)

@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
