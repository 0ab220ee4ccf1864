import numpy as np
import pytest

from qsynth4.truth_table import QuaternaryFunction
from qsynth4.utils import configure_logging

# worked 2-input example; row index is 4 * a + b
TABLE4_VALUES = [0, 3, 1, 2, 3, 3, 2, 0, 1, 2, 1, 3, 2, 1, 3, 2]


@pytest.fixture(autouse=True)
def quiet_logs():
    configure_logging(quiet=True)
    yield


@pytest.fixture
def table4() -> QuaternaryFunction:
    return QuaternaryFunction(2, 1, np.array(TABLE4_VALUES, dtype=np.uint8), "table4")
