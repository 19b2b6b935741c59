import math

import numpy as np
import pytest
from numpy.polynomial import hermite

from fermitrap import _backend


def hermite_function(n, x):
    """phi_n from the physicists' polynomial and an explicit normalization.

    Independent of the recurrence in the package; fine for n <= ~60.
    """
    coeffs = np.zeros(n + 1)
    coeffs[n] = 1.0
    log_norm = -0.5 * (n * math.log(2.0) + math.lgamma(n + 1) + 0.5 * math.log(math.pi))
    x = np.asarray(x, dtype=np.float64)
    return hermite.hermval(x, coeffs) * np.exp(-0.5 * x * x + log_norm)


@pytest.fixture(params=sorted(_backend.BACKENDS))
def backend(request):
    previous = _backend.active()
    _backend.select(request.param)
    yield request.param
    _backend.select(previous)
