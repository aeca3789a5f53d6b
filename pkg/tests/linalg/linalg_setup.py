import pytest
import math

# jax imports
import jax
import jax.numpy as jnp
from jax import random

# crs imports
import cr.saddle as crs
from cr.saddle import linalg
from cr.saddle import (
    NotSymmetric, DimensionMismatch, NonSPD, EmptyRange,
    DeskScaleExceeded, BreakdownDetected)

atol = 1e-8
rtol = 1e-8

import numpy as np
import scipy.linalg
from numpy.testing import (assert_almost_equal, assert_allclose, assert_,
                           assert_equal, assert_raises, assert_raises_regex,
                           assert_array_equal, assert_warns)

key = random.PRNGKey(0)
keys = random.split(key, 16)


def random_spd(k, n, shift=None):
    X = np.asarray(random.normal(k, (n, n)))
    shift = n if shift is None else shift
    return X @ X.T + shift * np.eye(n)


def random_sym(k, n):
    X = np.asarray(random.normal(k, (n, n)))
    return 0.5 * (X + X.T)
