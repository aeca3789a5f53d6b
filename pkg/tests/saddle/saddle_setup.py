import pytest
import math

# jax imports
import jax
import jax.numpy as jnp
from jax import random

# crs imports
import cr.saddle as crs
from cr.saddle import (block_system, build_fitted_norms, equivalent_norms,
    combined_norm, apply_block_operator, split, CombinedVector)
from cr.saddle import NotSymmetric, DimensionMismatch, NonSPD, QbarSingular

atol = 1e-12
rtol = 1e-12

import numpy as np
from numpy.testing import (assert_almost_equal, assert_allclose, assert_,
                           assert_equal, assert_raises, assert_raises_regex,
                           assert_array_equal, assert_warns)

key = random.PRNGKey(0)
keys = random.split(key, 16)


def scalar_system(t):
    """V = Q = R with A = 1, B = 1, C = t and unit seminorms"""
    sys = block_system([[1.]], [[1.]], [[t]])
    return sys, build_fitted_norms(sys, [[1.]], [[1.]])


def random_system(k, n_V, n_Q, c_scale=1.):
    k1, k2, k3 = random.split(k, 3)
    X = np.asarray(random.normal(k1, (n_V, n_V)))
    A = X @ X.T
    B = np.asarray(random.normal(k2, (n_Q, n_V)))
    Y = np.asarray(random.normal(k3, (n_Q, n_Q)))
    C = c_scale * (Y @ Y.T)
    return block_system(A, B, C)
