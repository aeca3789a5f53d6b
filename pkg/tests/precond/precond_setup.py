import pytest

# jax imports
import jax
import jax.numpy as jnp
from jax import random

# crs imports
import cr.saddle as crs
from cr.saddle import precond, analysis
from cr.saddle.biot import ExampleParams, build_example
from cr.saddle.linalg import to_matrix

atol = 1e-10
rtol = 1e-10

import numpy as np
import scipy.linalg
from numpy.testing import (assert_almost_equal, assert_allclose, assert_,
                           assert_equal, assert_raises, assert_raises_regex,
                           assert_array_equal, assert_warns)

key = random.PRNGKey(0)
keys = random.split(key, 16)
