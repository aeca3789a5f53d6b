import pytest

# crs imports
import cr.saddle as crs
from cr.saddle import mesh
from cr.saddle.mesh import build_unit_square_mesh

import numpy as np
from numpy.testing import (assert_almost_equal, assert_allclose, assert_,
                           assert_equal, assert_raises, assert_raises_regex,
                           assert_array_equal, assert_warns)
