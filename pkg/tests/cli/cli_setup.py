import pytest
import os

import pandas as pd

# crs imports
import cr.saddle as crs
from cr.saddle import cli
from cr.saddle import ConfigParseError, ConfigValidationError

import numpy as np
from numpy.testing import (assert_almost_equal, assert_allclose, assert_,
                           assert_equal, assert_raises, assert_raises_regex,
                           assert_array_equal, assert_warns)

CONSTANTS_HEADER = ("example,level,param_point,C_a_bar,C_a_under,beta_under,"
    "alpha_under,C_bar,epsilon,delta,theoretical_bound,hypotheses_ok")


def write_config(directory, text, name="run.cfg"):
    path = directory / name
    path.write_text(text)
    return str(path)
