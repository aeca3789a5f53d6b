# Copyright 2021 CR-Suite Development Team
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
CR-Saddle
"""
# pylint: disable=W0611

import jax

# the stability checks compare constants at 1e-8 and below
jax.config.update("jax_enable_x64", True)

from .version import __version__

from cr.saddle._src.errors import (
    SaddleError,
    NotSymmetric,
    DimensionMismatch,
    NonSPD,
    EmptyRange,
    DeskScaleExceeded,
    BreakdownDetected,
    IncompatibleFlags,
    IncompatibleSpaces,
    QbarSingular,
    HypothesisFailed,
    ConfigParseError,
    ConfigValidationError,
)

from cr.saddle._src.saddle.system import (
    BlockSystem,
    CombinedVector,
    block_system,
    split,
    apply_block_operator,
)

from cr.saddle._src.saddle.fitted import (
    FittedNorms,
    build_fitted_norms,
    equivalent_norms,
    combined_norm,
)
