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

"""Working tolerances shared by the dense linear algebra kernels."""

import numpy as np

from cr.saddle._src.errors import NotSymmetric, DeskScaleExceeded

SYM_TOL = 1e-12
"""Relative max-entry tolerance for symmetry assertions"""

SPD_TOL = 1e-12
"""Relative eigenvalue level below which a metric direction counts as kernel"""

PIVOT_TOL = 1e-14
"""Relative pivot level below which Cholesky reports a non SPD matrix"""

DESK_SCALE = 4000
"""Largest dimension accepted by dense factorizations and eigensolvers"""


def asymmetry(M):
    """Returns :math:`\\| M - M^T \\|_{\\max} / \\| M \\|_{\\max}` (0 for a zero matrix)"""
    M = np.asarray(M)
    scale = np.max(np.abs(M)) if M.size else 0.
    if scale == 0.:
        return 0.
    return float(np.max(np.abs(M - M.T)) / scale)


def is_symmetric(M, tol=SYM_TOL):
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        return False
    return asymmetry(M) <= tol


def check_symmetric(M, name="matrix", tol=SYM_TOL):
    """Raises :class:`NotSymmetric` unless ``M`` is square and symmetric to ``tol``"""
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise NotSymmetric(f"{name} is not square: shape {M.shape}")
    err = asymmetry(M)
    if err > tol:
        raise NotSymmetric(f"{name} asymmetry {err:.3e} exceeds {tol:.0e}")


def check_desk_scale(n, what="problem"):
    if n > DESK_SCALE:
        raise DeskScaleExceeded(
            f"{what} of dimension {n} exceeds the dense limit {DESK_SCALE}")
