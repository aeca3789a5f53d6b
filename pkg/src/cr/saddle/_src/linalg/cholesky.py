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

import logging
from typing import NamedTuple, Optional

import numpy as np
import jax.numpy as jnp
from jax.scipy.linalg import cho_solve

from cr.saddle._src.errors import NonSPD
from .defs import PIVOT_TOL, check_symmetric, check_desk_scale
from .sparse import dense

logger = logging.getLogger(__name__)


class CholeskyFactor(NamedTuple):
    """Lower Cholesky factor :math:`D P (M + s I) P^T D = L L^T`"""
    L: jnp.ndarray
    """Lower triangular factor"""
    perm: jnp.ndarray
    """Row permutation (identity for the dense kernel)"""
    shift: float = 0.
    """Diagonal shift added before factoring"""
    scale: Optional[jnp.ndarray] = None
    """Diagonal of the equilibration :math:`D`, None when unscaled"""

    @property
    def n(self):
        return self.L.shape[0]

    def solve(self, b):
        """Solves :math:`(M + sI) x = b` for a vector or a block of columns"""
        b = jnp.asarray(b)
        if self.n == 0:
            return b
        if self.scale is None:
            return cho_solve((self.L, True), b)
        d = self.scale if b.ndim == 1 else self.scale[:, None]
        return d * cho_solve((self.L, True), d * b)


def cholesky_factor(M, shift=0., equilibrate=False):
    """Cholesky factor of a symmetric positive definite matrix

    Args:
        M: :class:`SparseMatrix` or dense array
        shift (float): nonnegative multiple of the identity added to ``M``
        equilibrate (bool): factor :math:`D M D` with
            :math:`D = \\mathrm{diag}(M)^{-1/2}`, for matrices whose blocks
            differ by many orders of magnitude

    Returns:
        CholeskyFactor: with ``L @ L.T == M + shift I`` (``D (M + shift I) D``
        when equilibrated)

    Raises:
        NotSymmetric: when ``M`` fails the symmetry check
        NonSPD: when a pivot is not larger than ``1e-14`` times the largest diagonal entry
    """
    n = M.shape[0]
    check_desk_scale(n, "Cholesky factorization")
    M = dense(M)
    check_symmetric(M, "Cholesky input")
    perm = jnp.arange(n)
    if n == 0:
        return CholeskyFactor(jnp.zeros((0, 0)), perm, shift)
    if shift:
        M = M + shift * jnp.eye(n)
    scale = None
    if equilibrate:
        d = np.asarray(jnp.diag(M))
        if not np.all(d > 0.):
            raise NonSPD(f"matrix of order {n} has a nonpositive diagonal entry")
        scale = jnp.asarray(1. / np.sqrt(d))
        M = scale[:, None] * M * scale[None, :]
    L = jnp.linalg.cholesky(M)
    pivots = np.asarray(jnp.diag(L)) ** 2
    max_diag = float(jnp.max(jnp.abs(jnp.diag(M))))
    if np.any(np.isnan(pivots)) or np.min(pivots) <= PIVOT_TOL * max_diag:
        raise NonSPD(f"matrix of order {n} is not positive definite")
    logger.debug("Cholesky order %d, min pivot %.3e", n, np.min(pivots))
    return CholeskyFactor(L, perm, shift, scale)
