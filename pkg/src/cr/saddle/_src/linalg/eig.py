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

"""Dense symmetric generalized eigenvalue problems with a semidefinite metric
"""

import logging
from typing import NamedTuple

import jax.numpy as jnp
from jax.scipy.linalg import solve_triangular

from cr.saddle._src.errors import DimensionMismatch, EmptyRange
from .defs import SPD_TOL, check_symmetric, check_desk_scale
from .sparse import dense
from .cholesky import cholesky_factor

logger = logging.getLogger(__name__)


class EigenPencilResult(NamedTuple):
    """Eigenpairs of the pencil :math:`M_1 x = \\theta M_2 x`"""
    eigenvalues: jnp.ndarray
    """Eigenvalues in ascending order"""
    eigenvectors: jnp.ndarray
    """Eigenvectors as columns, :math:`M_2`-orthonormal"""
    kernel_dim: int = 0
    """Dimension of the numerical kernel of :math:`M_2` that was condensed out"""

    @property
    def min(self):
        return float(self.eigenvalues[0])

    @property
    def max(self):
        return float(self.eigenvalues[-1])

    def __str__(self):
        s = []
        s.append(f"eigenvalues: {self.eigenvalues.shape[0]}")
        s.append(f"range: [{self.min:.6e}, {self.max:.6e}]")
        s.append(f"kernel dimension: {self.kernel_dim}")
        return "\n".join(s)


def _equilibration(M2):
    d = jnp.diag(M2)
    return jnp.where(d > 0, 1. / jnp.sqrt(jnp.where(d > 0, d, 1.)), 1.)


def _select(theta, X, kernel_dim, mode):
    if mode == "full":
        return EigenPencilResult(theta, X, kernel_dim)
    if mode == "extremal":
        idx = jnp.array([0, theta.shape[0] - 1])
        return EigenPencilResult(theta[idx], X[:, idx], kernel_dim)
    raise ValueError(f"unknown mode {mode!r}")


def gen_sym_eig(M1, M2, mode="full", spd_metric=False):
    """Solves :math:`M_1 x = \\theta M_2 x` for symmetric :math:`M_1` and
    symmetric positive semidefinite :math:`M_2`

    Both matrices are congruence scaled with :math:`\\mathrm{diag}(M_2)^{-1/2}`
    first. With a singular metric the problem is posed on the range of
    :math:`M_2`: the metric is eigen-decomposed, directions with eigenvalue
    below ``1e-12`` times the largest are treated as its kernel and the kernel
    block of :math:`M_1` is eliminated by a Schur complement. The eigenvalues
    are then the stationary values of :math:`x^T M_1 x / x^T M_2 x` over all
    :math:`x` with :math:`x^T M_2 x > 0`, and they are invariant under
    congruence of the pencil.

    Args:
        M1: symmetric matrix (:class:`SparseMatrix` or dense)
        M2: symmetric positive semidefinite metric
        mode (str): ``"full"`` for all eigenpairs, ``"extremal"`` for the
            smallest and the largest
        spd_metric (bool): the metric is known to be positive definite,
            use a Cholesky reduction without truncation

    Returns:
        EigenPencilResult: ascending eigenvalues and eigenvectors
    """
    if tuple(M1.shape) != tuple(M2.shape):
        raise DimensionMismatch(f"pencil shapes differ: {M1.shape} vs {M2.shape}")
    n = M1.shape[0]
    check_desk_scale(n, "eigenvalue problem")
    M1 = dense(M1)
    M2 = dense(M2)
    check_symmetric(M1, "pencil matrix")
    check_symmetric(M2, "pencil metric")
    if n == 0:
        raise EmptyRange("empty pencil")
    s = _equilibration(M2)
    M1 = s[:, None] * M1 * s[None, :]
    M2 = s[:, None] * M2 * s[None, :]

    if spd_metric:
        L = cholesky_factor(M2).L
        T = solve_triangular(L, M1, lower=True)
        T = solve_triangular(L, T.T, lower=True)
        theta, Z = jnp.linalg.eigh(0.5 * (T + T.T))
        X = solve_triangular(L.T, Z, lower=False)
        return _select(theta, s[:, None] * X, 0, mode)

    w, U = jnp.linalg.eigh(M2)
    w_max = float(w[-1])
    if w_max <= 0.:
        raise EmptyRange("metric has no positive eigenvalue")
    keep = w > SPD_TOL * w_max
    Ur, wr = U[:, keep], w[keep]
    Uk = U[:, ~keep]
    k = Uk.shape[1]
    M1rr = Ur.T @ M1 @ Ur
    if k:
        M1rk = Ur.T @ M1 @ Uk
        M1kk = Uk.T @ M1 @ Uk
        P = jnp.linalg.pinv(0.5 * (M1kk + M1kk.T), hermitian=True)
        S = M1rr - M1rk @ P @ M1rk.T
        logger.debug("pencil metric kernel of dimension %d condensed", k)
    else:
        S = M1rr
    wr = 1. / jnp.sqrt(wr)
    T = wr[:, None] * S * wr[None, :]
    theta, Z = jnp.linalg.eigh(0.5 * (T + T.T))
    Z = wr[:, None] * Z
    X = Ur @ Z
    if k:
        X = X - Uk @ (P @ (M1rk.T @ Z))
    return _select(theta, s[:, None] * X, k, mode)
