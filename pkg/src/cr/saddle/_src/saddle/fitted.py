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
from typing import NamedTuple

import jax.numpy as jnp
from jax.scipy.linalg import block_diag

from cr.nimble import arr_vdot

from cr.saddle._src.errors import DimensionMismatch, NonSPD, NotSymmetric, QbarSingular
from cr.saddle._src.linalg.defs import SPD_TOL, SYM_TOL, asymmetry, check_symmetric
from cr.saddle._src.linalg.sparse import dense
from cr.saddle._src.linalg.cholesky import CholeskyFactor, cholesky_factor

logger = logging.getLogger(__name__)


class FittedNorms(NamedTuple):
    """Parameter fitted norms of a :class:`BlockSystem`

    .. math::

        \\bar{Q} = S_Q + C, \\quad \\bar{V} = S_V + B^T \\bar{Q}^{-1} B
    """
    S_Q: jnp.ndarray
    """Seminorm on Q"""
    S_V: jnp.ndarray
    """Seminorm on V"""
    Qbar: jnp.ndarray
    """Fitted norm on Q"""
    Vbar: jnp.ndarray
    """Fitted norm on V"""
    Qbar_factor: CholeskyFactor
    """Cholesky factor of Qbar"""
    Vbar_factor: CholeskyFactor
    """Cholesky factor of Vbar"""

    @property
    def n_V(self):
        return self.Vbar.shape[0]

    @property
    def n_Q(self):
        return self.Qbar.shape[0]

    def metric(self):
        """Dense :math:`\\mathcal{N} = \\mathrm{diag}(\\bar{V}, \\bar{Q})`"""
        return block_diag(self.Vbar, self.Qbar)

    def apply_inverse(self, x):
        """Applies :math:`\\mathcal{N}^{-1}` to a stacked vector"""
        u, p = x[:self.n_V], x[self.n_V:]
        return jnp.concatenate((self.Vbar_factor.solve(u), self.Qbar_factor.solve(p)))


def _factor_spd(M, name, error, equilibrate=False):
    try:
        return cholesky_factor(M, equilibrate=equilibrate)
    except NonSPD as e:
        raise error(f"{name} is not positive definite") from e


def _qbar_factor(Qbar):
    n = Qbar.shape[0]
    if n:
        d = jnp.diag(Qbar)
        if float(jnp.min(d)) <= 0.:
            raise QbarSingular("S_Q + C has a nonpositive diagonal entry")
        # blocks of C may be many orders of magnitude apart
        s = 1. / jnp.sqrt(d)
        w = jnp.linalg.eigvalsh(s[:, None] * Qbar * s[None, :])
        if float(w[0]) <= SPD_TOL * max(float(w[-1]), 0.):
            raise QbarSingular(
                f"S_Q + C is singular: scaled eigenvalues in [{float(w[0]):.3e}, {float(w[-1]):.3e}]")
    return _factor_spd(Qbar, "S_Q + C", QbarSingular, equilibrate=True)


def _symmetrized(M, name):
    err = asymmetry(M)
    if err > SYM_TOL:
        raise NotSymmetric(f"{name} asymmetry {err:.3e} exceeds {SYM_TOL:.0e}")
    return 0.5 * (M + M.T)


def build_fitted_norms(sys, S_Q, S_V):
    """Builds the fitted norms of a saddle point system

    Args:
        sys (BlockSystem): the system
        S_Q: symmetric positive semidefinite seminorm matrix on Q
        S_V: symmetric positive semidefinite seminorm matrix on V

    Returns:
        FittedNorms: norms and their Cholesky factors

    Raises:
        QbarSingular: when :math:`S_Q + C` is not positive definite
        NonSPD: when :math:`\\bar{V}` is not positive definite
    """
    S_Q = dense(S_Q)
    S_V = dense(S_V)
    if S_Q.shape != (sys.n_Q, sys.n_Q) or S_V.shape != (sys.n_V, sys.n_V):
        raise DimensionMismatch(
            f"seminorms {S_Q.shape}, {S_V.shape} for system ({sys.n_V}, {sys.n_Q})")
    check_symmetric(S_Q, "S_Q")
    check_symmetric(S_V, "S_V")
    Qbar = S_Q + sys.C.todense()
    Qf = _qbar_factor(Qbar)
    B = sys.B.todense()
    Vbar = S_V + B.T @ Qf.solve(B)
    Vbar = _symmetrized(Vbar, "Vbar")
    Vf = cholesky_factor(Vbar)
    logger.debug("fitted norms built for n_V=%d, n_Q=%d", sys.n_V, sys.n_Q)
    return FittedNorms(S_Q, S_V, Qbar, Vbar, Qf, Vf)


def equivalent_norms(norms, Qbar=None, Vbar=None):
    """Replaces the fitted norms with norm equivalent SPD matrices

    The seminorms are kept; only the metrics used for measuring and
    preconditioning change.
    """
    if Qbar is not None:
        Qbar = dense(Qbar)
        check_symmetric(Qbar, "Qbar")
        norms = norms._replace(Qbar=Qbar, Qbar_factor=cholesky_factor(Qbar, equilibrate=True))
    if Vbar is not None:
        Vbar = dense(Vbar)
        check_symmetric(Vbar, "Vbar")
        norms = norms._replace(Vbar=Vbar, Vbar_factor=cholesky_factor(Vbar))
    return norms


def combined_norm(norms, x):
    """:math:`\\| (u, p) \\|^2 = u^T \\bar{V} u + p^T \\bar{Q} p`"""
    if hasattr(x, "u"):
        u, p = x.u, x.p
    else:
        x = jnp.asarray(x)
        if x.shape[0] != norms.n_V + norms.n_Q:
            raise DimensionMismatch(f"vector of length {x.shape[0]}")
        u, p = x[:norms.n_V], x[norms.n_V:]
    return jnp.sqrt(arr_vdot(u, norms.Vbar @ u) + arr_vdot(p, norms.Qbar @ p))
