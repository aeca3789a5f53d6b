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

"""Stability constants of a saddle point system in its fitted norms

Every constant is an extremal eigenvalue of a symmetric pencil, solved
densely by :func:`gen_sym_eig`.
"""

import logging
from typing import NamedTuple

import jax
import jax.numpy as jnp

from cr.nimble import arr_vdot

from cr.saddle._src.errors import EmptyRange
from cr.saddle._src.linalg.sparse import dense
from cr.saddle._src.linalg.cholesky import cholesky_factor
from cr.saddle._src.linalg.eig import gen_sym_eig

logger = logging.getLogger(__name__)


def coercivity_constant(sys, norms):
    """:math:`\\underline{C}_a = \\inf_u a(u, u) / |u|_V^2` over :math:`|u|_V > 0`

    Raises:
        EmptyRange: when :math:`S_V` is numerically zero
    """
    return gen_sym_eig(sys.A, norms.S_V, mode="extremal").min


def continuity_constant_a(sys, norms):
    """:math:`\\overline{C}_a = \\sup_u a(u, u) / \\| u \\|_{\\bar{V}}^2`"""
    return gen_sym_eig(sys.A, norms.Vbar, mode="extremal", spd_metric=True).max


def _schur(B, factor):
    """:math:`B M^{-1} B^T` symmetrized"""
    G = B @ factor.solve(B.T)
    return 0.5 * (G + G.T)


def small_inf_sup(sys, norms):
    """Inf-sup constant of :math:`b` measured in :math:`\\bar{V}` and the seminorm :math:`S_Q`

    .. math::

        \\underline{\\beta} = \\inf_{q} \\sup_{v} \\frac{b(v, q)}{\\| v \\|_{\\bar{V}} | q |_Q}
        = \\sqrt{\\theta_{\\min}(B \\bar{V}^{-1} B^T, S_Q)}

    The infimum runs over all q with :math:`|q|_Q > 0`.

    Raises:
        EmptyRange: when :math:`S_Q` is numerically zero or Q is trivial
    """
    if sys.n_Q == 0:
        raise EmptyRange("no constraint block")
    G = _schur(sys.B.todense(), norms.Vbar_factor)
    theta = gen_sym_eig(G, norms.S_Q, mode="extremal").min
    return float(jnp.sqrt(max(theta, 0.)))


def babuska_constants(sys, norms):
    """Inf-sup and continuity constants of :math:`\\mathcal{A}` in :math:`\\mathcal{N}`

    Returns:
        (float, float): :math:`\\min |\\theta|` and :math:`\\max |\\theta|`
        over the eigenvalues of the pencil :math:`(\\mathcal{A}, \\mathcal{N})`
    """
    theta = jnp.abs(gen_sym_eig(sys.matrix(), norms.metric(), spd_metric=True).eigenvalues)
    return float(jnp.min(theta)), float(jnp.max(theta))


def brezzi_inf_sup(sys, q_metric):
    """Classical inf-sup constant for :math:`c \\equiv 0` with a norm
    :math:`M_Q` on Q and :math:`V_B = A + B^T M_Q^{-1} B` on V"""
    M_Q = dense(q_metric)
    Qf = cholesky_factor(M_Q)
    B = sys.B.todense()
    V_B = sys.A.todense() + B.T @ Qf.solve(B)
    Vf = cholesky_factor(0.5 * (V_B + V_B.T))
    theta = gen_sym_eig(_schur(B, Vf), M_Q, mode="extremal", spd_metric=True).min
    return float(jnp.sqrt(max(theta, 0.)))


def dominance_ratio(M, R):
    """Smallest c with :math:`R \\preceq c M` for SPD :math:`M`"""
    return gen_sym_eig(R, M, mode="extremal", spd_metric=True).max


class ContinuityCheck(NamedTuple):
    """Largest observed ratios of the off diagonal forms"""
    b_ratio: float
    """max :math:`|b(v, q)| / (\\| v \\|_{\\bar{V}} \\| q \\|_{\\bar{Q}})`"""
    c_ratio: float
    """max :math:`|c(p, q)| / (\\| p \\|_{\\bar{Q}} \\| q \\|_{\\bar{Q}})`"""
    samples: int

    @property
    def ok(self):
        return self.b_ratio <= 1. + 1e-10 and self.c_ratio <= 1. + 1e-10


def continuity_checks(sys, norms, key, samples=20):
    """Evaluates the unit continuity of :math:`b` and :math:`c` on random draws"""
    B, C = sys.B.todense(), sys.C.todense()
    Vbar, Qbar = norms.Vbar, norms.Qbar

    def norm(M, x):
        return jnp.sqrt(arr_vdot(x, M @ x))

    b_ratio, c_ratio = 0., 0.
    for k in jax.random.split(key, samples):
        k1, k2, k3 = jax.random.split(k, 3)
        v = jax.random.normal(k1, (sys.n_V,))
        q = jax.random.normal(k2, (sys.n_Q,))
        p = jax.random.normal(k3, (sys.n_Q,))
        if sys.n_Q:
            b = jnp.abs(arr_vdot(q, B @ v)) / (norm(Vbar, v) * norm(Qbar, q))
            c = jnp.abs(arr_vdot(q, C @ p)) / (norm(Qbar, p) * norm(Qbar, q))
            b_ratio = max(b_ratio, float(b))
            c_ratio = max(c_ratio, float(c))
    logger.debug("continuity ratios b %.6f c %.6f", b_ratio, c_ratio)
    return ContinuityCheck(b_ratio, c_ratio, samples)
