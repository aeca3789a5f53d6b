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

"""Reference inf-sup constants of the Stokes and Darcy element pairs, and
the comparison metrics behind the robustness remarks of the examples"""

import logging
import math
from typing import NamedTuple

import numpy as np
import jax.numpy as jnp

from cr.saddle._src.linalg.cholesky import cholesky_factor
from cr.saddle._src.linalg.eig import gen_sym_eig
from cr.saddle._src.mesh.square import build_unit_square_mesh
from cr.saddle._src.fem.space import build_space
from cr.saddle._src.fem.assembly import FormSpec, assemble
from cr.saddle._src.fem.constraints import reduce, free_embedding
from cr.saddle._src.analysis.constants import dominance_ratio
from .examples import _h1, _hdiv, _bdiag, _asm

logger = logging.getLogger(__name__)

STOKES_PAIRS = {
    "P2-P0": ("P0", dict(zero_mean=True)),
    "P2-P1": ("P1", dict(zero_mean=True)),
    "P2-P1D": ("P1", dict(dirichlet=True)),
}

DARCY_PAIRS = {
    "RT0-P0": (True, dict(zero_mean=True)),
    "RT0N-P0": (False, dict()),
}


class ReferenceInfSup(NamedTuple):
    """Discrete inf-sup constants in the full H(div) and H1 norms"""
    beta_d_h: float
    """RT0 against P0"""
    beta_s_h: float
    """P2-vector against the configured pressure space"""
    level: int = 0


def _pair_inf_sup(V, Q, M_V):
    if V.dim == 0 or Q.dim == 0:
        logger.warning("degenerate pair %s/%s on level %d", V.family, Q.family, V.mesh.n)
        return math.nan
    B = jnp.asarray(reduce(assemble(FormSpec("div_coupling", 1., V, Q)), Q, V).toarray())
    M_Q = reduce(assemble(FormSpec("mass", 1., Q)), Q).todense()
    Vf = cholesky_factor(jnp.asarray(M_V.toarray()))
    G = B @ Vf.solve(B.T)
    theta = gen_sym_eig(0.5 * (G + G.T), M_Q, mode="extremal", spd_metric=True).min
    return float(np.sqrt(max(theta, 0.)))


def discrete_reference_infsup(n, stokes_pair="P2-P0", darcy_pair="RT0-P0"):
    """Computes the discrete Darcy and Stokes inf-sup constants on level n

    .. math::

        \\beta_h = \\inf_q \\sup_v \\frac{(\\mathrm{div}\\, v, q)}{\\| v \\| \\| q \\|}

    with the full :math:`H(\\mathrm{div})` norm for RT0 and the full
    :math:`H^1` norm for P2-vector.

    Args:
        n (int): mesh level
        stokes_pair (str): P2-P0, P2-P1 (mean zero) or P2-P1D (Dirichlet)
        darcy_pair (str): RT0-P0 (normal traces fixed, mean zero P0) or
            RT0N-P0 (no boundary condition, full P0)

    Returns:
        ReferenceInfSup: NaN for a side without free DOFs
    """
    if stokes_pair not in STOKES_PAIRS or darcy_pair not in DARCY_PAIRS:
        raise ValueError(f"unknown element pair {stokes_pair!r} or {darcy_pair!r}")
    mesh = build_unit_square_mesh(n)
    bc, flags = DARCY_PAIRS[darcy_pair]
    W = build_space(mesh, "RT0", dirichlet=bc)
    beta_d = _pair_inf_sup(W, build_space(mesh, "P0", **flags), _hdiv(W))
    family, flags = STOKES_PAIRS[stokes_pair]
    V = build_space(mesh, "P2-vector", dirichlet=True)
    beta_s = _pair_inf_sup(V, build_space(mesh, family, **flags), _h1(V))
    return ReferenceInfSup(beta_d, beta_s, n)


def example2_h1_bound(problem):
    """Smallest c with :math:`\\bar{V} \\preceq c \\| \\cdot \\|_1^2` (at most 2)"""
    return dominance_ratio(problem.metrics["v_metric"], problem.norms.Vbar)


def example5_remark_metric(problem):
    """Comparison metric of example 5 for c0 = alpha^2 / lam

    .. math::

        R = \\mathrm{diag}(\\Pi_0^T M \\Pi_0 + \\lambda^{-1} M,\\;
        \\alpha^2 \\lambda^{-1} M_F + \\kappa K_F)

    with :math:`\\bar{Q} \\succeq \\tfrac14 R`.
    """
    p = problem.params
    QT, QF = problem.spaces["p_T"], problem.spaces["p_F"]
    M = _asm("mass", QT)
    K = _asm("grad_grad_scalar", QT)
    S_T = np.asarray(problem.norms.S_Q)[:QT.dim, :QT.dim]
    RT = S_T + M.toarray() / p.lam
    RF = (p.alpha_bw ** 2 / p.lam) * reduce(M, QF).toarray() + p.kappa * reduce(K, QF).toarray()
    return _bdiag(RT, RF).toarray()


def example7_comparison_metric(problem):
    """Comparison metric of example 7 with :math:`\\bar{V} \\succeq \\tfrac13 R`

    .. math::

        R = \\mathrm{diag}(\\varepsilon:\\varepsilon + \\lambda_\\mu \\mathrm{div}\\,\\mathrm{div},\\;
        R_p^{-1} M + (R_p + (1 + \\lambda_\\mu)^{-1} + \\alpha_p)^{-1} \\mathrm{div}\\,\\mathrm{div})
    """
    p = problem.params
    V, W = problem.spaces["u"], problem.spaces["w"]
    s = p.R_p + 1. / (1. + p.lambda_mu) + p.alpha_p
    RV = reduce(_asm("eps_eps", V), V).toarray() + p.lambda_mu * reduce(_asm("div_div", V), V).toarray()
    RW = reduce(_asm("vector_mass", W), W).toarray() / p.R_p + reduce(_asm("div_div", W), W).toarray() / s
    return _bdiag(RV, RW).toarray()


def example4_to_example5(n, params):
    """Change of variables from the example 5 pressures to the example 4 ones

    :math:`p_S = p_T - \\alpha p_F` and :math:`p_F^{(4)} = \\alpha p_F`, so that
    with example 4 built on full P1 solid pressures and the parameters
    c0 / alpha^2, kappa / alpha^2 every Q block of example 5 equals
    :math:`X^T (\\cdot) X` of example 4 and B5 = X^T B4.

    Returns:
        (np.ndarray, ExampleParams): X and the example 4 parameters
    """
    mesh = build_unit_square_mesh(n)
    QT = build_space(mesh, "P1")
    QF = build_space(mesh, "P1", dirichlet=True)
    a = params.alpha_bw
    E = free_embedding(QF).toarray()
    X = np.block([[np.eye(QT.ndof), -a * E], [np.zeros((QF.dim, QT.ndof)), a * np.eye(QF.dim)]])
    return X, params._replace(c0=params.c0 / a ** 2, kappa=params.kappa / a ** 2)
