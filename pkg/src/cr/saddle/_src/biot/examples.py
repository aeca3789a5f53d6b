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

"""Discrete saddle point problems of poroelasticity on the unit square

Every builder returns the block system with constrained spaces already
eliminated (Dirichlet DOFs removed, zero mean spaces expressed in the
basis of :func:`mean_zero_basis`) together with its fitted norms.
"""

import logging
from typing import NamedTuple, Dict

import numpy as np
import scipy.sparse as sp

from cr.saddle._src.linalg.sparse import SparseMatrix, from_scipy, from_dense
from cr.saddle._src.mesh.square import Mesh, build_unit_square_mesh
from cr.saddle._src.fem.space import FESpace, build_space
from cr.saddle._src.fem.assembly import FormSpec, assemble
from cr.saddle._src.fem.constraints import (
    reduce, free_embedding, mean_zero_basis, mean_zero_projector)
from cr.saddle._src.saddle.system import BlockSystem, block_system
from cr.saddle._src.saddle.fitted import FittedNorms, build_fitted_norms
from .params import ExampleParams

logger = logging.getLogger(__name__)


class DiscreteProblem(NamedTuple):
    """A discretized example with its fitted norms"""
    example: int
    """Example number 1 to 7"""
    level: int
    """Mesh subdivisions per side"""
    params: ExampleParams
    mesh: Mesh
    spaces: Dict[str, FESpace]
    """Spaces of the unknowns in block order"""
    system: BlockSystem
    norms: FittedNorms
    metrics: Dict[str, np.ndarray]
    """Reference matrices: ``q_mass`` (L2 on Q) and ``v_metric`` (H1 or H(div) on V)"""

    @property
    def label(self):
        return self.params.label(self.example)

    def __str__(self):
        return (f"Example {self.example} n={self.level} {self.label}: "
            f"n_V={self.system.n_V}, n_Q={self.system.n_Q}")


def _asm(kind, trial, test=None, coef=1.):
    return assemble(FormSpec(kind, coef, trial, test))


def _sp(M):
    return M.to_scipy() if isinstance(M, SparseMatrix) else sp.csr_matrix(M)


def _bdiag(*blocks):
    return sp.block_diag([_sp(b) for b in blocks], format="csr")


def _arr(M):
    return M.toarray() if hasattr(M, "toarray") else np.asarray(M)


def _sym(M):
    M = _arr(M)
    return from_dense(0.5 * (M + M.T), symmetric=True, psd=True)


def _h1(V):
    return reduce(_asm("stiffness", V), V).to_scipy() + reduce(_asm("vector_mass", V), V).to_scipy()


def _hdiv(V):
    return reduce(_asm("vector_mass", V), V).to_scipy() + reduce(_asm("div_div", V), V).to_scipy()


def _problem(example, n, params, mesh, spaces, A, B, C, S_Q, S_V, metrics, labels):
    sys = block_system(_sym(A), from_scipy(_sp(B)), _sym(C), labels)
    norms = build_fitted_norms(sys, _arr(S_Q), _arr(S_V))
    problem = DiscreteProblem(example, n, params, mesh, spaces, sys, norms,
        {k: _arr(v) for k, v in metrics.items()})
    logger.info("built %s", problem)
    return problem


def build_example1(n, params=None):
    """Mixed Darcy problem with perturbation size t on H(div) x L2

    a(u, v) = (u, v), b(u, q) = (div u, q), c(p, q) = t (p, q);
    seminorms |q|_Q = ||q||, |v|_V = ||v||.
    """
    params = (params or ExampleParams()).validate(1)
    mesh = build_unit_square_mesh(n)
    V = build_space(mesh, "RT0")
    Q = build_space(mesh, "P0")
    A = reduce(_asm("vector_mass", V), V)
    B = reduce(_asm("div_coupling", V, Q), Q, V)
    M = reduce(_asm("mass", Q), Q)
    return _problem(1, n, params, mesh, {"u": V, "p": Q},
        A, B, M.scale(params.t), M, A,
        {"q_mass": M, "v_metric": _hdiv(V)}, ("u", "p"))


def build_example2(n, kappa=None, params=None):
    """Stokes with a pressure stabilization kappa (grad p, grad q)

    P2-vector with Dirichlet conditions against mean zero P1.
    """
    params = params or ExampleParams()
    if kappa is not None:
        params = params._replace(kappa=kappa)
    params.validate(2)
    mesh = build_unit_square_mesh(n)
    V = build_space(mesh, "P2-vector", dirichlet=True)
    Q = build_space(mesh, "P1", zero_mean=True)
    A = reduce(_asm("stiffness", V), V)
    B = reduce(_asm("div_coupling", V, Q, coef=-1.), Q, V)
    M = reduce(_asm("mass", Q), Q)
    C = reduce(_asm("grad_grad_scalar", Q, coef=params.kappa), Q)
    return _problem(2, n, params, mesh, {"u": V, "p": Q},
        A, B, C, M, A, {"q_mass": M, "v_metric": _h1(V)}, ("u", "p"))


def build_example3(n, params=None):
    """Two field Biot: elasticity with eps:eps + lam div div, pressure with c0 and kappa

    |q|_Q^2 = eta ||q||^2 with eta = alpha^2 / (1 + lam) unless set.
    """
    params = (params or ExampleParams()).validate(3)
    mesh = build_unit_square_mesh(n)
    V = build_space(mesh, "P2-vector", dirichlet=True)
    Q = build_space(mesh, "P1", dirichlet=True)
    A = reduce(_asm("eps_eps", V), V).to_scipy() + reduce(_asm("div_div", V, coef=params.lam), V).to_scipy()
    B = reduce(_asm("div_coupling", V, Q, coef=-params.alpha_bw), Q, V)
    M = reduce(_asm("mass", Q), Q)
    K = reduce(_asm("grad_grad_scalar", Q), Q)
    C = params.c0 * M.to_scipy() + params.kappa * K.to_scipy()
    return _problem(3, n, params, mesh, {"u": V, "p": Q},
        A, B, C, M.scale(params.eta_value), A,
        {"q_mass": M, "v_metric": _h1(V)}, ("u", "p"))


def _solid_fluid_blocks(mesh, V, solid, fluid):
    """Divergence rows and mass/stiffness pieces for a (solid, fluid) pressure pair"""
    P1 = build_space(mesh, "P1")
    D = _asm("div_coupling", V, P1, coef=-1.)
    B = sp.vstack((reduce(D, solid, V).to_scipy(), reduce(D, fluid, V).to_scipy()), format="csr")
    M = _asm("mass", P1)
    K = _asm("grad_grad_scalar", P1)
    return P1, B, M, K


def build_example4(n, params=None, zero_mean_solid=True, seminorm="fitted"):
    """Three field Biot with total pressure split into solid and fluid parts

    Unknowns u, p_S (mean zero P1 unless ``zero_mean_solid`` is False) and
    p_F (P1 with Dirichlet conditions). c is diagonal,
    lam^-1 ||p_S||^2 + c0 ||p_F||^2 + kappa |p_F|_1^2, and the Q seminorm is
    ||Pi_0 (p_S + p_F)||^2. ``seminorm="diagonal"`` uses ||p_S||^2 + ||p_F||^2
    instead, which is not robust for large lam.
    """
    params = (params or ExampleParams()).validate(4)
    if seminorm not in ("fitted", "diagonal"):
        raise ValueError(f"unknown seminorm {seminorm!r}")
    mesh = build_unit_square_mesh(n)
    V = build_space(mesh, "P2-vector", dirichlet=True)
    QS = build_space(mesh, "P1", zero_mean=zero_mean_solid)
    QF = build_space(mesh, "P1", dirichlet=True)
    P1, B, M, K = _solid_fluid_blocks(mesh, V, QS, QF)
    A = reduce(_asm("eps_eps", V), V)
    MS, MF, KF = reduce(M, QS), reduce(M, QF), reduce(K, QF)
    C = _bdiag(MS.scale(1. / params.lam), params.c0 * MF.to_scipy() + params.kappa * KF.to_scipy())
    if seminorm == "fitted":
        PS = mean_zero_basis(QS) if zero_mean_solid else np.eye(QS.ndof)
        Pi0 = mean_zero_projector(P1).toarray()
        J = Pi0 @ np.hstack((PS, free_embedding(QF).toarray()))
        S_Q = J.T @ M.toarray() @ J
    else:
        S_Q = _bdiag(MS, MF)
    return _problem(4, n, params, mesh, {"u": V, "p_S": QS, "p_F": QF},
        A, B, C, S_Q, A, {"q_mass": _bdiag(MS, MF), "v_metric": _h1(V)},
        ("u", "p"))


def build_example5(n, params=None):
    """Three field Biot with total pressure p_T (full P1) and fluid pressure p_F

    c(p, q) = lam^-1 (p_T - alpha p_F, q_T - alpha q_F) + c0 (p_F, q_F)
    + kappa (grad p_F, grad q_F); the Q seminorm is ||Pi_0 q_T||^2.
    """
    params = (params or ExampleParams()).validate(5)
    mesh = build_unit_square_mesh(n)
    V = build_space(mesh, "P2-vector", dirichlet=True)
    QT = build_space(mesh, "P1")
    QF = build_space(mesh, "P1", dirichlet=True)
    P1, _, M, K = _solid_fluid_blocks(mesh, V, QT, QF)
    D = reduce(_asm("div_coupling", V, P1, coef=-1.), QT, V).to_scipy()
    B = sp.vstack((D, sp.csr_matrix((QF.dim, V.dim))), format="csr")
    A = reduce(_asm("eps_eps", V), V)
    E = free_embedding(QF).toarray()
    Mfull = M.toarray()
    G = np.hstack((np.eye(QT.ndof), -params.alpha_bw * E))
    MF, KF = reduce(M, QF), reduce(K, QF)
    C = G.T @ Mfull @ G / params.lam
    C[QT.ndof:, QT.ndof:] += params.c0 * MF.toarray() + params.kappa * KF.toarray()
    Pi0 = mean_zero_projector(P1).toarray()
    S_Q = _bdiag(Pi0.T @ Mfull @ Pi0, sp.csr_matrix((QF.dim, QF.dim)))
    return _problem(5, n, params, mesh, {"u": V, "p_T": QT, "p_F": QF},
        A, B, C, S_Q, A, {"q_mass": _bdiag(M, MF), "v_metric": _h1(V)},
        ("u", "p"))


def build_example6(n, params=None):
    """Four field Biot: displacement, Darcy flux, total and fluid pressure

    a = 2 mu (eps(u), eps(v)) + (tau kappa)^-1 (w, z);
    b = (div v, q_T) - (div z, q);
    c = lam^-1 (p_T + alpha p, q_T + alpha q) + c0 (p, q);
    seminorms (2 mu)^-1 ||q_T||^2 + tau kappa ||q||^2 and a itself.
    """
    params = (params or ExampleParams()).validate(6)
    mesh = build_unit_square_mesh(n)
    V = build_space(mesh, "P2-vector", dirichlet=True)
    W = build_space(mesh, "RT0", dirichlet=True)
    Q = build_space(mesh, "P0", zero_mean=True)
    tk = params.tau * params.kappa
    A = _bdiag(reduce(_asm("eps_eps", V, coef=2. * params.mu), V),
        reduce(_asm("vector_mass", W, coef=1. / tk), W))
    B = _bdiag(reduce(_asm("div_coupling", V, Q), Q, V),
        reduce(_asm("div_coupling", W, Q, coef=-1.), Q, W))
    M = reduce(_asm("mass", Q), Q).toarray()
    G = np.hstack((np.eye(Q.dim), params.alpha_bw * np.eye(Q.dim)))
    C = G.T @ M @ G / params.lam
    C[Q.dim:, Q.dim:] += params.c0 * M
    S_Q = _bdiag(M / (2. * params.mu), tk * M)
    return _problem(6, n, params, mesh, {"u": V, "w": W, "p_T": Q, "p": Q},
        A, B, C, S_Q, A, {"q_mass": _bdiag(M, M), "v_metric": _bdiag(_h1(V), _hdiv(W))},
        ("(u, w)", "(p_T, p)"))


def build_example7(n, params=None):
    """Scaled three field Biot: displacement, Darcy flux and pressure

    a = (eps(u), eps(v)) + lambda_mu (div u, div v) + R_p^-1 (w, z);
    b = -(div v + div z, q); c = alpha_p (p, q);
    |q|_Q^2 = (R_p + 1 / (1 + lambda_mu)) ||q||^2 and |v|_V given by a.
    """
    params = (params or ExampleParams()).validate(7)
    mesh = build_unit_square_mesh(n)
    V = build_space(mesh, "P2-vector", dirichlet=True)
    W = build_space(mesh, "RT0", dirichlet=True)
    Q = build_space(mesh, "P0", zero_mean=True)
    A = _bdiag(reduce(_asm("eps_eps", V), V).to_scipy()
        + reduce(_asm("div_div", V, coef=params.lambda_mu), V).to_scipy(),
        reduce(_asm("vector_mass", W, coef=1. / params.R_p), W))
    B = sp.hstack((reduce(_asm("div_coupling", V, Q, coef=-1.), Q, V).to_scipy(),
        reduce(_asm("div_coupling", W, Q, coef=-1.), Q, W).to_scipy()), format="csr")
    M = reduce(_asm("mass", Q), Q)
    C = M.scale(params.alpha_p)
    S_Q = M.scale(params.R_p + 1. / (1. + params.lambda_mu))
    return _problem(7, n, params, mesh, {"u": V, "w": W, "p": Q},
        A, B, C, S_Q, A, {"q_mass": M, "v_metric": _bdiag(_h1(V), _hdiv(W))},
        ("(u, w)", "p"))


_BUILDERS = {
    1: build_example1,
    3: build_example3,
    4: build_example4,
    5: build_example5,
    6: build_example6,
    7: build_example7,
}


def build_example(example_id, n, params=None, **options):
    """Dispatches to ``build_example<k>``"""
    if example_id == 2:
        return build_example2(n, params=params)
    if example_id not in _BUILDERS:
        raise ValueError(f"unknown example {example_id}")
    return _BUILDERS[example_id](n, params=params, **options)


def problem_size(example_id, n):
    """Numbers of unknowns (n_V, n_Q) of an example on level n, without building it"""
    if example_id not in (1, 2, 3, 4, 5, 6, 7):
        raise ValueError(f"unknown example {example_id}")
    if n < 1:
        raise ValueError(f"level must be positive, got {n}")
    p1 = (n + 1) ** 2
    p1_bc = (n - 1) ** 2
    p0 = 2 * n * n
    rt0 = 3 * n * n + 2 * n
    rt0_bc = 3 * n * n - 2 * n
    p2v_bc = 2 * (p1_bc + rt0_bc)
    sizes = {
        1: (rt0, p0),
        2: (p2v_bc, p1 - 1),
        3: (p2v_bc, p1_bc),
        4: (p2v_bc, p1 - 1 + p1_bc),
        5: (p2v_bc, p1 + p1_bc),
        6: (p2v_bc + rt0_bc, 2 * (p0 - 1)),
        7: (p2v_bc + rt0_bc, p0 - 1),
    }
    return sizes[example_id]
