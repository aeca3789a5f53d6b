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
import time
from typing import NamedTuple, Optional

import jax

from cr.saddle._src.linalg.cholesky import cholesky_factor
from cr.saddle._src.linalg.sparse import dense
from cr.saddle._src.linalg.operator import LinearOperator, matrix_operator, block_diag
from cr.saddle._src.linalg.minres import minres

logger = logging.getLogger(__name__)


class PrecondRun(NamedTuple):
    """One preconditioned MinRes solve"""
    example: int
    level: int
    param_point: str
    iterations: int
    converged: bool
    relative_residual: float
    wall_time: float
    """Seconds spent in MinRes (logged, not tabulated)"""
    seed: int
    hypotheses_ok: Optional[bool] = None

    def row(self):
        """Fields written to the preconditioning table"""
        d = self._asdict()
        del d["wall_time"]
        return d


def _solver(M, equilibrate=False):
    f = cholesky_factor(dense(M), equilibrate=equilibrate)
    return LinearOperator(times=f.solve, shape=(f.n, f.n))


def block_diag_preconditioner(norms, Vbar=None, Qbar=None):
    """:math:`\\mathcal{N}^{-1} = \\mathrm{diag}(\\bar{V}^{-1}, \\bar{Q}^{-1})`

    ``Vbar`` and ``Qbar`` replace the fitted norms by any norm equivalent SPD
    matrices; the factors of the fitted norms are reused otherwise.
    """
    V = _solver(Vbar) if Vbar is not None else LinearOperator(
        norms.Vbar_factor.solve, (norms.n_V, norms.n_V))
    Q = _solver(Qbar, equilibrate=True) if Qbar is not None else LinearOperator(
        norms.Qbar_factor.solve, (norms.n_Q, norms.n_Q))
    return block_diag([V, Q])


def mass_preconditioner(problem):
    """:math:`\\mathrm{diag}(\\bar{V}^{-1}, M_Q^{-1})` with the plain mass matrix
    on Q, which ignores the parameter weights of :math:`\\bar{Q}`"""
    return block_diag_preconditioner(problem.norms, Qbar=problem.metrics["q_mass"])


PRECONDITIONERS = {
    "fitted": lambda problem: block_diag_preconditioner(problem.norms),
    "mass": mass_preconditioner,
}
"""Named preconditioner builders accepted by :func:`precond_run`"""


def precond_run(problem, key, tol=1e-8, max_iter=1000, seed=0,
        preconditioner="fitted", hypotheses_ok=None):
    """Solves the problem with a random right hand side by preconditioned MinRes

    Args:
        problem (DiscreteProblem): the discretized example
        key: PRNG key of the right hand side
        tol (float): relative tolerance of MinRes
        max_iter (int): iteration limit
        seed (int): seed recorded with the run
        preconditioner: a name in :data:`PRECONDITIONERS` or a
            :class:`LinearOperator`
        hypotheses_ok: outcome of the stability hypotheses, recorded as is

    Returns:
        PrecondRun: iteration count and convergence flag
    """
    sys = problem.system
    A = matrix_operator(sys.matrix())
    if isinstance(preconditioner, str):
        if preconditioner not in PRECONDITIONERS:
            raise ValueError(f"unknown preconditioner {preconditioner!r}")
        P = PRECONDITIONERS[preconditioner](problem)
    else:
        P = preconditioner
    rhs = jax.random.normal(key, (sys.n,))
    start = time.perf_counter()
    sol = minres(A.times, P.times, rhs, rel_tol=tol, max_iter=max_iter)
    wall = time.perf_counter() - start
    run = PrecondRun(problem.example, problem.level, problem.label,
        sol.iterations, sol.converged, sol.relative_residual, wall, seed, hypotheses_ok)
    logger.info("example %d n=%d %s: %d iterations in %.3f s", run.example, run.level,
        run.param_point, run.iterations, wall)
    return run
