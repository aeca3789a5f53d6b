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

from jax import lax
import jax.numpy as jnp

from cr.nimble import arr_vdot

from cr.saddle._src.errors import BreakdownDetected

logger = logging.getLogger(__name__)

BREAKDOWN_TOL = 1e-14


def _identity(x):
    return x


class MinResState(NamedTuple):
    """State of the preconditioned MinRes iterations"""
    x: jnp.ndarray
    """Current iterate"""
    r1: jnp.ndarray
    """Previous Lanczos residual"""
    r2: jnp.ndarray
    """Current Lanczos residual"""
    y: jnp.ndarray
    """Preconditioned Lanczos residual"""
    w: jnp.ndarray
    """Current search direction"""
    w2: jnp.ndarray
    """Previous search direction"""
    beta: float
    """Current Lanczos coefficient"""
    oldb: float
    """Previous Lanczos coefficient"""
    dbar: float
    epsln: float
    phibar: float
    """Preconditioned residual norm"""
    cs: float
    """Cosine of the last Givens rotation"""
    sn: float
    """Sine of the last Givens rotation"""
    anorm: float
    """Largest Lanczos coefficient seen, a scale for A"""
    iterations: int
    """Number of iterations completed"""
    converged: bool
    breakdown: bool


class MinResSolution(NamedTuple):
    """Solution of :math:`A x = b` by MinRes"""
    x: jnp.ndarray
    """The solution"""
    iterations: int
    """Number of iterations it took"""
    relative_residual: float
    """Preconditioned residual norm relative to the initial one"""
    converged: bool
    """Whether the requested tolerance was reached"""

    def __str__(self):
        s = []
        s.append(f"iterations: {self.iterations}")
        s.append(f"relative residual: {self.relative_residual:.3e}")
        s.append(f"converged: {self.converged}")
        return "\n".join(s)


def solve(apply_A, b, apply_Pinv=_identity, rel_tol=1e-8, max_iter=1000):
    """Solves :math:`A x = b` for symmetric (possibly indefinite) :math:`A`
    with preconditioned MinRes

    The preconditioner :math:`P` must be symmetric positive definite; the
    iterations minimise :math:`\\| b - A x \\|_{P^{-1}}` over the Krylov space
    and stop once it falls below ``rel_tol`` times its initial value.

    Args:
        apply_A: callable computing :math:`A v`
        b: right hand side
        apply_Pinv: callable computing :math:`P^{-1} v`
        rel_tol (float): relative tolerance on the preconditioned residual
        max_iter (int): iteration limit

    Returns:
        MinResSolution: solution with the iteration count

    Raises:
        BreakdownDetected: when a Lanczos coefficient or a Givens rotation
            vanishes before convergence
    """
    b = jnp.asarray(b)
    y0 = apply_Pinv(b)
    beta1 = jnp.sqrt(arr_vdot(b, y0))
    if float(beta1) == 0.:
        return MinResSolution(jnp.zeros_like(b), 0, 0., True)
    stop = rel_tol * beta1
    tiny = BREAKDOWN_TOL * beta1
    eps = jnp.finfo(b.dtype).eps

    def init():
        z = jnp.zeros_like(b)
        return MinResState(x=z, r1=b, r2=b, y=y0, w=z, w2=z,
            beta=beta1, oldb=jnp.zeros_like(beta1), dbar=jnp.zeros_like(beta1),
            epsln=jnp.zeros_like(beta1), phibar=beta1,
            cs=-jnp.ones_like(beta1), sn=jnp.zeros_like(beta1), anorm=jnp.zeros_like(beta1),
            iterations=0, converged=False, breakdown=False)

    def body(state):
        v = state.y / state.beta
        y = apply_A(v)
        y = lax.cond(state.iterations > 0,
            lambda y: y - (state.beta / state.oldb) * state.r1,
            lambda y: y, y)
        alfa = arr_vdot(v, y)
        y = y - (alfa / state.beta) * state.r2
        r1 = state.r2
        r2 = y
        y = apply_Pinv(r2)
        oldb = state.beta
        beta = jnp.sqrt(jnp.maximum(arr_vdot(r2, y), 0.))
        oldeps = state.epsln
        delta = state.cs * state.dbar + state.sn * alfa
        gbar = state.sn * state.dbar - state.cs * alfa
        epsln = state.sn * beta
        dbar = -state.cs * beta
        anorm = jnp.maximum(state.anorm, jnp.maximum(jnp.abs(alfa), beta))
        gamma_raw = jnp.sqrt(gbar**2 + beta**2)
        # a vanishing rotation means A is singular on the Krylov space
        singular = gamma_raw <= eps * anorm
        gamma = jnp.maximum(gamma_raw, eps)
        cs = gbar / gamma
        sn = beta / gamma
        phi = cs * state.phibar
        phibar = sn * state.phibar
        w1 = state.w2
        w2 = state.w
        w = (v - oldeps * w1 - delta * w2) / gamma
        x = state.x + phi * w
        converged = jnp.logical_and(phibar <= stop, ~singular)
        breakdown = jnp.logical_or(singular, jnp.logical_and(~converged, beta <= tiny))
        return MinResState(x=x, r1=r1, r2=r2, y=y, w=w, w2=w2,
            beta=beta, oldb=oldb, dbar=dbar, epsln=epsln, phibar=phibar,
            cs=cs, sn=sn, anorm=anorm, iterations=state.iterations + 1,
            converged=converged, breakdown=breakdown)

    def cond(state):
        active = jnp.logical_and(~state.converged, ~state.breakdown)
        return jnp.logical_and(active, state.iterations < max_iter)

    state = lax.while_loop(cond, body, init())
    if bool(state.breakdown):
        raise BreakdownDetected(
            f"Lanczos breakdown after {int(state.iterations)} iterations")
    sol = MinResSolution(state.x, int(state.iterations),
        float(state.phibar / beta1), bool(state.converged))
    if not sol.converged:
        logger.warning("MinRes stopped at %d iterations with relative residual %.3e",
            sol.iterations, sol.relative_residual)
    else:
        logger.debug("MinRes converged in %d iterations", sol.iterations)
    return sol


def minres(apply_A, apply_Pinv, rhs, rel_tol=1e-8, max_iter=1000):
    """Argument order used by the analysis layer: operator, preconditioner, rhs"""
    return solve(apply_A, rhs, apply_Pinv=apply_Pinv, rel_tol=rel_tol, max_iter=max_iter)
