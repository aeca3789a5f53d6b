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

"""Explicit test functions of the fitted norm stability estimate

For :math:`x = (u, p)` the test function is

.. math::

    y = (\\delta u + u_0, -\\delta p + p_0), \\quad p_0 = \\bar{Q}^{-1} B u

where :math:`u_0` is the smallest element in :math:`\\bar{V}` with
:math:`b(u_0, p) = |p|_Q^2`. The estimate guarantees
:math:`\\langle \\mathcal{A} x, y \\rangle \\geq \\tfrac14 \\| x \\|^2` and
:math:`\\| y \\| \\leq \\sqrt{2 \\max\\{\\delta^2 + 1, \\underline{\\beta}^{-2} + \\delta^2\\}} \\| x \\|`.
"""

import logging
import math
from typing import NamedTuple

import jax
import jax.numpy as jnp

from cr.nimble import arr_vdot

from cr.saddle._src.errors import HypothesisFailed
from cr.saddle._src.saddle.system import split
from cr.saddle._src.saddle.fitted import combined_norm
from .theorem import theoretical_bound

logger = logging.getLogger(__name__)

WITNESS_TOL = 1e-10

# |p|_Q below this fraction of the full norm counts as zero
_SEMINORM_FLOOR = 1e-14


class WitnessResult(NamedTuple):
    """Outcome of one explicit test function construction"""
    x: jnp.ndarray
    y: jnp.ndarray
    coercivity_ratio: float
    """:math:`\\langle \\mathcal{A} x, y \\rangle / \\| x \\|^2`, at least 1/4"""
    boundedness_ratio: float
    """:math:`\\| y \\| / \\| x \\|`"""
    boundedness_limit: float
    """Guaranteed limit of the boundedness ratio"""
    u0_identity_error: float
    """:math:`|b(u_0, p) - |p|_Q^2| / |p|_Q^2` (0 when :math:`|p|_Q = 0`)"""
    u0_norm_ratio: float
    """:math:`\\underline{\\beta} \\| u_0 \\|_{\\bar{V}} / |p|_Q`, at most 1"""

    @property
    def ok(self):
        return (self.coercivity_ratio >= 0.25 - WITNESS_TOL
            and self.boundedness_ratio <= self.boundedness_limit * (1. + WITNESS_TOL))


def _constants(constants):
    if hasattr(constants, "C_a_bar"):
        bc = theoretical_bound(constants.C_a_bar, constants.C_a_under, constants.beta_under)
        return bc.delta, bc.limit, constants.beta_under
    delta, limit, beta = constants
    return delta, limit, beta


def witness_check(sys, norms, x, constants):
    """Builds the test function of ``x`` and evaluates both ratios

    Args:
        sys (BlockSystem): the system
        norms (FittedNorms): its fitted norms
        x: stacked vector or :class:`CombinedVector`
        constants: a :class:`StabilityReport` (or a tuple of delta, limit, beta)

    Returns:
        WitnessResult: the ratios

    Raises:
        HypothesisFailed: for x = 0, or when :math:`|p|_Q > 0` while
            :math:`B^T p` vanishes in :math:`\\bar{V}^{-1}`
    """
    delta, limit, beta = _constants(constants)
    x = split(sys, x)
    u, p = x.u, x.p
    x_norm = float(combined_norm(norms, x))
    if x_norm == 0.:
        raise HypothesisFailed("the witness is undefined for x = 0")
    B = sys.B.todense()
    Btp = B.T @ p
    p_semi = float(arr_vdot(p, norms.S_Q @ p))
    p_full = float(arr_vdot(p, norms.Qbar @ p)) if sys.n_Q else 0.
    if p_semi > _SEMINORM_FLOOR * p_full:
        g = norms.Vbar_factor.solve(Btp)
        pGp = float(arr_vdot(Btp, g))
        if pGp <= 0.:
            raise HypothesisFailed("b(., p) vanishes while |p|_Q > 0")
        u0 = (p_semi / pGp) * g
        identity_error = abs(float(arr_vdot(Btp, u0)) - p_semi) / p_semi
        u0_norm = math.sqrt(max(float(arr_vdot(u0, norms.Vbar @ u0)), 0.))
        norm_ratio = beta * u0_norm / math.sqrt(p_semi) if not math.isnan(beta) else 0.
    else:
        u0 = jnp.zeros_like(u)
        identity_error, norm_ratio = 0., 0.
    p0 = norms.Qbar_factor.solve(B @ u)
    v = delta * u + u0
    q = -delta * p + p0
    y = jnp.concatenate((v, q))
    xs = x.join()
    Ax = sys.matrix() @ xs
    coercivity = float(arr_vdot(Ax, y)) / x_norm ** 2
    boundedness = float(combined_norm(norms, y)) / x_norm
    return WitnessResult(xs, y, coercivity, boundedness, limit,
        identity_error, norm_ratio)


def witness_sweep(sys, norms, key, samples, constants):
    """Runs :func:`witness_check` on ``samples`` standard normal draws"""
    results = []
    for k in jax.random.split(key, samples):
        x = jax.random.normal(k, (sys.n,))
        results.append(witness_check(sys, norms, x, constants))
    bad = sum(1 for r in results if not r.ok)
    if bad:
        logger.warning("%d of %d witness draws violate the estimate", bad, samples)
    return results
