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
import math
from typing import NamedTuple, Optional

from cr.saddle._src.errors import EmptyRange, HypothesisFailed
from .constants import (
    coercivity_constant,
    continuity_constant_a,
    small_inf_sup,
    babuska_constants,
)

logger = logging.getLogger(__name__)

HYPOTHESIS_TOL = 1e-10
"""Coercivity and inf-sup constants at or below this level count as vanishing"""

CHAIN_TOL = 1e-8
"""Slack allowed in the comparison of computed and guaranteed constants"""


class BoundConstants(NamedTuple):
    """Auxiliary constants of the stability estimate"""
    epsilon: float
    delta: float
    bound: float
    """Guaranteed lower bound of the inf-sup constant"""
    limit: float
    """Continuity constant of the test function map"""


def _inverse(x):
    # not applicable constants drop out of the estimate
    return 0. if math.isnan(x) or math.isinf(x) else 1. / x


def theoretical_bound(C_a_bar, C_a_under=None, beta_under=None):
    """Lower bound of the inf-sup constant of :math:`\\mathcal{A}` in the fitted norms

    .. math::

        \\delta = \\max\\{\\tfrac14 \\underline{C}_a^{-1} + \\overline{C}_a \\underline{\\beta}^{-2}, \\tfrac34\\},
        \\quad
        \\underline{\\alpha} \\geq \\frac{1/4}{\\sqrt{2 \\max\\{\\delta^2 + 1, \\underline{\\beta}^{-2} + \\delta^2\\}}}

    Args:
        C_a_bar (float): continuity constant of :math:`a` in :math:`\\bar{V}`,
            or a :class:`StabilityReport` carrying all three constants
        C_a_under (float): coercivity constant of :math:`a` on :math:`|\\cdot|_V` (NaN if not applicable)
        beta_under (float): inf-sup constant in :math:`|\\cdot|_Q` (NaN if not applicable)

    Returns:
        BoundConstants: epsilon, delta, the bound and the continuity limit

    Raises:
        HypothesisFailed: if a coercivity or inf-sup constant vanishes
    """
    if C_a_under is None and hasattr(C_a_bar, "C_a_under"):
        r = C_a_bar
        C_a_bar, C_a_under, beta_under = r.C_a_bar, r.C_a_under, r.beta_under
    if not C_a_under > HYPOTHESIS_TOL and not math.isnan(C_a_under):
        raise HypothesisFailed(f"coercivity constant {C_a_under:.3e} vanishes")
    if not beta_under > HYPOTHESIS_TOL and not math.isnan(beta_under):
        raise HypothesisFailed(f"inf-sup constant {beta_under:.3e} vanishes")
    inv_beta2 = _inverse(beta_under) ** 2
    epsilon = 0.5 * beta_under ** 2 / C_a_bar if C_a_bar > 0 else math.nan
    delta = max(0.25 * _inverse(C_a_under) + C_a_bar * inv_beta2, 0.75)
    limit = math.sqrt(2. * max(delta ** 2 + 1., inv_beta2 + delta ** 2))
    return BoundConstants(epsilon, delta, 0.25 / limit, limit)


class StabilityReport(NamedTuple):
    """Computed constants of one discrete problem"""
    C_a_bar: float
    """Continuity constant of a in Vbar"""
    C_a_under: float
    """Coercivity constant of a in the seminorm S_V (NaN if not applicable)"""
    beta_under: float
    """Inf-sup constant of b in Vbar and S_Q (NaN if not applicable)"""
    alpha_under: float
    """Inf-sup constant of the full operator in the fitted norms"""
    C_bar: float
    """Norm of the full operator in the fitted norms"""
    epsilon: float
    delta: float
    theoretical_bound: float
    """Guaranteed lower bound for alpha_under"""
    hypotheses_ok: bool
    """Coercivity and inf-sup hypotheses hold"""
    chain_ok: bool = False
    """bound <= alpha_under and C_bar <= 2 max(C_a_bar, 1)"""
    example: Optional[int] = None
    level: Optional[int] = None
    params: Optional[str] = None
    """Parameter point label"""

    @property
    def C_max(self):
        """Continuity constant used in the estimate"""
        return max(self.C_a_bar, 1.)

    def row(self):
        """Fields written to the constants table"""
        return {
            "example": self.example,
            "level": self.level,
            "param_point": self.params,
            "C_a_bar": self.C_a_bar,
            "C_a_under": self.C_a_under,
            "beta_under": self.beta_under,
            "alpha_under": self.alpha_under,
            "C_bar": self.C_bar,
            "epsilon": self.epsilon,
            "delta": self.delta,
            "theoretical_bound": self.theoretical_bound,
            "hypotheses_ok": self.hypotheses_ok,
        }

    def __str__(self):
        s = []
        s.append(f"C_a_bar={self.C_a_bar:.6e}, C_a_under={self.C_a_under:.6e}")
        s.append(f"beta_under={self.beta_under:.6e}")
        s.append(f"alpha_under={self.alpha_under:.6e}, C_bar={self.C_bar:.6e}")
        s.append(f"bound={self.theoretical_bound:.6e}, hypotheses_ok={self.hypotheses_ok}")
        return "\n".join(s)


def _not_applicable(fn, *args):
    try:
        return fn(*args)
    except EmptyRange:
        return math.nan


def verify_theorem5(sys, norms, params=None, level=None, example=None):
    """Computes every constant of the fitted norm stability estimate

    Failed hypotheses are logged and flagged in the report, never raised.

    Returns:
        StabilityReport: the constants
    """
    C_a_bar = continuity_constant_a(sys, norms) if sys.n_V else 0.
    C_a_under = _not_applicable(coercivity_constant, sys, norms) if sys.n_V else math.nan
    beta_under = _not_applicable(small_inf_sup, sys, norms)
    alpha_under, C_bar = babuska_constants(sys, norms)
    try:
        bc = theoretical_bound(C_a_bar, C_a_under, beta_under)
        hypotheses_ok = True
    except HypothesisFailed as e:
        logger.warning("example %s level %s %s: %s", example, level, params, e)
        bc = BoundConstants(math.nan, math.nan, math.nan, math.nan)
        hypotheses_ok = False
    chain_ok = (hypotheses_ok and bc.bound <= alpha_under + CHAIN_TOL
        and C_bar <= 2. * max(C_a_bar, 1.) + CHAIN_TOL)
    if hypotheses_ok and not chain_ok:
        logger.warning("example %s level %s %s: bound %.6e, alpha %.6e, C_bar %.6e",
            example, level, params, bc.bound, alpha_under, C_bar)
    return StabilityReport(C_a_bar, C_a_under, beta_under, alpha_under, C_bar,
        bc.epsilon, bc.delta, bc.bound, hypotheses_ok, chain_ok,
        example, level, params)
