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

"""
Stability constants and test function checks
"""
# pylint: disable=W0611

from cr.saddle._src.analysis.constants import (
    coercivity_constant,
    continuity_constant_a,
    small_inf_sup,
    babuska_constants,
    brezzi_inf_sup,
    dominance_ratio,
    ContinuityCheck,
    continuity_checks,
)

from cr.saddle._src.analysis.theorem import (
    HYPOTHESIS_TOL,
    CHAIN_TOL,
    BoundConstants,
    theoretical_bound,
    StabilityReport,
    verify_theorem5,
)

from cr.saddle._src.analysis.witness import (
    WITNESS_TOL,
    WitnessResult,
    witness_check,
    witness_sweep,
)
