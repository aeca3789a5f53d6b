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
Norm equivalent block diagonal preconditioning
"""
# pylint: disable=W0611

from cr.saddle._src.precond.block import (
    PrecondRun,
    block_diag_preconditioner,
    mass_preconditioner,
    PRECONDITIONERS,
    precond_run,
)

from cr.saddle._src.precond.sweep import (
    SPREAD_LIMIT,
    SweepResult,
    RobustnessSweep,
    grid_points,
    robustness_sweep,
)
