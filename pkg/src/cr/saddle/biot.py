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
Discretized Biot and Darcy model problems
"""
# pylint: disable=W0611

from cr.saddle._src.biot.params import (
    EXAMPLE_PARAMETERS,
    SWEEP_VALUES,
    ExampleParams,
    format_value,
)

from cr.saddle._src.biot.examples import (
    DiscreteProblem,
    build_example1,
    build_example2,
    build_example3,
    build_example4,
    build_example5,
    build_example6,
    build_example7,
    build_example,
    problem_size,
)

from cr.saddle._src.biot.reference import (
    ReferenceInfSup,
    discrete_reference_infsup,
    example2_h1_bound,
    example5_remark_metric,
    example7_comparison_metric,
    example4_to_example5,
)
