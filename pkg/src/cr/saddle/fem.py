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
Lowest order finite element spaces and bilinear forms
"""
# pylint: disable=W0611

from cr.saddle._src.fem.quadrature import (
    TriangleRule,
    triangle_rule,
)

from cr.saddle._src.fem.space import (
    FESpace,
    FAMILIES,
    SCALAR_FAMILIES,
    VECTOR_FAMILIES,
    build_space,
)

from cr.saddle._src.fem.elements import (
    BasisEval,
    evaluate_basis,
)

from cr.saddle._src.fem.assembly import (
    FormSpec,
    FORM_KINDS,
    assemble,
)

from cr.saddle._src.fem.constraints import (
    apply_essential_bc,
    free_embedding,
    mean_zero_projector,
    mean_zero_basis,
    reduce,
)
