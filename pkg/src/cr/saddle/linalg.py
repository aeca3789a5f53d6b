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
Dense and sparse linear algebra kernels
"""
# pylint: disable=W0611

from cr.saddle._src.linalg.defs import (
    SYM_TOL,
    SPD_TOL,
    PIVOT_TOL,
    DESK_SCALE,
    asymmetry,
    is_symmetric,
    check_symmetric,
)

from cr.saddle._src.linalg.sparse import (
    SparseMatrix,
    from_coo,
    from_dense,
    from_scipy,
    zeros,
    identity,
    dense,
)

from cr.saddle._src.linalg.cholesky import (
    CholeskyFactor,
    cholesky_factor,
)

from cr.saddle._src.linalg.eig import (
    EigenPencilResult,
    gen_sym_eig,
)

from cr.saddle._src.linalg.minres import (
    MinResSolution,
    solve as minres_solve,
    minres,
)

from cr.saddle._src.linalg.operator import (
    LinearOperator,
    matrix_operator,
    block_diag,
    to_matrix,
)
