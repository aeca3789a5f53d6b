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

"""Essential boundary conditions and the zero mean constraint"""

import numpy as np
import scipy.sparse as sp

from cr.saddle._src.errors import DimensionMismatch, IncompatibleFlags
from cr.saddle._src.linalg.sparse import from_scipy, from_dense
from .space import SCALAR_FAMILIES
from .assembly import FormSpec, assemble


def same_constraints(a, b):
    """Both spaces reduce the full DOFs in the same way"""
    return (a.family == b.family and a.zero_mean == b.zero_mean
        and np.array_equal(a.constrained, b.constrained))


def apply_essential_bc(M, row_space, col_space=None):
    """Removes the constrained rows and columns of an assembled matrix

    Args:
        M (SparseMatrix): matrix over the full DOFs of both spaces
        row_space (FESpace): space of the rows
        col_space (FESpace): space of the columns, defaults to ``row_space``

    Returns:
        SparseMatrix: the reduced matrix on the free DOFs
    """
    col_space = row_space if col_space is None else col_space
    if M.shape != (row_space.ndof, col_space.ndof):
        raise DimensionMismatch(
            f"matrix {M.shape} does not match spaces ({row_space.ndof}, {col_space.ndof})")
    S = M.to_scipy()[row_space.free_dofs][:, col_space.free_dofs]
    same = same_constraints(row_space, col_space)
    return from_scipy(S, symmetric=M.symmetric and same, psd=M.psd and same)


def free_embedding(space):
    """Injection of the free DOFs into all DOFs, shape (ndof, nfree)"""
    free = space.free_dofs
    E = sp.coo_matrix((np.ones(free.shape[0]), (free, np.arange(free.shape[0]))),
        shape=(space.ndof, free.shape[0]))
    return from_scipy(E)


def _total_mass(space):
    if space.family not in SCALAR_FAMILIES:
        raise IncompatibleFlags(f"mean value is not defined for {space.family}")
    full = space._replace(constrained=np.zeros(space.ndof, dtype=bool),
        dirichlet=False, zero_mean=False)
    M = assemble(FormSpec("mass", 1., full))
    return np.asarray(M.to_scipy().sum(axis=1)).ravel()


def mean_zero_projector(space):
    """Mass weighted projection :math:`\\Pi_0 = I - 1 m^T / (m^T 1)` with
    :math:`m = M 1`, removing the mean value of a function given by its
    coefficient vector over the full DOFs of a scalar space"""
    m = _total_mass(space)
    P = np.eye(space.ndof) - np.outer(np.ones(space.ndof), m) / np.sum(m)
    return from_dense(P)


def mean_zero_basis(space):
    """Basis of the mean zero coefficient subspace: the first ndof - 1
    columns of :math:`\\Pi_0`, dense array of shape (ndof, ndof - 1)"""
    return mean_zero_projector(space).toarray()[:, :-1]


def _basis(space):
    if space.zero_mean:
        return mean_zero_basis(space)
    return free_embedding(space).to_scipy()


def reduce(M, row_space, col_space=None):
    """Expresses a full DOF matrix in the constrained spaces

    Dirichlet spaces keep their free DOFs, zero mean spaces use
    :func:`mean_zero_basis`, other spaces are unchanged.

    Returns:
        SparseMatrix: :math:`Z_r^T M Z_c`
    """
    col_space = row_space if col_space is None else col_space
    if not (row_space.zero_mean or col_space.zero_mean):
        return apply_essential_bc(M, row_space, col_space)
    if M.shape != (row_space.ndof, col_space.ndof):
        raise DimensionMismatch(
            f"matrix {M.shape} does not match spaces ({row_space.ndof}, {col_space.ndof})")
    Zr, Zc = _basis(row_space), _basis(col_space)
    R = Zr.T @ (M.to_scipy() @ Zc)
    R = np.asarray(R.toarray() if sp.issparse(R) else R)
    symmetric = M.symmetric and same_constraints(row_space, col_space)
    if symmetric:
        R = 0.5 * (R + R.T)
    return from_dense(R, symmetric=symmetric, psd=M.psd and symmetric)
