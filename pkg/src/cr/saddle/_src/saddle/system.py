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

from typing import NamedTuple, Tuple

import numpy as np
import jax.numpy as jnp

from cr.saddle._src.errors import DimensionMismatch
from cr.saddle._src.linalg.sparse import SparseMatrix, from_dense, from_scipy
from cr.saddle._src.linalg.defs import check_symmetric


class BlockSystem(NamedTuple):
    """Perturbed saddle point operator

    .. math::

        \\mathcal{A} = \\begin{bmatrix} A & B^T \\\\ B & -C \\end{bmatrix}

    with symmetric positive semidefinite :math:`A` and :math:`C`.
    """
    A: SparseMatrix
    """Primal block, n_V x n_V"""
    B: SparseMatrix
    """Constraint block, n_Q x n_V"""
    C: SparseMatrix
    """Perturbation block, n_Q x n_Q"""
    labels: Tuple[str, str] = ("u", "p")
    """Names of the two unknowns"""

    @property
    def n_V(self):
        return self.A.shape[0]

    @property
    def n_Q(self):
        return self.C.shape[0]

    @property
    def n(self):
        return self.n_V + self.n_Q

    def matrix(self):
        """Dense :math:`\\mathcal{A}`"""
        A, B, C = self.A.todense(), self.B.todense(), self.C.todense()
        top = jnp.hstack((A, B.T))
        bottom = jnp.hstack((B, -C))
        return jnp.vstack((top, bottom))

    def __str__(self):
        return f"BlockSystem n_V={self.n_V}, n_Q={self.n_Q}"


def _as_sparse(M, symmetric=False):
    if isinstance(M, SparseMatrix):
        return M
    M = np.asarray(M, dtype=np.float64)
    if M.ndim == 0:
        M = M.reshape(1, 1)
    return from_dense(M, symmetric=symmetric, psd=symmetric)


def block_system(A, B, C, labels=("u", "p")):
    """Validates the blocks and builds a :class:`BlockSystem`

    Blocks can be given as :class:`SparseMatrix` or dense arrays.
    """
    A = _as_sparse(A, True)
    C = _as_sparse(C, True)
    B = _as_sparse(B)
    n_V, n_Q = A.shape[0], C.shape[0]
    if B.shape != (n_Q, n_V):
        raise DimensionMismatch(f"B has shape {B.shape}, expected {(n_Q, n_V)}")
    check_symmetric(A.toarray(), "A")
    check_symmetric(C.toarray(), "C")
    for name, M in (("A", A), ("C", C)):
        if np.any(M.to_scipy().diagonal() < 0):
            raise ValueError(f"{name} has a negative diagonal entry and cannot be PSD")
    A = A._replace(symmetric=True, psd=True)
    C = C._replace(symmetric=True, psd=True)
    return BlockSystem(A, B, C, tuple(labels))


class CombinedVector(NamedTuple):
    """An element :math:`(u, p)` of :math:`V \\times Q`"""
    u: jnp.ndarray
    p: jnp.ndarray

    def join(self):
        return jnp.concatenate((self.u, self.p))


def split(sys, x):
    """Splits a stacked vector into its :class:`CombinedVector` parts"""
    if isinstance(x, CombinedVector):
        return x
    x = jnp.asarray(x)
    if x.shape[0] != sys.n:
        raise DimensionMismatch(f"vector of length {x.shape[0]} for system of size {sys.n}")
    return CombinedVector(x[:sys.n_V], x[sys.n_V:])


def apply_block_operator(sys, x):
    """Computes :math:`\\mathcal{A} x = (A u + B^T p, B u - C p)`

    Returns:
        CombinedVector: the image
    """
    x = split(sys, x)
    if x.u.shape[0] != sys.n_V or x.p.shape[0] != sys.n_Q:
        raise DimensionMismatch(
            f"parts of size ({x.u.shape[0]}, {x.p.shape[0]}) for system ({sys.n_V}, {sys.n_Q})")
    Bt = from_scipy(sys.B.to_scipy().T)
    return CombinedVector(sys.A @ x.u + Bt @ x.p, sys.B @ x.u - sys.C @ x.p)
