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
import scipy.sparse as sp
import jax.numpy as jnp

from cr.saddle._src.errors import DimensionMismatch, NotSymmetric
from .defs import SYM_TOL


class SparseMatrix(NamedTuple):
    """Compressed sparse row matrix carrying structural flags

    Storage lives on the host (numpy). Dense work goes through :meth:`todense`
    which hands a JAX array to the factorization and eigen kernels.
    """
    data: np.ndarray
    """Nonzero values"""
    indices: np.ndarray
    """Column index of each value"""
    indptr: np.ndarray
    """Row start offsets into ``data``"""
    shape: Tuple[int, int]
    """Number of rows and columns"""
    symmetric: bool = False
    """Matrix is symmetric to working tolerance"""
    psd: bool = False
    """Matrix is positive semidefinite"""

    @property
    def nnz(self):
        return int(self.indptr[-1]) if len(self.indptr) else 0

    def to_scipy(self):
        return sp.csr_matrix((self.data, self.indices, self.indptr), shape=self.shape)

    def toarray(self):
        """Dense numpy copy"""
        return self.to_scipy().toarray()

    def todense(self):
        """Dense JAX copy"""
        return jnp.asarray(self.toarray())

    @property
    def T(self):
        return from_scipy(self.to_scipy().T, symmetric=self.symmetric, psd=self.psd)

    def scale(self, alpha):
        alpha = float(alpha)
        return self._replace(data=alpha * self.data, psd=self.psd and alpha >= 0)

    def __matmul__(self, x):
        if x.shape[0] != self.shape[1]:
            raise DimensionMismatch(f"cannot apply {self.shape} matrix to {x.shape}")
        return jnp.asarray(self.to_scipy() @ np.asarray(x))

    def __str__(self):
        s = []
        s.append(f"SparseMatrix {self.shape[0]}x{self.shape[1]}, nnz={self.nnz}")
        s.append(f"symmetric={self.symmetric}, psd={self.psd}")
        return "\n".join(s)


def from_scipy(M, symmetric=False, psd=False):
    """Wraps any scipy sparse matrix (duplicates summed, indices sorted)"""
    M = sp.csr_matrix(M, dtype=np.float64)
    M.sum_duplicates()
    M.sort_indices()
    out = SparseMatrix(M.data.copy(), M.indices.astype(np.int64),
        M.indptr.astype(np.int64), tuple(int(k) for k in M.shape))
    if symmetric:
        _assert_symmetric(out)
    if psd and np.any(M.diagonal() < 0):
        raise ValueError("a PSD matrix cannot have negative diagonal entries")
    return out._replace(symmetric=symmetric, psd=psd)


def from_coo(rows, cols, values, shape, symmetric=False, psd=False):
    """Builds a CSR matrix from triplets; repeated (row, col) pairs are summed"""
    rows = np.asarray(rows).ravel()
    cols = np.asarray(cols).ravel()
    values = np.asarray(values, dtype=np.float64).ravel()
    if not (len(rows) == len(cols) == len(values)):
        raise DimensionMismatch("triplet arrays differ in length")
    M = sp.coo_matrix((values, (rows, cols)), shape=shape)
    return from_scipy(M, symmetric=symmetric, psd=psd)


def from_dense(M, symmetric=False, psd=False):
    return from_scipy(sp.csr_matrix(np.asarray(M, dtype=np.float64)),
        symmetric=symmetric, psd=psd)


def zeros(m, n):
    return from_scipy(sp.csr_matrix((m, n)), symmetric=(m == n), psd=(m == n))


def identity(n):
    return from_scipy(sp.identity(n, format="csr"), symmetric=True, psd=True)


def dense(M):
    """Dense JAX array from a :class:`SparseMatrix` or any array like"""
    if isinstance(M, SparseMatrix):
        return M.todense()
    if sp.issparse(M):
        return jnp.asarray(M.toarray())
    return jnp.asarray(M)


def _assert_symmetric(M):
    S = M.to_scipy()
    if S.shape[0] != S.shape[1]:
        raise NotSymmetric(f"matrix of shape {S.shape} flagged symmetric")
    scale = np.max(np.abs(S.data)) if S.nnz else 0.
    if scale == 0.:
        return
    diff = S - S.T
    err = np.max(np.abs(diff.data)) / scale if diff.nnz else 0.
    if err > SYM_TOL:
        raise NotSymmetric(f"asymmetry {err:.3e} exceeds {SYM_TOL:.0e}")
