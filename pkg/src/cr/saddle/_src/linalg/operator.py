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

from typing import NamedTuple, Callable, Tuple

import jax
import jax.numpy as jnp

from cr.saddle._src.errors import DimensionMismatch
from .sparse import dense


class LinearOperator(NamedTuple):
    """
    Represents a square symmetric linear operator :math:`T : \\mathbb{R}^n \\to \\mathbb{R}^n`
    through its action on vectors.

    The saddle point operators, the fitted norms and their inverses are all
    self adjoint, so no separate adjoint action is kept.
    """
    times : Callable[[jnp.ndarray], jnp.ndarray]
    """A linear function computing :math:`T x`"""
    shape : Tuple[int, int]
    """Dimension of the linear operator (n, n)"""

    def __call__(self, x):
        return self.times(x)

    def times_2d(self, X):
        """Computes :math:`Y = T X` column by column"""
        return jax.vmap(self.times, (1), (1))(X)


def matrix_operator(M):
    """Wraps a matrix as a :class:`LinearOperator`"""
    M = dense(M)
    return LinearOperator(times=lambda x: M @ x, shape=M.shape)


def block_diag(operators):
    """Returns a block diagonal operator from 2 or more operators

    For operators :math:`T_1, \\dots, T_k` the input is split into pieces of
    sizes :math:`n_1, \\dots, n_k` and :math:`T_i` is applied to the i-th piece.
    """
    sizes = [op.shape[1] for op in operators]
    n = sum(sizes)
    offsets = [sum(sizes[:i]) for i in range(len(sizes) + 1)]

    def times(x):
        if x.shape[0] != n:
            raise DimensionMismatch(f"expected {n} entries, got {x.shape[0]}")
        parts = [op.times(x[offsets[i]:offsets[i+1]])
            for i, op in enumerate(operators) if sizes[i]]
        if not parts:
            return x
        return jnp.concatenate(parts)

    return LinearOperator(times=times, shape=(n, n))


def to_matrix(T):
    """Dense matrix representation obtained by applying :math:`T` to the identity"""
    n = T.shape[1]
    return T.times_2d(jnp.eye(n))
