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

"""Basis functions evaluated at quadrature points of every triangle

All arrays are batched over triangles (axis 0) and quadrature points
(axis 1), so a bilinear form is a single ``einsum`` followed by a COO
scatter.
"""

from typing import NamedTuple

import numpy as np

from cr.saddle._src.mesh.square import LOCAL_EDGES
from .quadrature import triangle_rule


class BasisEval(NamedTuple):
    """Local basis of a space on all triangles"""
    values: np.ndarray
    """Shape (T, q, l, c)"""
    grads: np.ndarray
    """Shape (T, q, l, c, 2); grads[..., c, d] is the derivative of component c in direction d"""
    dofs: np.ndarray
    """Global DOF of each local function, shape (T, l)"""
    weights: np.ndarray
    """Quadrature weights times triangle area, shape (T, q)"""

    @property
    def divergence(self):
        return self.grads[..., 0, 0] + self.grads[..., 1, 1]


def _geometry(mesh):
    p = mesh.vertices[mesh.triangles]
    J = np.stack((p[:, 1] - p[:, 0], p[:, 2] - p[:, 0]), axis=-1)
    Jinv = np.linalg.inv(J)
    g = np.empty((p.shape[0], 3, 2))
    g[:, 1] = Jinv[:, 0, :]
    g[:, 2] = Jinv[:, 1, :]
    g[:, 0] = -g[:, 1] - g[:, 2]
    return p, g, mesh.areas


def _lagrange(mesh, bary, degree):
    """Scalar Lagrange basis: values (T, q, l), grads (T, q, l, 2), local dofs (T, l)"""
    _, g, _ = _geometry(mesh)
    T, q = mesh.num_triangles, bary.shape[0]
    lam = np.broadcast_to(bary, (T, q, 3))
    glam = np.broadcast_to(g[:, None], (T, q, 3, 2))
    if degree == 1:
        return lam, glam, mesh.triangles
    values = np.empty((T, q, 6))
    grads = np.empty((T, q, 6, 2))
    values[..., :3] = lam * (2. * lam - 1.)
    grads[..., :3, :] = (4. * lam - 1.)[..., None] * glam
    for k, (a, b) in enumerate(LOCAL_EDGES):
        values[..., 3 + k] = 4. * lam[..., a] * lam[..., b]
        grads[..., 3 + k, :] = 4. * (lam[..., a, None] * glam[..., b, :]
            + lam[..., b, None] * glam[..., a, :])
    dofs = np.concatenate((mesh.triangles, mesh.num_vertices + mesh.tri_edges), axis=1)
    return values, grads, dofs


def _vectorize(values, grads, dofs, nscalar):
    T, q, l = values.shape
    vv = np.zeros((T, q, 2 * l, 2))
    gg = np.zeros((T, q, 2 * l, 2, 2))
    for c in range(2):
        vv[:, :, c * l:(c + 1) * l, c] = values
        gg[:, :, c * l:(c + 1) * l, c, :] = grads
    dd = np.concatenate((dofs, dofs + nscalar), axis=1)
    return vv, gg, dd


def _raviart_thomas(mesh, bary):
    p, _, area = _geometry(mesh)
    T, q = mesh.num_triangles, bary.shape[0]
    x = np.einsum('qk,tkd->tqd', bary, p)
    tri = mesh.triangles
    # +1 when the counter clockwise local edge runs from the lower to the higher global vertex
    sign = np.where(tri[:, LOCAL_EDGES[:, 0]] < tri[:, LOCAL_EDGES[:, 1]], 1., -1.)
    scale = sign / (2. * area[:, None])
    values = scale[:, None, :, None] * (x[:, :, None, :] - p[:, None, :, :])
    grads = np.zeros((T, q, 3, 2, 2))
    grads[..., 0, 0] = scale[:, None, :]
    grads[..., 1, 1] = scale[:, None, :]
    return values, grads, mesh.tri_edges


def evaluate_basis(space, rule=None):
    """Evaluates the basis of ``space`` at the quadrature points of every triangle"""
    rule = triangle_rule() if rule is None else rule
    mesh = space.mesh
    bary = rule.points
    T, q = mesh.num_triangles, bary.shape[0]
    weights = mesh.areas[:, None] * rule.weights[None, :]
    family = space.family
    if family == "P0":
        values = np.ones((T, q, 1, 1))
        grads = np.zeros((T, q, 1, 1, 2))
        dofs = np.arange(T)[:, None]
    elif family == "P1":
        v, g, dofs = _lagrange(mesh, bary, 1)
        values, grads = v[..., None], g[..., None, :]
    elif family == "P1-vector":
        v, g, d = _lagrange(mesh, bary, 1)
        values, grads, dofs = _vectorize(v, g, d, mesh.num_vertices)
    elif family == "P2-vector":
        v, g, d = _lagrange(mesh, bary, 2)
        values, grads, dofs = _vectorize(v, g, d, mesh.num_vertices + mesh.num_edges)
    elif family == "RT0":
        values, grads, dofs = _raviart_thomas(mesh, bary)
    else:
        raise ValueError(f"unknown element family {family!r}")
    return BasisEval(np.asarray(values), np.asarray(grads), np.asarray(dofs), weights)
