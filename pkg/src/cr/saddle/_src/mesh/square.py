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

"""Uniform triangulations of the unit square"""

from typing import NamedTuple

import numpy as np

# local edge k joins these local vertices, it is opposite local vertex k
LOCAL_EDGES = np.array([[1, 2], [2, 0], [0, 1]])


class Mesh(NamedTuple):
    """Conforming triangulation with edge connectivity"""
    vertices: np.ndarray
    """Vertex coordinates, shape (V, 2)"""
    triangles: np.ndarray
    """Counter clockwise vertex indices, shape (T, 3)"""
    edges: np.ndarray
    """Sorted vertex pairs, shape (E, 2), lexicographic order"""
    tri_edges: np.ndarray
    """Global edge of local edge k (opposite vertex k), shape (T, 3)"""
    edge_tris: np.ndarray
    """Number of triangles incident to each edge"""
    boundary_vertex: np.ndarray
    """Boolean flag per vertex"""
    boundary_edge: np.ndarray
    """Boolean flag per edge"""
    n: int
    """Subdivisions per side"""

    @property
    def num_vertices(self):
        return self.vertices.shape[0]

    @property
    def num_triangles(self):
        return self.triangles.shape[0]

    @property
    def num_edges(self):
        return self.edges.shape[0]

    @property
    def areas(self):
        p = self.vertices[self.triangles]
        d1 = p[:, 1] - p[:, 0]
        d2 = p[:, 2] - p[:, 0]
        return 0.5 * (d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0])

    @property
    def h(self):
        return 1. / self.n

    def __str__(self):
        return (f"Mesh n={self.n}: {self.num_vertices} vertices, "
            f"{self.num_triangles} triangles, {self.num_edges} edges")


def build_unit_square_mesh(n):
    """Right triangle mesh of :math:`[0,1]^2` with every square cut along the
    lower left to upper right diagonal

    Args:
        n (int): number of subdivisions per side, at least 1

    Returns:
        Mesh: with :math:`(n+1)^2` vertices and :math:`2 n^2` triangles
    """
    if int(n) != n or n < 1:
        raise ValueError(f"mesh level must be a positive integer, got {n}")
    n = int(n)
    t = np.linspace(0., 1., n + 1)
    X, Y = np.meshgrid(t, t)
    vertices = np.column_stack((X.ravel(), Y.ravel()))
    i, j = np.meshgrid(np.arange(n), np.arange(n))
    i, j = i.ravel(), j.ravel()
    v00 = j * (n + 1) + i
    v10 = v00 + 1
    v01 = v00 + n + 1
    v11 = v01 + 1
    lower = np.column_stack((v00, v10, v11))
    upper = np.column_stack((v00, v11, v01))
    triangles = np.stack((lower, upper), axis=1).reshape(-1, 3)

    local = np.sort(triangles[:, LOCAL_EDGES], axis=2).reshape(-1, 2)
    edges, inverse, counts = np.unique(local, axis=0,
        return_inverse=True, return_counts=True)
    tri_edges = inverse.reshape(-1, 3)
    boundary_edge = counts == 1
    boundary_vertex = np.zeros(vertices.shape[0], dtype=bool)
    boundary_vertex[edges[boundary_edge].ravel()] = True
    return Mesh(vertices, triangles, edges, tri_edges, counts,
        boundary_vertex, boundary_edge, n)


def boundary_entities(mesh):
    """Returns the indices of boundary vertices and boundary edges"""
    return np.flatnonzero(mesh.boundary_vertex), np.flatnonzero(mesh.boundary_edge)
