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

import logging
from typing import NamedTuple

import numpy as np

from cr.saddle._src.errors import IncompatibleFlags
from cr.saddle._src.mesh.square import Mesh

logger = logging.getLogger(__name__)

SCALAR_FAMILIES = ("P0", "P1")
VECTOR_FAMILIES = ("P1-vector", "P2-vector", "RT0")
FAMILIES = SCALAR_FAMILIES + VECTOR_FAMILIES

VERTEX, EDGE, TRIANGLE = 0, 1, 2


class FESpace(NamedTuple):
    """Lowest order finite element space on a :class:`Mesh`"""
    mesh: Mesh
    """Underlying triangulation"""
    family: str
    """One of P0, P1, P1-vector, P2-vector, RT0"""
    ndof: int
    """Number of degrees of freedom before constraints"""
    dof_kind: np.ndarray
    """Entity kind of each DOF: 0 vertex, 1 edge, 2 triangle"""
    dof_entity: np.ndarray
    """Entity index of each DOF"""
    dof_component: np.ndarray
    """Vector component of each DOF (0 for scalar and RT0 DOFs)"""
    constrained: np.ndarray
    """DOFs removed by the essential boundary condition"""
    dirichlet: bool = False
    """Essential boundary condition on the boundary of the square"""
    zero_mean: bool = False
    """Functions restricted to vanishing mean"""

    @property
    def is_vector(self):
        return self.family in VECTOR_FAMILIES

    @property
    def ncomp(self):
        return 2 if self.is_vector else 1

    @property
    def free_dofs(self):
        return np.flatnonzero(~self.constrained)

    @property
    def dim(self):
        """Dimension of the constrained space"""
        nfree = int(np.sum(~self.constrained))
        return nfree - 1 if self.zero_mean else nfree

    def __str__(self):
        flags = []
        if self.dirichlet:
            flags.append("dirichlet")
        if self.zero_mean:
            flags.append("zero mean")
        flags = f" ({', '.join(flags)})" if flags else ""
        return f"{self.family}{flags}: {self.ndof} dofs, dim {self.dim}"


def _lagrange_dofs(mesh, with_edges, ncomp):
    V, E = mesh.num_vertices, mesh.num_edges
    kind = [np.full(V, VERTEX)]
    entity = [np.arange(V)]
    boundary = [mesh.boundary_vertex]
    if with_edges:
        kind.append(np.full(E, EDGE))
        entity.append(np.arange(E))
        boundary.append(mesh.boundary_edge)
    kind = np.concatenate(kind)
    entity = np.concatenate(entity)
    boundary = np.concatenate(boundary)
    n = kind.shape[0]
    component = np.repeat(np.arange(ncomp), n)
    return (np.tile(kind, ncomp), np.tile(entity, ncomp), component,
        np.tile(boundary, ncomp))


def build_space(mesh, family, dirichlet=False, zero_mean=False):
    """Builds a finite element space

    Vector Lagrange DOFs are blocked by component: all x components first,
    then all y components. P2 scalar DOFs list vertices before edges.

    Args:
        mesh (Mesh): triangulation
        family (str): P0, P1, P1-vector, P2-vector or RT0
        dirichlet (bool): remove boundary DOFs (normal traces for RT0)
        zero_mean (bool): restrict to functions with vanishing mean

    Returns:
        FESpace: the space
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown element family {family!r}")
    if zero_mean and family not in SCALAR_FAMILIES:
        raise IncompatibleFlags(f"zero mean constraint is not defined for {family}")
    if dirichlet and family == "P0":
        raise IncompatibleFlags("P0 has no boundary DOFs")
    if dirichlet and zero_mean:
        raise IncompatibleFlags("dirichlet and zero mean flags are exclusive")
    if family == "P0":
        T = mesh.num_triangles
        kind, entity = np.full(T, TRIANGLE), np.arange(T)
        component, boundary = np.zeros(T, dtype=int), np.zeros(T, dtype=bool)
    elif family == "RT0":
        E = mesh.num_edges
        kind, entity = np.full(E, EDGE), np.arange(E)
        component, boundary = np.zeros(E, dtype=int), mesh.boundary_edge.copy()
    elif family == "P1":
        kind, entity, component, boundary = _lagrange_dofs(mesh, False, 1)
    elif family == "P1-vector":
        kind, entity, component, boundary = _lagrange_dofs(mesh, False, 2)
    else:
        kind, entity, component, boundary = _lagrange_dofs(mesh, True, 2)
    constrained = boundary if dirichlet else np.zeros_like(boundary)
    space = FESpace(mesh, family, int(kind.shape[0]), kind, entity, component,
        constrained, dirichlet, zero_mean)
    logger.debug("built space %s", space)
    return space
