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

from typing import NamedTuple

import numpy as np

_A1 = 0.445948490915964886318329253883
_W1 = 0.223381589678011465944703530
_A2 = 0.091576213509770743459571463402
_W2 = 0.109951743655321867388629803


class TriangleRule(NamedTuple):
    """Quadrature rule on a triangle in barycentric coordinates"""
    points: np.ndarray
    """Barycentric coordinates, shape (q, 3)"""
    weights: np.ndarray
    """Weights relative to the triangle area, summing to 1"""
    degree: int
    """Polynomial degree integrated exactly"""


def triangle_rule():
    """Symmetric 6 point rule, exact for polynomials of degree 4"""
    def orbit(a):
        b = 1. - 2. * a
        return [[b, a, a], [a, b, a], [a, a, b]]
    points = np.array(orbit(_A1) + orbit(_A2))
    weights = np.array([_W1] * 3 + [_W2] * 3)
    return TriangleRule(points, weights, 4)
