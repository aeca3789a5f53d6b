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

"""Exceptions raised by the saddle point toolkit."""


class SaddleError(Exception):
    """Base class of all errors raised by cr.saddle"""


class NotSymmetric(SaddleError, ValueError):
    """A matrix required to be symmetric is not symmetric to working tolerance"""


class DimensionMismatch(SaddleError, ValueError):
    """Operand shapes are incompatible"""


class NonSPD(SaddleError):
    """Cholesky factorization met a non-positive pivot"""


class EmptyRange(SaddleError):
    """The metric of a pencil is numerically zero"""


class DeskScaleExceeded(SaddleError):
    """A dense operation was requested above the supported problem size"""


class BreakdownDetected(SaddleError):
    """The Lanczos process of MinRes broke down before convergence"""


class IncompatibleFlags(SaddleError, ValueError):
    """Space flags which cannot be combined for the given element family"""


class IncompatibleSpaces(SaddleError, ValueError):
    """A bilinear form is not defined on the given pair of spaces"""


class QbarSingular(SaddleError):
    """The fitted Q norm S_Q + C is not positive definite"""


class HypothesisFailed(SaddleError):
    """A hypothesis of the fitted norm stability estimate does not hold"""


class ConfigParseError(SaddleError):
    """A configuration file line could not be parsed"""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConfigValidationError(SaddleError):
    """A configuration key or value is invalid"""

    def __init__(self, message, key=None):
        self.key = key
        if key is not None:
            message = f"{key}: {message}"
        super().__init__(message)
