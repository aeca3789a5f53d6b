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

import math
from typing import NamedTuple, Optional

# physical parameters each example depends on (derived ones for example 7)
EXAMPLE_PARAMETERS = {
    1: ("t",),
    2: ("kappa",),
    3: ("lam", "kappa", "c0", "alpha_bw", "eta"),
    4: ("lam", "kappa", "c0"),
    5: ("lam", "kappa", "c0", "alpha_bw"),
    6: ("mu", "lam", "tau", "kappa", "c0", "alpha_bw"),
    7: ("lambda_mu", "R_p", "alpha_p"),
}

DERIVED = ("lambda_mu", "R_p", "alpha_p")

SWEEP_VALUES = (1e-8, 1e-4, 1., 1e4, 1e8)
"""Values every parameter takes in the default sweep"""

# parameters which must be strictly positive in the given examples
_POSITIVE = {
    4: ("lam",),
    5: ("lam", "alpha_bw"),
    6: ("mu", "lam", "tau", "kappa", "alpha_bw"),
    7: ("mu", "tau", "kappa", "alpha_bw"),
}


def format_value(x):
    """17 significant digits, the precision of every output table"""
    return "%.17g" % x


class ExampleParams(NamedTuple):
    """Physical parameters of the Biot model problems"""
    t: float = 0.
    """Perturbation size of the mixed Darcy problem"""
    kappa: float = 1.
    """Permeability"""
    lam: float = 1.
    """Lamé parameter lambda"""
    mu: float = 0.5
    """Shear modulus"""
    c0: float = 0.
    """Storage coefficient"""
    alpha_bw: float = 1.
    """Biot-Willis coefficient"""
    tau: float = 1.
    """Time step"""
    eta: Optional[float] = None
    """Pressure seminorm weight of example 3, alpha^2 / (1 + lam) when unset"""

    @property
    def eta_value(self):
        if self.eta is not None:
            return self.eta
        return self.alpha_bw ** 2 / (1. + self.lam)

    @property
    def lambda_mu(self):
        return self.lam / (2. * self.mu)

    @property
    def R_p(self):
        """:math:`\\tau \\kappa / \\alpha^2`, so that :math:`R_p^{-1} = \\alpha^2 \\tau^{-1} \\kappa^{-1}`"""
        return self.tau * self.kappa / self.alpha_bw ** 2

    @property
    def alpha_p(self):
        return self.c0 / self.alpha_bw ** 2

    @classmethod
    def from_derived(cls, lambda_mu=1., R_p=1., alpha_p=0., mu=0.5, alpha_bw=1., tau=1.):
        """Primitive parameters reproducing the given scaled ones"""
        return cls(lam=2. * mu * lambda_mu, kappa=R_p * alpha_bw ** 2 / tau,
            c0=alpha_p * alpha_bw ** 2, mu=mu, alpha_bw=alpha_bw, tau=tau)

    def update(self, values):
        """Sets primitive or derived parameters from a mapping"""
        values = dict(values)
        derived = {k: values.pop(k) for k in DERIVED if k in values}
        unknown = set(values) - set(self._fields)
        if unknown:
            raise ValueError(f"unknown parameters {sorted(unknown)}")
        p = self._replace(**values)
        if derived:
            current = {"lambda_mu": p.lambda_mu, "R_p": p.R_p, "alpha_p": p.alpha_p}
            current.update(derived)
            p = ExampleParams.from_derived(mu=p.mu, alpha_bw=p.alpha_bw, tau=p.tau,
                **current)._replace(t=p.t, eta=p.eta)
        return p

    def value(self, name):
        return getattr(self, name)

    def validate(self, example_id):
        """Checks admissibility for an example, raising ValueError"""
        if example_id not in EXAMPLE_PARAMETERS:
            raise ValueError(f"unknown example {example_id}")
        for name in ("t", "kappa", "lam", "mu", "c0", "alpha_bw", "tau"):
            x = getattr(self, name)
            if not math.isfinite(x) or x < 0:
                raise ValueError(f"{name} must be finite and nonnegative, got {x}")
        if self.eta is not None and not self.eta >= 0:
            raise ValueError(f"eta must be nonnegative, got {self.eta}")
        for name in _POSITIVE.get(example_id, ()):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive for example {example_id}")
        return self

    def label(self, example_id):
        """Parameter point label, e.g. ``lam=1;kappa=0.0001``"""
        names = [n for n in EXAMPLE_PARAMETERS[example_id]
            if not (n == "eta" and self.eta is None)]
        return ";".join(f"{n}={format_value(self.value(n))}" for n in names)
