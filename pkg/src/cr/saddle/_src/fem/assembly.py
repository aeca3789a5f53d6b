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
from typing import NamedTuple, Optional

import numpy as np

from cr.saddle._src.errors import IncompatibleSpaces
from cr.saddle._src.linalg.sparse import from_coo
from .space import FESpace, SCALAR_FAMILIES, VECTOR_FAMILIES
from .elements import evaluate_basis

logger = logging.getLogger(__name__)

SYMMETRIC_KINDS = ("mass", "vector_mass", "stiffness", "grad_grad_scalar",
    "eps_eps", "div_div")
FORM_KINDS = SYMMETRIC_KINDS + ("div_coupling",)

# families on which each form is defined
_ALLOWED = {
    "mass": SCALAR_FAMILIES,
    "vector_mass": VECTOR_FAMILIES,
    "stiffness": ("P1", "P1-vector", "P2-vector"),
    "grad_grad_scalar": ("P1",),
    "eps_eps": ("P1-vector", "P2-vector"),
    "div_div": VECTOR_FAMILIES,
}


class FormSpec(NamedTuple):
    """A bilinear form :math:`\\text{coefficient} \\cdot f(u, v)` with trial
    function :math:`u` and test function :math:`v`"""
    kind: str
    """mass, stiffness, eps_eps, div_div, div_coupling, vector_mass or grad_grad_scalar"""
    coefficient: float
    """Constant multiplier"""
    trial: FESpace
    """Space of the columns"""
    test: Optional[FESpace] = None
    """Space of the rows (defaults to the trial space)"""


def _check(form):
    kind, trial = form.kind, form.trial
    test = trial if form.test is None else form.test
    if kind not in FORM_KINDS:
        raise ValueError(f"unknown form kind {kind!r}")
    if trial.mesh is not test.mesh:
        raise IncompatibleSpaces("trial and test spaces live on different meshes")
    if kind == "div_coupling":
        if trial.family not in VECTOR_FAMILIES or test.family not in SCALAR_FAMILIES:
            raise IncompatibleSpaces(
                f"div_coupling needs a vector trial and scalar test, got {trial.family}, {test.family}")
        return test
    allowed = _ALLOWED[kind]
    if trial.family not in allowed or test.family not in allowed:
        raise IncompatibleSpaces(f"{kind} is not defined on {trial.family} x {test.family}")
    if trial.family != test.family:
        raise IncompatibleSpaces(f"{kind} needs equal families, got {trial.family}, {test.family}")
    return test


def _local(kind, u, v):
    w = u.weights
    if kind in ("mass", "vector_mass"):
        return np.einsum('tq,tqic,tqjc->tij', w, v.values, u.values)
    if kind in ("stiffness", "grad_grad_scalar"):
        return np.einsum('tq,tqicd,tqjcd->tij', w, v.grads, u.grads)
    if kind == "eps_eps":
        eu = 0.5 * (u.grads + np.swapaxes(u.grads, -1, -2))
        ev = 0.5 * (v.grads + np.swapaxes(v.grads, -1, -2))
        return np.einsum('tq,tqicd,tqjcd->tij', w, ev, eu)
    if kind == "div_div":
        return np.einsum('tq,tqi,tqj->tij', w, v.divergence, u.divergence)
    return np.einsum('tq,tqi,tqj->tij', w, v.values[..., 0], u.divergence)


def assemble(form):
    """Assembles a bilinear form over the full (unconstrained) DOFs

    Args:
        form (FormSpec): the form and its spaces

    Returns:
        SparseMatrix: of shape (test ndof, trial ndof); forms with equal trial
        and test families of a symmetric kind are flagged symmetric, and PSD
        when the coefficient is nonnegative
    """
    test = _check(form)
    u = evaluate_basis(form.trial)
    v = u if test is form.trial else evaluate_basis(test)
    K = form.coefficient * _local(form.kind, u, v)
    symmetric = form.kind in SYMMETRIC_KINDS
    if symmetric:
        K = 0.5 * (K + np.swapaxes(K, 1, 2))
    rows = np.broadcast_to(v.dofs[:, :, None], K.shape)
    cols = np.broadcast_to(u.dofs[:, None, :], K.shape)
    M = from_coo(rows, cols, K, (test.ndof, form.trial.ndof),
        symmetric=symmetric, psd=symmetric and form.coefficient >= 0)
    logger.debug("assembled %s on %s x %s: nnz %d", form.kind, test.family,
        form.trial.family, M.nnz)
    return M
