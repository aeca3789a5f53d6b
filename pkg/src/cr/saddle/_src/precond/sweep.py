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
import math
from typing import NamedTuple, Dict, List, Tuple

import pandas as pd

import jax

from cr.saddle._src.errors import NonSPD, QbarSingular
from cr.saddle._src.biot.params import ExampleParams
from cr.saddle._src.biot.examples import build_example
from cr.saddle._src.analysis.theorem import verify_theorem5
from .block import PrecondRun, precond_run

logger = logging.getLogger(__name__)

SPREAD_LIMIT = 4.
"""Largest admissible ratio of iteration counts along a parameter axis"""


def grid_points(grid, base=None):
    """Parameter points of a one axis at a time sweep

    Every axis is swept over its values with the other parameters at ``base``.

    Returns:
        list of (axis, ExampleParams)
    """
    base = ExampleParams() if base is None else base
    points = []
    for axis, values in grid.items():
        for value in values:
            points.append((axis, base.update({axis: value})))
    if not points:
        points.append((None, base))
    return points


class SweepResult(NamedTuple):
    """Iteration counts of a robustness sweep"""
    runs: List[PrecondRun]
    spreads: Dict[Tuple[int, str], float]
    """max / min iterations per (level, axis)"""
    spread_ok: bool

    def to_frame(self):
        """Runs as a pandas DataFrame (without wall times)"""
        rows = [r.row() for r in self.runs]
        columns = [f for f in PrecondRun._fields if f != "wall_time"]
        return pd.DataFrame(rows, columns=columns)


class RobustnessSweep:
    """Experiment of preconditioned MinRes solves over parameter axes and mesh levels

    Sample usage::

        sweep = RobustnessSweep(7, {"lambda_mu": (1., 1e4, 1e8)}, levels=(4,))
        result = sweep()
        result.spread_ok
    """

    def __init__(self, example_id, grid, levels, tol=1e-8, seed=0,
            max_iter=1000, base=None, check_hypotheses=True, preconditioner="fitted"):
        self.example_id = example_id
        self.grid = grid
        self.levels = tuple(levels)
        self.tol = tol
        self.seed = seed
        self.max_iter = max_iter
        self.base = base
        self.check_hypotheses = check_hypotheses
        self.preconditioner = preconditioner
        self.df = pd.DataFrame(columns=[f for f in PrecondRun._fields if f != "wall_time"])

    def _run(self, level, params, run_key):
        try:
            problem = build_example(self.example_id, level, params)
        except (QbarSingular, NonSPD) as e:
            logger.warning("example %d n=%d %s: fitted norms unavailable: %s",
                self.example_id, level, params.label(self.example_id), e)
            return PrecondRun(self.example_id, level, params.label(self.example_id),
                0, False, math.nan, 0., self.seed, False)
        hyp = None
        if self.check_hypotheses:
            hyp = verify_theorem5(problem.system, problem.norms).hypotheses_ok
        return precond_run(problem, run_key, tol=self.tol, max_iter=self.max_iter,
            seed=self.seed, preconditioner=self.preconditioner, hypotheses_ok=hyp)

    def __call__(self, destination=None):
        """Runs the sweep; saves the table after every level when ``destination`` is given"""
        key = jax.random.PRNGKey(self.seed)
        runs, axes = [], []
        for level in self.levels:
            for k, (axis, params) in enumerate(grid_points(self.grid, self.base)):
                run = self._run(level, params, jax.random.fold_in(key, k))
                runs.append(run)
                axes.append(axis)
                self.df.loc[len(self.df)] = run.row()
            if destination is not None:
                self.df.to_csv(destination, index=False)
        return self._summarize(runs, axes)

    def _summarize(self, runs, axes):
        groups = {}
        for run, axis in zip(runs, axes):
            if axis is not None:
                groups.setdefault((run.level, axis), []).append(run)
        spreads, ok = {}, True
        for key, group in groups.items():
            iters = [max(r.iterations, 1) for r in group]
            spreads[key] = max(iters) / min(iters)
            if any(r.hypotheses_ok is False for r in group):
                continue
            if not all(r.converged for r in group):
                logger.warning("level %d axis %s: MinRes did not converge everywhere", key[0], key[1])
                ok = False
            elif spreads[key] > SPREAD_LIMIT:
                logger.warning("level %d axis %s: iteration spread %.2f", key[0], key[1], spreads[key])
                ok = False
        return SweepResult(runs, spreads, ok)


def robustness_sweep(example_id, grid, levels, tol=1e-8, seed=0, max_iter=1000,
        base=None, check_hypotheses=True, preconditioner="fitted"):
    """Runs :class:`RobustnessSweep` and returns its :class:`SweepResult`"""
    return RobustnessSweep(example_id, grid, levels, tol=tol, seed=seed,
        max_iter=max_iter, base=base, check_hypotheses=check_hypotheses,
        preconditioner=preconditioner)()
