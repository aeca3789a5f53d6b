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
import os
from typing import NamedTuple, List

import pandas as pd

import jax

from cr.saddle.version import __version__
from cr.saddle._src.errors import NonSPD, QbarSingular
from cr.saddle._src.biot.params import format_value
from cr.saddle._src.biot.examples import build_example
from cr.saddle._src.biot.reference import discrete_reference_infsup
from cr.saddle._src.analysis.theorem import verify_theorem5
from cr.saddle._src.analysis.witness import witness_sweep
from cr.saddle._src.precond.sweep import RobustnessSweep, grid_points

logger = logging.getLogger(__name__)

CONSTANTS_COLUMNS = ["example", "level", "param_point", "C_a_bar", "C_a_under",
    "beta_under", "alpha_under", "C_bar", "epsilon", "delta", "theoretical_bound",
    "hypotheses_ok"]

WITNESS_COLUMNS = ["example", "level", "param_point", "sample", "coercivity_ratio",
    "boundedness_ratio", "boundedness_limit", "ok"]

REFERENCE_COLUMNS = ["level", "stokes_pair", "darcy_pair", "beta_d_h", "beta_s_h"]

FLOAT_FORMAT = "%.17g"


class RunOutcome(NamedTuple):
    """Result of :func:`run`"""
    status: int
    """0 when every check passed, 2 otherwise"""
    failures: List[str]
    files: List[str]


def _write(df, path):
    df.to_csv(path, index=False, float_format=FLOAT_FORMAT, na_rep="nan")
    logger.info("wrote %s (%d rows)", path, len(df))
    return path


def _problems(config):
    """Yields (level, label, problem); problem is None when the fitted norms
    of the point cannot be built"""
    for level in config.levels:
        for _, params in grid_points(config.grid, config.base):
            label = params.label(config.example)
            try:
                yield level, label, build_example(config.example, level, params)
            except (QbarSingular, NonSPD) as e:
                logger.warning("example %d n=%d %s: fitted norms unavailable: %s",
                    config.example, level, label, e)
                yield level, label, None


def _constants(config, failures):
    rows = []
    for level, label, problem in _problems(config):
        if problem is None:
            row = dict.fromkeys(CONSTANTS_COLUMNS, math.nan)
            row.update(example=config.example, level=level, param_point=label,
                hypotheses_ok=False)
            rows.append(row)
            continue
        report = verify_theorem5(problem.system, problem.norms, params=label,
            level=level, example=config.example)
        rows.append(report.row())
        if report.hypotheses_ok and not report.chain_ok:
            failures.append(f"constants: example {config.example} n={level} "
                f"{label}: bound {report.theoretical_bound:.6e} "
                f"alpha {report.alpha_under:.6e}")
    return pd.DataFrame(rows, columns=CONSTANTS_COLUMNS)


def _witness(config, failures):
    rows = []
    key = jax.random.PRNGKey(config.seed)
    for k, (level, label, problem) in enumerate(_problems(config)):
        if problem is None:
            continue
        report = verify_theorem5(problem.system, problem.norms)
        if not report.hypotheses_ok:
            logger.warning("witness skipped for %s: hypotheses fail", problem)
            continue
        results = witness_sweep(problem.system, problem.norms,
            jax.random.fold_in(key, k), config.witness_samples, report)
        for i, r in enumerate(results):
            rows.append({"example": config.example, "level": level,
                "param_point": label, "sample": i,
                "coercivity_ratio": r.coercivity_ratio,
                "boundedness_ratio": r.boundedness_ratio,
                "boundedness_limit": r.boundedness_limit, "ok": r.ok})
            if not r.ok:
                failures.append(f"witness: example {config.example} n={level} "
                    f"{label} sample {i}")
    return pd.DataFrame(rows, columns=WITNESS_COLUMNS)


def _precond(config, failures):
    sweep = RobustnessSweep(config.example, config.grid, config.levels,
        tol=config.tol, seed=config.seed, max_iter=config.max_iter, base=config.base)
    result = sweep()
    for run in result.runs:
        if not run.converged and run.hypotheses_ok is not False:
            failures.append(f"precond: example {run.example} n={run.level} "
                f"{run.param_point} did not converge")
    if not result.spread_ok:
        failures.append(f"precond: iteration spread above limit: {result.spreads}")
    return result.to_frame()


def _reference(config):
    rows = []
    for level in config.levels:
        ref = discrete_reference_infsup(level, config.stokes_pair, config.darcy_pair)
        rows.append({"level": level, "stokes_pair": config.stokes_pair,
            "darcy_pair": config.darcy_pair, "beta_d_h": ref.beta_d_h,
            "beta_s_h": ref.beta_s_h})
    return pd.DataFrame(rows, columns=REFERENCE_COLUMNS)


def _meta(config, failures):
    lines = [
        f"cr-saddle {__version__}",
        f"example = {config.example}",
        f"levels = {', '.join(str(n) for n in config.levels)}",
        f"analyses = {', '.join(config.analyses)}",
        f"seed = {config.seed}",
        f"tol = {format_value(config.tol)}",
        f"base = {config.base.label(config.example)}",
    ]
    for axis, xs in config.grid.items():
        lines.append(f"axis {axis} = {', '.join(format_value(x) for x in xs)}")
    for w in config.warnings:
        lines.append(f"warning: {w}")
    lines.append(f"failures = {len(failures)}")
    lines.extend(f"failure: {f}" for f in failures)
    return "\n".join(lines) + "\n"


def run(config):
    """Runs every configured analysis and writes the result tables

    Returns:
        RunOutcome: exit status 0 or 2 with the list of failed checks

    Raises:
        OSError: the output directory cannot be written
    """
    os.makedirs(config.out_dir, exist_ok=True)
    failures, files = [], []
    out = lambda name: os.path.join(config.out_dir, name)
    if "constants" in config.analyses:
        files.append(_write(_constants(config, failures), out("constants.csv")))
    if "witness" in config.analyses:
        files.append(_write(_witness(config, failures), out("witness.csv")))
    if "precond" in config.analyses:
        files.append(_write(_precond(config, failures), out("precond.csv")))
    if "reference_infsup" in config.analyses:
        files.append(_write(_reference(config), out("reference.csv")))
    with open(out("meta.txt"), "w", encoding="utf-8") as f:
        f.write(_meta(config, failures))
    files.append(out("meta.txt"))
    for f in failures:
        logger.error(f)
    return RunOutcome(2 if failures else 0, failures, files)
