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

"""Run configuration files

One ``key = value`` pair per line, ``#`` starts a comment, lists are comma
separated::

    example = 7
    levels = 2, 4
    analyses = constants, witness, precond
    lambda_mu = 1, 1e4, 1e8
    R_p = 1

A parameter with one value fixes it for every run; a parameter with several
values becomes a sweep axis. ``grid = default`` sweeps every parameter of the
example over the default values.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Tuple

from cr.saddle._src.errors import ConfigParseError, ConfigValidationError
from cr.saddle._src.biot.params import (
    EXAMPLE_PARAMETERS, SWEEP_VALUES, ExampleParams)
from cr.saddle._src.biot.reference import STOKES_PAIRS, DARCY_PAIRS
from cr.saddle._src.biot.examples import problem_size
from cr.saddle._src.linalg.defs import DESK_SCALE

logger = logging.getLogger(__name__)

ANALYSES = ("constants", "witness", "precond", "reference_infsup")
DEFAULT_LEVELS = (2, 4)

_KEYS = ("example", "levels", "analyses", "out_dir", "seed", "witness_samples",
    "tol", "max_iter", "grid", "stokes_pair", "darcy_pair")


@dataclass(frozen=True)
class RunConfig:
    """Everything a run needs"""
    example: int
    levels: Tuple[int, ...] = DEFAULT_LEVELS
    grid: Dict[str, Tuple[float, ...]] = field(default_factory=dict)
    """Sweep axes"""
    base: ExampleParams = ExampleParams()
    """Parameters held fixed"""
    analyses: Tuple[str, ...] = ("constants",)
    out_dir: str = "results"
    seed: int = 0
    witness_samples: int = 10
    tol: float = 1e-8
    max_iter: int = 1000
    stokes_pair: str = "P2-P0"
    darcy_pair: str = "RT0-P0"
    warnings: Tuple[str, ...] = ()


def read_pairs(lines):
    """Parses ``key = value`` lines into (key, value, line number) triples"""
    pairs = []
    seen = set()
    for number, line in enumerate(lines, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigParseError(f"expected 'key = value', got {line!r}", number)
        key, value = (s.strip() for s in line.split("=", 1))
        if not key or not value:
            raise ConfigParseError(f"empty key or value in {line!r}", number)
        if key in seen:
            raise ConfigParseError(f"duplicate key {key!r}", number)
        seen.add(key)
        pairs.append((key, value, number))
    return pairs


def _items(value):
    return tuple(s.strip() for s in value.split(",") if s.strip())


def _number(key, text, kind=float):
    try:
        return kind(text)
    except ValueError:
        raise ConfigValidationError(f"not a valid {kind.__name__}: {text!r}", key) from None


def parse_levels(text):
    """Parses a comma separated list of mesh levels"""
    levels = tuple(_number("levels", s, int) for s in _items(text))
    if not levels or any(n < 1 for n in levels):
        raise ConfigValidationError("levels must be positive integers", "levels")
    return levels


def check_levels(example, levels):
    """Rejects levels whose problems exceed the dense size limit"""
    for n in levels:
        n_V, n_Q = problem_size(example, n)
        if n_V + n_Q > DESK_SCALE:
            raise ConfigValidationError(
                f"level {n} gives {n_V + n_Q} unknowns for example {example}, "
                f"above the dense limit {DESK_SCALE}", "levels")
    return levels


def build_config(pairs):
    """Validates parsed pairs into a :class:`RunConfig`"""
    values = {k: v for k, v, _ in pairs}
    if "example" not in values:
        raise ConfigValidationError("missing required key", "example")
    example = _number("example", values.pop("example"), int)
    if example not in EXAMPLE_PARAMETERS:
        raise ConfigValidationError(f"unknown example {example}", "example")
    names = EXAMPLE_PARAMETERS[example]
    fixed, grid, options, warnings = {}, {}, {}, []
    for key, text in values.items():
        if key in names:
            xs = tuple(_number(key, s) for s in _items(text))
            if not xs:
                raise ConfigValidationError("no values given", key)
            if len(xs) == 1:
                fixed[key] = xs[0]
            else:
                grid[key] = xs
        elif key in _KEYS:
            options[key] = text
        else:
            raise ConfigValidationError(
                f"unknown key (example {example} takes {', '.join(names)})", key)
    grid_mode = options.pop("grid", None)
    if grid_mode not in (None, "default"):
        raise ConfigValidationError(f"only 'default' is supported, got {grid_mode!r}", "grid")
    if grid_mode == "default":
        for name in names:
            if name not in fixed and name not in grid and name != "eta":
                grid[name] = SWEEP_VALUES
    if "levels" in options:
        levels = check_levels(example, parse_levels(options.pop("levels")))
    else:
        levels = DEFAULT_LEVELS
        warnings.append("levels not given, using 2, 4")
    analyses = _items(options.pop("analyses", "constants"))
    for a in analyses:
        if a not in ANALYSES:
            raise ConfigValidationError(f"unknown analysis {a!r}", "analyses")
    pairs_ok = {"stokes_pair": STOKES_PAIRS, "darcy_pair": DARCY_PAIRS}
    for key, allowed in pairs_ok.items():
        if key in options and options[key] not in allowed:
            raise ConfigValidationError(f"must be one of {', '.join(allowed)}", key)
    try:
        base = ExampleParams().update(fixed).validate(example)
        for axis, xs in grid.items():
            for x in xs:
                base.update({axis: x}).validate(example)
    except ValueError as e:
        raise ConfigValidationError(str(e), "parameters") from e
    for w in warnings:
        logger.warning(w)
    return RunConfig(example=example, levels=levels, grid=grid, base=base,
        analyses=analyses,
        out_dir=options.get("out_dir", "results"),
        seed=_number("seed", options.get("seed", "0"), int),
        witness_samples=_number("witness_samples", options.get("witness_samples", "10"), int),
        tol=_number("tol", options.get("tol", "1e-8")),
        max_iter=_number("max_iter", options.get("max_iter", "1000"), int),
        stokes_pair=options.get("stokes_pair", "P2-P0"),
        darcy_pair=options.get("darcy_pair", "RT0-P0"),
        warnings=tuple(warnings))


def parse_config(path):
    """Reads and validates a configuration file

    Raises:
        ConfigParseError: malformed line (carries the line number)
        ConfigValidationError: unknown key or invalid value (carries the key)
        OSError: the file cannot be read
    """
    with open(path, encoding="utf-8") as f:
        lines = f.read().splitlines()
    return build_config(read_pairs(lines))
