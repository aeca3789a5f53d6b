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

"""
Batch runs of the stability checks
"""
# pylint: disable=W0611

from cr.saddle._src.cli.config import (
    ANALYSES,
    DEFAULT_LEVELS,
    RunConfig,
    read_pairs,
    build_config,
    parse_config,
    parse_levels,
    check_levels,
)

from cr.saddle._src.cli.runner import (
    CONSTANTS_COLUMNS,
    WITNESS_COLUMNS,
    REFERENCE_COLUMNS,
    RunOutcome,
    run,
)

from cr.saddle._src.cli.main import (
    EXIT_OK,
    EXIT_INVARIANT,
    EXIT_CONFIG,
    EXIT_IO,
    build_parser,
    main,
    entry_point,
)
