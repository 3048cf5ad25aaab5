# Copyright 2026 The me2c developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Dict

from me2c.cli import close_output, command, open_output
from me2c.config import Config
from me2c.facade import Solver


logger = logging.getLogger(__name__)


@command
def normalize(args: Dict[str, Any], config: Config) -> int:
    """Normalize a graph and print the result.

    Usage:
        me2c normalize [--strategy <name>] [--out <file>] [--trace <file>] <graph>
        me2c normalize --help

    Options:
        -s <name>, --strategy <name>    The strategy whose pipeline to run.
        -o <file>, --out <file>         Write the graph here instead of stdout.
        -t <file>, --trace <file>       Write the rewrite trace to this file.
        -h, --help                      Print this help message and exit.
    """
    facade = Solver(config)
    g = facade.load(Path(args["<graph>"]))
    normalized, log, stats = facade.normalize(g, args["--strategy"])
    logger.info(f"applied {stats.steps} steps: {stats.counts}")

    if args["--trace"] is not None:
        trace = open_output(args["--trace"])
        try:
            facade.print_trace(log, file=trace, flush=True)
        finally:
            close_output(trace)

    out = open_output(args["--out"])
    try:
        facade.print_graph(normalized, file=out, flush=True)
    finally:
        close_output(out)
    return 0
