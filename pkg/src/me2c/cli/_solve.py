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
def solve(args: Dict[str, Any], config: Config) -> int:
    """Color a graph and certify the approximation ratio.

    Usage:
        me2c solve [--strategy <name>] [--out <file>] [--report <file>] [--no-normalize] <graph>
        me2c solve --help

    Options:
        -s <name>, --strategy <name>    The strategy: auto, general, subcubic,
                                        clawfree or pm. Defaults to the config.
        -o <file>, --out <file>         Write the coloring here instead of stdout.
        -r <file>, --report <file>      Write the run report to this file.
        --no-normalize                  Color the input directly.
        -h, --help                      Print this help message and exit.

    Arguments:
        <graph>    A graph in the edge-list format.
    """
    path = Path(args["<graph>"])
    facade = Solver(config)
    g = facade.load(path)
    sol, report = facade.solve(
        g,
        args["--strategy"],
        instance=str(path),
        normalize=not args["--no-normalize"],
    )

    if args["--report"] is not None:
        with Path(args["--report"]).open("w") as fd:
            facade.print_report(report, file=fd)

    # The report is written first so that a failed run still leaves one.
    sol.certificate.validate()

    out = open_output(args["--out"])
    try:
        facade.print_coloring(g, sol.coloring, file=out, flush=True)
    finally:
        close_output(out)
    return 0
