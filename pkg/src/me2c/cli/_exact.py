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

from me2c.cli import command
from me2c.config import Config
from me2c.errors import PreconditionError
from me2c.facade import Solver


logger = logging.getLogger(__name__)


@command
def exact(args: Dict[str, Any], config: Config) -> int:
    """Compute the optimum of a small graph.

    Usage:
        me2c exact [--budget <m>] [--out <file>] <graph>
        me2c exact --help

    Options:
        -b <m>, --budget <m>       Refuse graphs with more than this many
                                   edges. At most 20. Defaults to the config.
        -o <file>, --out <file>    Also write an optimal coloring here.
        -h, --help                 Print this help message and exit.
    """
    budget = None
    if args["--budget"] is not None:
        try:
            budget = int(args["--budget"])
        except ValueError:
            raise PreconditionError(f"invalid budget: {args['--budget']!r}")

    facade = Solver(config)
    g = facade.load(Path(args["<graph>"]))
    chi, opt = facade.exact(g, budget)
    print(opt)

    if args["--out"] is not None:
        with Path(args["--out"]).open("w") as fd:
            facade.print_coloring(g, chi, file=fd)
    return 0
