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
from typing import Any, Dict, List, Union

from me2c.cli import close_output, command, open_output
from me2c.config import Config
from me2c.errors import PreconditionError
from me2c.facade import Solver


logger = logging.getLogger(__name__)


def _parse_param(raw: str) -> Union[int, float]:
    try:
        return int(raw)
    except ValueError:
        pass
    try:
        return float(raw)
    except ValueError:
        raise PreconditionError(f"invalid parameter: {raw!r}")


@command
def gen(args: Dict[str, Any], config: Config) -> int:
    """Generate a graph of a named family.

    Usage:
        me2c gen [--seed <seed>] [--out <file>] <family> [<params>...]
        me2c gen --help

    Options:
        --seed <seed>              Seed for the random families [default: 0].
        -o <file>, --out <file>    Write the graph here instead of stdout.
        -h, --help                 Print this help message and exit.

    Families:
        cycle <n>                  The cycle on n vertices.
        complete <n>               The complete graph on n vertices.
        path <n>                   The path on n vertices.
        star <k>                   The star with k leaves.
        petersen                   The Petersen graph.
        subcubic <n>               Random, maximum degree 3.
        clawfree <n> [<p>]         Line graph of a random G(n, p).
        pm <n> [<p>]               Random with a planted perfect matching.
        cactus-chain <k>           k triangles in a chain, with needles.
    """
    params: List[Union[int, float]] = [_parse_param(p) for p in args["<params>"]]
    try:
        seed = int(args["--seed"])
    except ValueError:
        raise PreconditionError(f"invalid seed: {args['--seed']!r}")

    facade = Solver(config)
    g = facade.generate(args["<family>"], params, seed)

    out = open_output(args["--out"])
    try:
        facade.print_graph(g, file=out, flush=True)
    finally:
        close_output(out)
    return 0
