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
from me2c.coloring import EdgeColoring
from me2c.config import Config
from me2c.facade import Solver


logger = logging.getLogger(__name__)


@command
def verify(args: Dict[str, Any], config: Config) -> int:
    """Check that a coloring is a feasible edge 2-coloring.

    Usage:
        me2c verify <graph> <coloring>
        me2c verify --help

    Options:
        -h, --help    Print this help message and exit.

    The exit code is 0 if every vertex sees at most two colors and 1 if not.
    """
    facade = Solver(config)
    g = facade.load(Path(args["<graph>"]))
    chi = EdgeColoring.from_text(Path(args["<coloring>"]).read_text(), g)

    violation = facade.verify(g, chi)
    if violation is not None:
        colors = ",".join(str(c) for c in sorted(violation.colors))
        print(f"infeasible\tvertex {violation.vertex} sees {colors}")
        return 1
    print(f"ok\t{chi.count} colors")
    return 0
