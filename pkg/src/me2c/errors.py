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

"""Exceptions raised by me2c.

Library code raises these exceptions and never exits the process. The CLI
translates them into exit codes using the :attr:`Me2cError.exit_code`
attribute.

.. rubric:: Exit Codes

====  =====================================================================
code  meaning
====  =====================================================================
0     success
1     unexpected error
2     a precondition does not hold (strategy, budget, arguments)
3     an input file could not be parsed
4     an internal self-check failed (infeasible coloring, certification)
====  =====================================================================
"""

from __future__ import annotations

import logging
from typing import FrozenSet, Optional


logger = logging.getLogger(__name__)


class Me2cError(Exception):
    """Base class for all me2c errors."""

    #: The CLI exit code for this kind of error.
    exit_code: int = 1


class GraphError(Me2cError, ValueError):
    """A graph violates the simple-graph invariants."""

    exit_code = 2


class GraphFormatError(Me2cError, ValueError):
    """An edge-list or coloring document is malformed.

    Parameters:
        message (str): What is wrong.
        line (Optional[int]): The 1-based line number, if known.
    """

    exit_code = 3

    def __init__(self, message: str, line: Optional[int] = None):
        self.message = message
        self.line = line
        if line is None:
            super().__init__(message)
        else:
            super().__init__(f"line {line}: {message}")


class PreconditionError(Me2cError, ValueError):
    """An operation was called on an input it does not support."""

    exit_code = 2


class BudgetExceededError(PreconditionError):
    """An exact search was asked to run on an instance above its budget."""


class InfeasibleColoringError(Me2cError):
    """A vertex sees more than two colors.

    Parameters:
        vertex (int): The first offending vertex.
        colors (FrozenSet[int]): The colors seen by the vertex.
    """

    exit_code = 4

    def __init__(self, vertex: int, colors: FrozenSet[int]):
        self.vertex = vertex
        self.colors = colors
        shown = ",".join(str(c) for c in sorted(colors))
        super().__init__(f"vertex {vertex} sees {len(colors)} colors: {{{shown}}}")


class CertificationError(Me2cError):
    """A certificate or a pipeline self-check failed."""

    exit_code = 4


class StepLimitError(CertificationError):
    """Normalization exceeded its step counter."""
