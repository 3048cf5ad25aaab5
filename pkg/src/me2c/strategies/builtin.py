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

"""The builtin strategies.

=============  ========  =====  ==========================================
name           priority  ratio  graphs
=============  ========  =====  ==========================================
``subcubic``   100       3/2    maximum degree at most 3
``clawfree``   200       3/2    no induced ``K_{1,3}``
``pm``         300       13/8   a perfect matching exists
``general``    900       2      any graph
=============  ========  =====  ==========================================

.. rubric:: Contents

.. autosummary::
    :toctree:
    :nosignatures:

    ~me2c.strategies.builtin.GENERAL_STRATEGY
    ~me2c.strategies.builtin.SUBCUBIC_STRATEGY
    ~me2c.strategies.builtin.CLAWFREE_STRATEGY
    ~me2c.strategies.builtin.PERFECT_MATCHING_STRATEGY
"""

from __future__ import annotations

import logging
from fractions import Fraction

from me2c.graph import Graph
from me2c.normalize import Strategy, check_strategy
from me2c.strategies import StrategyMetadata


logger = logging.getLogger(__name__)


def always_compatible(g: Graph):
    """Accept every graph."""


def require_subcubic(g: Graph):
    check_strategy(g, Strategy.SUBCUBIC)


def require_claw_free(g: Graph):
    check_strategy(g, Strategy.CLAWFREE)


def require_perfect_matching(g: Graph):
    check_strategy(g, Strategy.PERFECT_MATCHING)


#: Normalize with modifications 1 to 3, then color. Works on any graph.
GENERAL_STRATEGY = StrategyMetadata(
    name="general",
    priority=900,
    pipeline=Strategy.GENERAL.value,
    ratio_limit=Fraction(2),
    precondition="me2c.strategies.builtin:always_compatible",
)

#: Adds modification 4 for graphs of maximum degree 3.
SUBCUBIC_STRATEGY = StrategyMetadata(
    name="subcubic",
    priority=100,
    pipeline=Strategy.SUBCUBIC.value,
    ratio_limit=Fraction(3, 2),
    precondition="me2c.strategies.builtin:require_subcubic",
)

#: Adds modification 5 for claw-free graphs.
CLAWFREE_STRATEGY = StrategyMetadata(
    name="clawfree",
    priority=200,
    pipeline=Strategy.CLAWFREE.value,
    ratio_limit=Fraction(3, 2),
    precondition="me2c.strategies.builtin:require_claw_free",
)

#: Tracks a perfect matching through the general pipeline.
PERFECT_MATCHING_STRATEGY = StrategyMetadata(
    name="pm",
    priority=300,
    pipeline=Strategy.PERFECT_MATCHING.value,
    ratio_limit=Fraction(13, 8),
    precondition="me2c.strategies.builtin:require_perfect_matching",
)
