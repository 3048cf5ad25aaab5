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

"""The auto strategy.

The auto strategy acts as a proxy. It tries the other strategies in priority
order and delegates to the first whose precondition the graph meets.

.. rubric:: Contents

.. autosummary::
    :toctree:
    :nosignatures:

    ~me2c.strategies.auto.AUTO_STRATEGY
    ~me2c.strategies.auto.select
"""

from __future__ import annotations

import logging
from fractions import Fraction

from me2c.errors import PreconditionError
from me2c.graph import Graph
from me2c.strategies import StrategyMetadata, all_strategies


logger = logging.getLogger(__name__)


#: The auto strategy.
AUTO_STRATEGY = StrategyMetadata(
    name="auto",
    priority=1000,
    pipeline=None,
    ratio_limit=Fraction(2),
    precondition="me2c.strategies.builtin:always_compatible",
    selector="me2c.strategies.auto:select",
)


def select(g: Graph) -> StrategyMetadata:
    """Pick the compatible strategy with the lowest priority value.

    Raises:
        PreconditionError: No strategy accepts ``g``.
    """
    # Strategies are already sorted by priority.
    for strategy in all_strategies().values():
        if strategy.selector is not None:
            continue
        if strategy.is_compatible(g):
            logger.info(f"using strategy: {strategy.name}")
            return strategy
    raise PreconditionError("no strategy accepts this graph")
