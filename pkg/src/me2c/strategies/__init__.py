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

"""The me2c strategy system.

A strategy pairs a normalization pipeline with the graph class it is proven
for and the approximation ratio that proof guarantees. The strategy can be
given in the config file or at the command line. The `auto` strategy is
special: it inspects the graph and delegates to the compatible strategy with
the best guarantee.


Custom Strategies
---------------------------------------------------------------------------

A strategy is described by a `StrategyMetadata` object.

Any Python package may provide a strategy. To register a new strategy with
me2c, a package provides an `entry point <entry_point_>`_ in the
``me2c_strategies`` namespace pointing to a `StrategyMetadata` object.

.. _entry_point: https://setuptools.pypa.io/en/latest/userguide/entry_point.html

.. rubric:: Example

.. code:: python

    # Module: examplepkg.bipartite

    from fractions import Fraction
    from me2c.strategies import StrategyMetadata

    BIPARTITE = StrategyMetadata(
        name='bipartite',
        priority=150,
        pipeline='general',
        ratio_limit=Fraction(2),
        precondition='examplepkg.bipartite:require_bipartite',
    )

.. code:: toml

    # File: pyproject.toml

    [project.entry-points.me2c_strategies]
    bipartite = 'examplepkg.bipartite:BIPARTITE'


Reference
---------------------------------------------------------------------------

.. rubric:: Builtin Strategies

.. autosummary::
    :toctree:
    :nosignatures:

    ~me2c.strategies.builtin
    ~me2c.strategies.auto


.. rubric:: Strategy Utilities

.. autosummary::
    :toctree:
    :nosignatures:

    ~me2c.strategies.StrategyMetadata
    ~me2c.strategies.get_strategy
    ~me2c.strategies.all_strategies
"""

from __future__ import annotations

import importlib
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional

try:
    from importlib import metadata
except ImportError:
    import importlib_metadata as metadata  # type: ignore[no-redef]

try:
    from functools import cache
except ImportError:
    from functools import lru_cache as cache  # type: ignore[assignment]

from me2c.errors import PreconditionError
from me2c.graph import Graph
from me2c.normalize import Strategy


logger = logging.getLogger(__name__)


#: The entry point group strategies register under.
ENTRY_POINT_GROUP = "me2c_strategies"


def _import(name: str) -> Any:
    # The name must have the form `<module>:<attr>`.
    mod_name, attr_name = name.split(":", 1)
    mod = importlib.import_module(mod_name)
    return getattr(mod, attr_name)


def entry_points(group: str) -> List[Any]:
    """The entry points of ``group``, across importlib.metadata versions."""
    eps = metadata.entry_points()
    if hasattr(eps, "select"):
        return list(eps.select(group=group))
    return list(eps.get(group, []))  # type: ignore[attr-defined]


@dataclass(frozen=True)
class StrategyMetadata:
    """The me2c strategy metadata class.

    Parameters:
        name (str):
            The name of the strategy. If it is registered under the
            ``me2c_strategies`` entry point, it must be registered with the
            same name.
        priority (int):
            Used by `auto` to choose among compatible strategies. A **lower**
            value wins. The default is 500.
        pipeline (Optional[str]):
            The normalization pipeline, one of the `~me2c.normalize.Strategy`
            values. None for a proxy that picks another strategy.
        ratio_limit (~fractions.Fraction):
            The approximation ratio guaranteed on compatible graphs.
        precondition (str):
            A string of the form ``<module>:<function>`` naming a predicate
            that takes a `~me2c.graph.Graph` and raises
            `~me2c.errors.PreconditionError` if the graph does not qualify.
        selector (Optional[str]):
            Proxies only: a ``<module>:<function>`` taking a graph and
            returning the strategy to delegate to.
    """

    #: The name of the strategy.
    name: str

    #: The priority of this strategy.
    priority: int = 500

    #: The normalization pipeline.
    pipeline: Optional[str] = "general"

    #: The guaranteed ratio.
    ratio_limit: Fraction = Fraction(2)

    #: The precondition predicate.
    precondition: str = "me2c.strategies.builtin:always_compatible"

    #: The delegate selector of a proxy.
    selector: Optional[str] = None

    def import_precondition(self) -> Callable[[Graph], None]:
        """Import the precondition predicate."""
        return _import(self.precondition)

    def check(self, g: Graph):
        """Raise PreconditionError unless ``g`` suits this strategy."""
        self.import_precondition()(g)

    def is_compatible(self, g: Graph) -> bool:
        """True if ``g`` suits this strategy."""
        try:
            self.check(g)
        except PreconditionError:
            return False
        return True

    def normalization(self) -> Strategy:
        """The pipeline as a `~me2c.normalize.Strategy`.

        Raises:
            PreconditionError: This strategy is a proxy.
        """
        if self.pipeline is None:
            raise PreconditionError(f"strategy {self.name} must be resolved first")
        return Strategy.parse(self.pipeline)

    def resolve(self, g: Graph) -> StrategyMetadata:
        """The strategy that actually runs on ``g``.

        A proxy delegates to its selector, any other strategy returns itself
        after checking its precondition.

        Raises:
            PreconditionError: ``g`` does not suit the strategy.
        """
        if self.selector is not None:
            chosen: StrategyMetadata = _import(self.selector)(g)
            logger.debug(f"strategy {self.name} selected {chosen.name}")
            return chosen
        self.check(g)
        return self


def _builtin_strategies() -> List[StrategyMetadata]:
    from me2c.strategies import auto, builtin

    return [
        auto.AUTO_STRATEGY,
        builtin.GENERAL_STRATEGY,
        builtin.SUBCUBIC_STRATEGY,
        builtin.CLAWFREE_STRATEGY,
        builtin.PERFECT_MATCHING_STRATEGY,
    ]


def _dedup(strategies: Iterable[StrategyMetadata]) -> List[StrategyMetadata]:
    # If two different strategies present the same name, remove both.
    out = sorted(strategies, key=lambda s: s.name)
    i = 0
    while i + 1 < len(out):
        a, b = out[i], out[i + 1]
        if a == b:
            out.pop(i + 1)
        elif a.name == b.name:
            logger.warning(f"different strategies with the same name: {a.name}")
            logger.warning(f"ignoring strategies: A = {repr(a)}, B = {repr(b)}")
            out.pop(i + 1)
            out.pop(i)
        else:
            i += 1
    return out


@cache
def all_strategies() -> Dict[str, StrategyMetadata]:
    """Get every strategy, indexed by name and ordered by priority.

    Falls back to the builtin strategies when no entry points are installed.

    Returns:
        Dict[str, StrategyMetadata]: The strategies.
    """
    strategies = []
    for ep in entry_points(ENTRY_POINT_GROUP):
        strategy = ep.load()
        strategies.append(strategy)
        if strategy.name != ep.name:
            logger.warning("entry point does not match strategy name")
            logger.warning(f"entry point = {ep.name} / strategy name = {strategy.name}")

    if not strategies:
        logger.debug("no strategy entry points found, using the builtin strategies")
        strategies = _builtin_strategies()

    strategies = sorted(_dedup(strategies), key=lambda s: s.priority)
    return {s.name: s for s in strategies}


def get_strategy(name: str) -> StrategyMetadata:
    """Get a strategy by name.

    Raises:
        PreconditionError: No such strategy.
    """
    strategies = all_strategies()
    try:
        return strategies[name]
    except KeyError:
        names = ", ".join(sorted(strategies))
        raise PreconditionError(f"unknown strategy {name!r} (expected one of: {names})")
