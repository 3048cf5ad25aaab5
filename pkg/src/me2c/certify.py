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

"""Upper bounds on the optimum and certified approximation ratios.

A normalized connected graph with ``n >= 3`` vertices and ``l`` leaves has no
feasible coloring with more than ``floor((3n - l) / 4)`` colors. Isolated
edges take exactly one color and isolated vertices none. Summing over the
components of a normalized graph bounds the optimum of every graph that
normalizes to it.

.. rubric:: Certificate Format

.. code:: text

    achieved 6
    bound 7
    bound_kind maxcolors
    ratio 7/6
    strategy subcubic
    components 1
    pm_bound -
    matching_lower_bound -
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from me2c.coloring import EdgeColoring, require_feasible
from me2c.errors import CertificationError, PreconditionError
from me2c.graph import Graph, components
from me2c.normalize import NormalizeStats, Strategy, is_normalized


logger = logging.getLogger(__name__)


#: An isolated vertex: no edges, no colors.
KIND_VERTEX = "vertex"

#: An isolated edge: exactly one color.
KIND_EDGE = "edge"

#: A normalized component with at least three vertices.
KIND_MAXCOLORS = "maxcolors"


def maxcolors(n: int, leaves: int) -> int:
    """The color bound ``floor(3n/4 - l/4)`` of a normalized component."""
    return (3 * n - leaves) // 4


@dataclass(frozen=True)
class ComponentBound:
    """The bound contributed by one component of the normalized graph."""

    n: int  #: Vertices.
    m: int  #: Edges.
    leaves: int  #: Degree-1 vertices.
    kind: str  #: One of ``vertex``, ``edge`` or ``maxcolors``.
    bound: int  #: The bound value.


@dataclass(frozen=True)
class UpperBound:
    """An upper bound on the optimum with its provenance.

    Parameters:
        bound (int):
            The certified bound, summed over the components.
        components (Tuple[ComponentBound, ...]):
            Per-component contributions.
        pm_bound (Optional[int]):
            Perfect-matching strategy only: the accounting value
            ``floor(3n/4 + d2+/4 - d2-/4)`` over the input graph. Recorded
            for audit, not used as the certified bound.
        matching_lower_bound (Optional[int]):
            Perfect-matching strategy only: the size of the matching formed
            by the pendant edges at leaves created by modification 2.
    """

    bound: int
    components: Tuple[ComponentBound, ...]
    pm_bound: Optional[int] = None
    matching_lower_bound: Optional[int] = None

    @property
    def kind(self) -> str:
        """The strongest kind present: ``maxcolors`` if any component uses it."""
        kinds = {c.kind for c in self.components}
        for kind in (KIND_MAXCOLORS, KIND_EDGE):
            if kind in kinds:
                return kind
        return KIND_VERTEX

    @property
    def nontrivial(self) -> int:
        """The number of components with three or more vertices."""
        return sum(1 for c in self.components if c.kind == KIND_MAXCOLORS)


def upper_bound(
    g: Graph,
    stats: Optional[NormalizeStats] = None,
    strategy: Strategy = Strategy.GENERAL,
) -> UpperBound:
    """Bound the optimum of any graph that normalizes to ``g``.

    Arguments:
        g (Graph):
            A normalized graph.
        stats (Optional[NormalizeStats]):
            The statistics of the normalization that produced ``g``. Needed
            for the perfect-matching accounting values.
        strategy (Strategy):
            The pipeline that produced ``g``.

    Returns:
        UpperBound: The bound and its provenance.

    Raises:
        PreconditionError: ``g`` is not normalized.
    """
    if not is_normalized(g):
        raise PreconditionError("upper bounds are only defined on normalized graphs")

    view = components(g)
    parts = []
    for c in range(view.count):
        n, m, leaves = view.vertex_counts[c], view.edge_counts[c], view.leaf_counts[c]
        if n == 1:
            parts.append(ComponentBound(n, m, leaves, KIND_VERTEX, 0))
        elif n == 2:
            parts.append(ComponentBound(n, m, leaves, KIND_EDGE, 1))
        else:
            parts.append(ComponentBound(n, m, leaves, KIND_MAXCOLORS, maxcolors(n, leaves)))
    bound = sum(p.bound for p in parts)

    pm_bound = lower = None
    if strategy is Strategy.PERFECT_MATCHING and stats is not None:
        value = Fraction(3 * stats.original_n + stats.d2_plus - stats.d2_minus, 4)
        pm_bound = value.numerator // value.denominator
        lower = stats.matching_lower_bound
        if sum(1 for p in parts if p.kind == KIND_MAXCOLORS) > 1:
            logger.warning("perfect-matching accounting spans several components")

    return UpperBound(bound, tuple(parts), pm_bound, lower)


@dataclass(frozen=True)
class Certificate:
    """A coloring's color count set against an upper bound on the optimum.

    Parameters:
        achieved (int): Colors used by the coloring.
        bound (UpperBound): The upper bound.
        strategy (str): The strategy name that produced the coloring.
    """

    achieved: int
    bound: UpperBound
    strategy: str

    @property
    def ratio(self) -> Fraction:
        """The certified ratio ``bound / achieved``, exactly."""
        if self.achieved == 0:
            return Fraction(1)
        return Fraction(self.bound.bound, self.achieved)

    @property
    def bound_kind(self) -> str:
        return self.bound.kind

    @property
    def failed(self) -> bool:
        """True if the coloring claims more colors than the bound allows."""
        return self.achieved > self.bound.bound

    def validate(self):
        """Raise if the certificate is contradictory.

        Raises:
            CertificationError: ``achieved`` exceeds the bound.
        """
        if self.failed:
            raise CertificationError(
                f"coloring has {self.achieved} colors but the bound is {self.bound.bound}"
            )

    def within(self, limit: Fraction) -> bool:
        """True if the certified ratio is at most ``limit``."""
        return self.ratio <= limit

    def to_text(self) -> str:
        """Serialize as a key-value block."""

        def opt(x: Optional[int]) -> str:
            return "-" if x is None else str(x)

        lines = [
            f"achieved {self.achieved}",
            f"bound {self.bound.bound}",
            f"bound_kind {self.bound_kind}",
            f"ratio {self.ratio.numerator}/{self.ratio.denominator}",
            f"strategy {self.strategy}",
            f"components {self.bound.nontrivial}",
            f"pm_bound {opt(self.bound.pm_bound)}",
            f"matching_lower_bound {opt(self.bound.matching_lower_bound)}",
        ]
        return "\n".join(lines) + "\n"


def certify(
    g: Graph,
    chi: EdgeColoring,
    bound: UpperBound,
    strategy: str,
) -> Certificate:
    """Check ``chi`` on ``g`` and pair its count with ``bound``.

    The certificate is returned even when it fails; call
    :meth:`Certificate.validate` to turn a failure into an error.

    Raises:
        InfeasibleColoringError: ``chi`` is not feasible on ``g``.
    """
    require_feasible(g, chi)
    cert = Certificate(chi.count, bound, strategy)
    if bound.pm_bound is not None and bound.pm_bound < cert.achieved:
        logger.warning(
            f"accounting bound {bound.pm_bound} is below the achieved {cert.achieved} colors"
        )
    logger.debug(f"certificate: {cert.achieved}/{bound.bound} ({bound.kind})")
    return cert
