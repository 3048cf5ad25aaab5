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

"""The end-to-end pipeline: normalize, color, lift and certify."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional

from me2c.certify import Certificate, certify, upper_bound
from me2c.coloring import EdgeColoring, basic_algorithm, lift_coloring, require_feasible
from me2c.graph import Graph, component_subgraphs
from me2c.normalize import NormalizeStats, Strategy, normalize
from me2c.rewrite import RewriteLog


logger = logging.getLogger(__name__)


def color_components(g: Graph) -> EdgeColoring:
    """Run the matching-based algorithm on every component separately.

    An isolated edge gets one color of its own. The colorings of the
    components are placed side by side with disjoint colors.
    """
    colors: List[int] = [-1] * g.m
    offset = 0
    for sub, _, edge_ids in component_subgraphs(g):
        if sub.m == 0:
            continue
        if sub.n == 2:
            local = EdgeColoring((0,))
        else:
            local = basic_algorithm(sub)
        for e, c in zip(edge_ids, local.colors):
            colors[e] = offset + c
        offset += local.count
    return EdgeColoring(tuple(colors))


@dataclass(frozen=True)
class Solution:
    """Everything a solve produced.

    Parameters:
        coloring (EdgeColoring): The coloring of the input graph.
        certificate (Certificate): Its certificate.
        normalized (Graph): The normalized graph the bound comes from.
        log (RewriteLog): The log from the input to ``normalized``.
        stats (NormalizeStats): Statistics of that normalization.
    """

    coloring: EdgeColoring
    certificate: Certificate
    normalized: Graph
    log: RewriteLog
    stats: NormalizeStats


def solve_full(
    g: Graph,
    strategy: Strategy = Strategy.GENERAL,
    normalize_first: bool = True,
    step_limit_factor: int = 16,
    name: Optional[str] = None,
) -> Solution:
    """Solve ``g`` and keep the intermediate results.

    The certificate is not validated, so a failing one can still be
    reported. See :func:`solve`.

    Arguments:
        g (Graph):
            The input graph.
        strategy (Strategy):
            The normalization pipeline.
        normalize_first (bool):
            If False, the matching-based algorithm runs on ``g`` directly and
            only the bound comes from a general normalization.
        step_limit_factor (int):
            See :class:`me2c.normalize.Normalizer`.
        name (Optional[str]):
            The strategy name recorded in the certificate. Defaults to the
            pipeline name, or ``basic`` without normalization.

    Raises:
        PreconditionError: ``g`` does not suit ``strategy``.
        CertificationError: Lifting broke feasibility.
    """
    if normalize_first:
        normalized, log, stats = normalize(g, strategy, step_limit_factor)
        chi = lift_coloring(log, color_components(normalized))
        bound = upper_bound(normalized, stats, strategy)
    else:
        strategy = Strategy.GENERAL
        name = name or "basic"
        normalized, log, stats = normalize(g, strategy, step_limit_factor)
        chi = basic_algorithm(g)
        bound = upper_bound(normalized, stats, strategy)

    require_feasible(g, chi)
    cert = certify(g, chi, bound, name or strategy.value)
    return Solution(chi, cert, normalized, log, stats)


def solve(
    g: Graph,
    strategy: Strategy = Strategy.GENERAL,
    normalize: bool = True,
    step_limit_factor: int = 16,
):
    """Color ``g`` and certify the result.

    Returns:
        Tuple[EdgeColoring, Certificate]: The coloring and its certificate.

    Raises:
        PreconditionError: ``g`` does not suit ``strategy``.
        CertificationError: The coloring contradicts its bound.
    """
    sol = solve_full(g, strategy, normalize, step_limit_factor)
    sol.certificate.validate()
    return sol.coloring, sol.certificate
