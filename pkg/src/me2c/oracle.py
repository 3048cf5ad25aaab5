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

"""Exact solvers for small graphs.

These are slow on purpose. They serve as ground truth for the fast code.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Tuple

from me2c.coloring import EdgeColoring, basic_algorithm
from me2c.errors import BudgetExceededError
from me2c.graph import Graph


logger = logging.getLogger(__name__)


#: The default edge budget of :func:`exact_opt`.
DEFAULT_EDGE_BUDGET = 14

#: No budget above this is accepted.
MAX_EDGE_BUDGET = 20

#: The largest vertex count :func:`exact_matching_bruteforce` accepts.
MAX_MATCHING_VERTICES = 12


def check_budget(m: int, edge_budget: int = DEFAULT_EDGE_BUDGET):
    """Raise BudgetExceededError unless ``m`` edges fit the budget."""
    if edge_budget > MAX_EDGE_BUDGET:
        raise BudgetExceededError(f"edge budget {edge_budget} exceeds the maximum {MAX_EDGE_BUDGET}")
    if m > edge_budget:
        raise BudgetExceededError(f"graph has {m} edges, budget is {edge_budget}")


class SearchState:
    """Branch and bound over canonical color assignments.

    Edges are visited in a fixed order. Edge ``i`` may take any color in use
    or the next fresh one, so every partition of the edges into color classes
    is seen once. The partial assignment is always feasible.

    Parameters:
        g (Graph): The graph.
        incumbent (EdgeColoring): A feasible coloring to beat.
    """

    def __init__(self, g: Graph, incumbent: EdgeColoring):
        self.g = g
        self.order = sorted(
            range(g.m), key=lambda e: (-(g.degree(g.edges[e][0]) + g.degree(g.edges[e][1])), e)
        )
        self.colors: List[int] = [-1] * g.m
        self.seen: List[Dict[int, int]] = [{} for _ in range(g.n)]
        self.best = incumbent.count
        self.best_colors = list(incumbent.colors)
        self.nodes = 0

    def _open(self, v: int) -> bool:
        return len(self.seen[v]) < 2

    def _fits(self, v: int, c: int) -> bool:
        return c in self.seen[v] or len(self.seen[v]) < 2

    def _assign(self, e: int, c: int):
        self.colors[e] = c
        for v in self.g.edges[e]:
            self.seen[v][c] = self.seen[v].get(c, 0) + 1

    def _unassign(self, e: int):
        c = self.colors[e]
        for v in self.g.edges[e]:
            self.seen[v][c] -= 1
            if self.seen[v][c] == 0:
                del self.seen[v][c]
        self.colors[e] = -1

    def run(self, i: int = 0, k: int = 0):
        """Search from position ``i`` with ``k`` colors in use."""
        self.nodes += 1
        if i == len(self.order):
            if k > self.best:
                self.best = k
                self.best_colors = list(self.colors)
            return

        # A fresh color needs both endpoints open, and vertices never reopen.
        slack = 0
        for e in self.order[i:]:
            u, v = self.g.edges[e]
            if self._open(u) and self._open(v):
                slack += 1
        if k + slack <= self.best:
            return

        e = self.order[i]
        u, v = self.g.edges[e]
        if self._open(u) and self._open(v):
            self._assign(e, k)
            self.run(i + 1, k + 1)
            self._unassign(e)
        for c in range(k):
            if self._fits(u, c) and self._fits(v, c):
                self._assign(e, c)
                self.run(i + 1, k)
                self._unassign(e)


def exact_opt(g: Graph, edge_budget: int = DEFAULT_EDGE_BUDGET) -> Tuple[EdgeColoring, int]:
    """Find a coloring with the most colors.

    Arguments:
        g (Graph):
            The graph.
        edge_budget (int):
            The most edges to accept. At most 20.

    Returns:
        Tuple[EdgeColoring, int]: An optimal coloring and its color count.

    Raises:
        BudgetExceededError: ``g`` has too many edges.
    """
    check_budget(g.m, edge_budget)
    if g.m == 0:
        return EdgeColoring(()), 0

    state = SearchState(g, basic_algorithm(g))
    state.run()
    chi = EdgeColoring(tuple(state.best_colors))
    logger.debug(f"exact: {chi.count} colors, {state.nodes} nodes")
    return chi, chi.count


def exact_matching_bruteforce(g: Graph) -> int:
    """The maximum matching size by enumerating edge subsets.

    Raises:
        BudgetExceededError: ``g`` has more than 12 vertices.
    """
    if g.n > MAX_MATCHING_VERTICES:
        raise BudgetExceededError(f"graph has {g.n} vertices, at most {MAX_MATCHING_VERTICES} allowed")

    used = [False] * g.n
    best = 0

    def search(i: int, size: int, free: int):
        nonlocal best
        best = max(best, size)
        if i == g.m or size + free // 2 <= best:
            return
        u, v = g.edges[i]
        if not used[u] and not used[v]:
            used[u] = used[v] = True
            search(i + 1, size + 1, free - 2)
            used[u] = used[v] = False
        search(i + 1, size, free)

    search(0, 0, g.n)
    return best
