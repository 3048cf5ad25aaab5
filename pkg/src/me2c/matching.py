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

"""Maximum cardinality matching in general graphs.

The search is Edmonds' blossom algorithm in its breadth-first form: blossoms
are not contracted physically, each vertex instead points at the base of the
blossom that currently contains it. It runs in ``O(n^3)``.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple

from me2c.errors import PreconditionError
from me2c.graph import Graph


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges.

    Parameters:
        edges (FrozenSet[int]):
            The identities of the matched edges.
        mate (Tuple[Optional[int], ...]):
            The partner of each vertex, or None if the vertex is unmatched.
    """

    edges: FrozenSet[int]  #: Matched edge identities.
    mate: Tuple[Optional[int], ...]  #: Partner per vertex.

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def size(self) -> int:
        """The number of matched edges."""
        return len(self.edges)

    def is_matched(self, v: int) -> bool:
        """True if ``v`` has a partner."""
        return self.mate[v] is not None

    def validate(self, g: Graph):
        """Check that this is a matching of ``g``.

        Raises:
            PreconditionError:
                Two edges share an endpoint, or the mate table disagrees with
                the edge set.
        """
        if len(self.mate) != g.n:
            raise PreconditionError(f"mate table has {len(self.mate)} entries for n={g.n}")
        covered = [None] * g.n
        for e in self.edges:
            u, v = g.edges[e]
            if covered[u] is not None or covered[v] is not None:
                raise PreconditionError(f"edge {u} {v} overlaps another matched edge")
            covered[u], covered[v] = v, u
        if tuple(covered) != self.mate:
            raise PreconditionError("mate table disagrees with the matched edges")

    @classmethod
    def from_edges(cls, g: Graph, edges: Iterable[int]) -> Matching:
        """Build a matching of ``g`` from edge identities.

        Raises:
            PreconditionError: The edges are not pairwise disjoint.
        """
        mate: List[Optional[int]] = [None] * g.n
        chosen = frozenset(edges)
        for e in sorted(chosen):
            u, v = g.edges[e]
            if mate[u] is not None or mate[v] is not None:
                raise PreconditionError(f"edge {u} {v} overlaps another matched edge")
            mate[u], mate[v] = v, u
        return cls(chosen, tuple(mate))

    @classmethod
    def from_mates(cls, g: Graph, mate: List[int]) -> Matching:
        """Build a matching from a mate array that uses -1 for unmatched."""
        edges = set()
        for v, w in enumerate(mate):
            if w != -1 and v < w:
                e = g.edge_id(v, w)
                assert e is not None, f"{v} and {w} are not adjacent"
                edges.add(e)
        return cls.from_edges(g, edges)


def greedy_matching(g: Graph) -> List[int]:
    """A maximal matching found by scanning edges in identity order.

    Returns:
        List[int]: The mate of each vertex, -1 where unmatched.
    """
    mate = [-1] * g.n
    for u, v in g.edges:
        if mate[u] == -1 and mate[v] == -1:
            mate[u], mate[v] = v, u
    return mate


class _BlossomSearch:
    """Augmenting path search over a fixed mate array."""

    def __init__(self, g: Graph, mate: List[int]):
        self.g = g
        self.mate = mate
        self.parent: List[int] = []
        self.base: List[int] = []
        self.outer: List[bool] = []

    def _lca(self, a: int, b: int) -> int:
        seen = [False] * self.g.n
        while True:
            a = self.base[a]
            seen[a] = True
            if self.mate[a] == -1:
                break
            a = self.parent[self.mate[a]]
        while True:
            b = self.base[b]
            if seen[b]:
                return b
            b = self.parent[self.mate[b]]

    def _mark_path(self, v: int, b: int, child: int, blossom: List[bool]):
        while self.base[v] != b:
            blossom[self.base[v]] = True
            blossom[self.base[self.mate[v]]] = True
            self.parent[v] = child
            child = self.mate[v]
            v = self.parent[self.mate[v]]

    def find_path(self, root: int) -> int:
        """Search from the free vertex ``root``.

        Returns:
            int: The free endpoint of an augmenting path, or -1.
        """
        n = self.g.n
        self.parent = [-1] * n
        self.base = list(range(n))
        self.outer = [False] * n
        self.outer[root] = True
        queue = deque([root])

        while queue:
            v = queue.popleft()
            for to in self.g.neighbors(v):
                if self.base[v] == self.base[to] or self.mate[v] == to:
                    continue
                if to == root or (self.mate[to] != -1 and self.parent[self.mate[to]] != -1):
                    # Odd cycle: shrink the blossom onto its base.
                    b = self._lca(v, to)
                    blossom = [False] * n
                    self._mark_path(v, b, to, blossom)
                    self._mark_path(to, b, v, blossom)
                    for i in range(n):
                        if blossom[self.base[i]]:
                            self.base[i] = b
                            if not self.outer[i]:
                                self.outer[i] = True
                                queue.append(i)
                elif self.parent[to] == -1:
                    self.parent[to] = v
                    if self.mate[to] == -1:
                        return to
                    nxt = self.mate[to]
                    self.outer[nxt] = True
                    queue.append(nxt)
        return -1

    def augment(self, end: int):
        v = end
        while v != -1:
            pv = self.parent[v]
            ppv = self.mate[pv]
            self.mate[v] = pv
            self.mate[pv] = v
            v = ppv


def maximum_matching(g: Graph) -> Matching:
    """Compute a maximum cardinality matching.

    A greedy matching over edges in identity order seeds the search. Free
    vertices are then tried as roots in increasing order, and neighbors are
    scanned smallest first, so the result depends only on the graph.

    Arguments:
        g (Graph): The graph.

    Returns:
        Matching: A matching of maximum size.
    """
    mate = greedy_matching(g)
    search = _BlossomSearch(g, mate)
    augmented = 0
    for root in range(g.n):
        if mate[root] != -1 or g.degree(root) == 0:
            continue
        end = search.find_path(root)
        if end != -1:
            search.augment(end)
            augmented += 1
    matching = Matching.from_mates(g, mate)
    logger.debug(f"matching size {matching.size} ({augmented} augmentations)")
    return matching


def is_perfect(m: Matching, g: Graph) -> bool:
    """True if every vertex of ``g`` has a partner in ``m``."""
    return len(m.mate) == g.n and all(w is not None for w in m.mate)

