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

"""Simple undirected graphs with stable vertex and edge identities.

Vertices are the integers ``0..n-1`` and edges are the integers ``0..m-1``
in input order. Every traversal in me2c scans candidates smallest identity
first, which makes all pipelines deterministic.

.. rubric:: Edge-List Format

.. code:: text

    # a triangle
    3 3
    0 1
    1 2
    2 0

The first meaningful line holds ``n m``. Each of the following ``m`` lines
holds one edge ``u v``. Blank lines are skipped and ``#`` starts a comment.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, TextIO, Tuple

import networkx as nx

from me2c.errors import GraphError, GraphFormatError


logger = logging.getLogger(__name__)


#: An unordered vertex pair, stored with the smaller vertex first.
Pair = Tuple[int, int]


def _pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph.

    Graphs are immutable. Rewrites build new graphs instead of mutating old
    ones, so a graph can be shared freely between threads.

    Parameters:
        vertex_count (int):
            The number of vertices. Vertices are ``0..vertex_count-1``.
        edges (Sequence[Tuple[int, int]]):
            The edges. The position of an edge is its identity. Pairs are
            stored with the smaller endpoint first.

    Raises:
        GraphError:
            The edges contain a self-loop, a duplicate pair, or an endpoint
            outside ``0..vertex_count-1``.
    """

    vertex_count: int  #: The number of vertices.
    edges: Tuple[Pair, ...]  #: The edges in identity order.

    #: Per-vertex ``(neighbor, edge)`` lists sorted by neighbor.
    adjacency: Tuple[Tuple[Tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False
    )

    _index: Dict[Pair, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError(f"negative vertex count: {self.vertex_count}")

        n = self.vertex_count
        edges = tuple(_pair(int(u), int(v)) for u, v in self.edges)
        index: Dict[Pair, int] = {}
        adjacency: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(edges):
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u < 0 or n <= v:
                raise GraphError(f"edge {u} {v} out of range for n={n}")
            if (u, v) in index:
                raise GraphError(f"duplicate edge {u} {v}")
            index[(u, v)] = e
            adjacency[u].append((v, e))
            adjacency[v].append((u, e))

        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_index", index)
        object.__setattr__(
            self, "adjacency", tuple(tuple(sorted(adj)) for adj in adjacency)
        )

    @property
    def n(self) -> int:
        """The number of vertices."""
        return self.vertex_count

    @property
    def m(self) -> int:
        """The number of edges."""
        return len(self.edges)

    def degree(self, v: int) -> int:
        """The degree of vertex ``v``."""
        return len(self.adjacency[v])

    def degrees(self) -> List[int]:
        """The degree of every vertex."""
        return [len(adj) for adj in self.adjacency]

    def max_degree(self) -> int:
        """The maximum degree, or 0 for an empty graph."""
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) -> List[int]:
        """The neighbors of ``v``, smallest first."""
        return [w for w, _ in self.adjacency[v]]

    def incident(self, v: int) -> List[int]:
        """The identities of the edges at ``v``, ordered by neighbor."""
        return [e for _, e in self.adjacency[v]]

    def edge_id(self, u: int, v: int) -> Optional[int]:
        """The identity of edge ``uv``, or None if it does not exist."""
        return self._index.get(_pair(u, v))

    def has_edge(self, u: int, v: int) -> bool:
        """True if ``uv`` is an edge."""
        return _pair(u, v) in self._index

    def other(self, e: int, v: int) -> int:
        """The endpoint of edge ``e`` that is not ``v``."""
        a, b = self.edges[e]
        return b if a == v else a

    def leaves(self) -> List[int]:
        """The degree-1 vertices, smallest first."""
        return [v for v in range(self.n) if len(self.adjacency[v]) == 1]

    def vertices(self) -> range:
        """The vertex identities."""
        return range(self.n)

    # Derived graphs
    # -----------------------------------------------------------------------

    def relabel(self, permutation: Sequence[int]) -> Graph:
        """Rename vertex ``v`` to ``permutation[v]``; edge identities stay."""
        if sorted(permutation) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of the vertices")
        edges = [(permutation[u], permutation[v]) for u, v in self.edges]
        return Graph(self.n, tuple(edges))

    def disjoint_union(self, other: Graph) -> Graph:
        """Place ``other`` next to this graph, shifting its identities."""
        shift = self.n
        edges = list(self.edges)
        edges += [(u + shift, v + shift) for u, v in other.edges]
        return Graph(self.n + other.n, tuple(edges))

    def add_isolated_edge(self) -> Graph:
        """Append two fresh vertices joined by one edge."""
        return Graph(self.n + 2, self.edges + ((self.n, self.n + 1),))

    def subgraph(self, vertices: Iterable[int]) -> Tuple[Graph, List[int], List[int]]:
        """Extract the subgraph induced by ``vertices``.

        Returns:
            Tuple[Graph, List[int], List[int]]:
                The subgraph, the original identity of each of its vertices,
                and the original identity of each of its edges.
        """
        keep = sorted(set(vertices))
        local = {v: i for i, v in enumerate(keep)}
        edge_ids = [
            e for e, (u, v) in enumerate(self.edges) if u in local and v in local
        ]
        edges = tuple((local[self.edges[e][0]], local[self.edges[e][1]]) for e in edge_ids)
        return Graph(len(keep), edges), keep, edge_ids

    def to_networkx(self) -> nx.Graph:
        """Convert to a :class:`networkx.Graph` with an ``id`` edge attribute."""
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        for e, (u, v) in enumerate(self.edges):
            h.add_edge(u, v, id=e)
        return h

    # Serialization
    # -----------------------------------------------------------------------

    def to_text(self) -> str:
        """Serialize to the edge-list format, edges in identity order."""
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
        """Create a graph from a vertex count and an edge iterable."""
        return cls(n, tuple(edges))

    @classmethod
    def from_text(cls, text: str) -> Graph:
        """Parse a graph from the edge-list format.

        Arguments:
            text (str):
                The document.

        Returns:
            Graph:
                The graph. Edge identities follow the input order.

        Raises:
            GraphFormatError:
                The document is malformed. The error carries the line number.
        """
        header: Optional[Tuple[int, int]] = None
        edges: List[Pair] = []
        seen: Dict[Pair, int] = {}
        last_line = 0

        for lineno, raw in enumerate(text.splitlines(), start=1):
            last_line = lineno
            line = raw.split("#", 1)[0].strip()
            if line == "":
                continue

            fields = line.split()
            if len(fields) != 2:
                raise GraphFormatError(f"expected two integers: {raw!r}", lineno)
            try:
                a, b = int(fields[0]), int(fields[1])
            except ValueError:
                raise GraphFormatError(f"expected two integers: {raw!r}", lineno)

            if header is None:
                if a < 0 or b < 0:
                    raise GraphFormatError(f"negative header: {raw!r}", lineno)
                header = (a, b)
                continue

            n, m = header
            if len(edges) == m:
                raise GraphFormatError(f"more than {m} edges", lineno)
            if not (0 <= a < n and 0 <= b < n):
                raise GraphFormatError(f"vertex out of range 0..{n - 1}: {raw!r}", lineno)
            if a == b:
                raise GraphFormatError(f"self-loop at vertex {a}", lineno)
            key = _pair(a, b)
            if key in seen:
                raise GraphFormatError(
                    f"duplicate edge {a} {b} (first on line {seen[key]})", lineno
                )
            seen[key] = lineno
            edges.append((a, b))

        if header is None:
            raise GraphFormatError("missing header line 'n m'", max(last_line, 1))
        if len(edges) != header[1]:
            raise GraphFormatError(
                f"expected {header[1]} edges, found {len(edges)}", max(last_line, 1)
            )
        return cls(header[0], tuple(edges))

    @classmethod
    def from_file(cls, fd: TextIO) -> Graph:
        """Read a graph from a file object."""
        return cls.from_text(fd.read())

    @classmethod
    def from_path(cls, path: Path) -> Graph:
        """Read a graph from a path.

        Raises:
            FileNotFoundError:
                No such file.
            GraphFormatError:
                The file is malformed.
        """
        with Path(path).open() as fd:
            return cls.from_file(fd)


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format. See :meth:`Graph.from_text`."""
    return Graph.from_text(text)


# Components
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComponentView:
    """The connected components of a graph.

    Components are numbered in order of their smallest vertex.

    Parameters:
        labels (Tuple[int, ...]):
            The component index of each vertex.
        vertex_counts (Tuple[int, ...]):
            The number of vertices of each component.
        edge_counts (Tuple[int, ...]):
            The number of edges of each component.
        leaf_counts (Tuple[int, ...]):
            The number of degree-1 vertices of each component.
    """

    labels: Tuple[int, ...]  #: Component index per vertex.
    vertex_counts: Tuple[int, ...]  #: Vertices per component.
    edge_counts: Tuple[int, ...]  #: Edges per component.
    leaf_counts: Tuple[int, ...]  #: Leaves per component.

    @property
    def count(self) -> int:
        """The number of components."""
        return len(self.vertex_counts)

    def is_trivial(self, c: int) -> bool:
        """True if component ``c`` is an isolated vertex or an isolated edge."""
        return self.vertex_counts[c] <= 2

    def members(self, c: int) -> List[int]:
        """The vertices of component ``c``, smallest first."""
        return [v for v, label in enumerate(self.labels) if label == c]

    def nontrivial(self) -> List[int]:
        """The indices of the non-trivial components."""
        return [c for c in range(self.count) if not self.is_trivial(c)]


def components(g: Graph) -> ComponentView:
    """Compute the connected components by breadth-first search."""
    labels = [-1] * g.n
    vertex_counts: List[int] = []
    edge_counts: List[int] = []
    leaf_counts: List[int] = []

    for root in range(g.n):
        if labels[root] != -1:
            continue
        c = len(vertex_counts)
        labels[root] = c
        queue = deque([root])
        nv = degree_sum = leaves = 0
        while queue:
            v = queue.popleft()
            nv += 1
            degree_sum += g.degree(v)
            if g.degree(v) == 1:
                leaves += 1
            for w in g.neighbors(v):
                if labels[w] == -1:
                    labels[w] = c
                    queue.append(w)
        vertex_counts.append(nv)
        edge_counts.append(degree_sum // 2)
        leaf_counts.append(leaves)

    return ComponentView(
        labels=tuple(labels),
        vertex_counts=tuple(vertex_counts),
        edge_counts=tuple(edge_counts),
        leaf_counts=tuple(leaf_counts),
    )


def component_subgraphs(g: Graph) -> Iterator[Tuple[Graph, List[int], List[int]]]:
    """Yield ``(subgraph, vertex ids, edge ids)`` for every component."""
    view = components(g)
    groups: List[List[int]] = [[] for _ in range(view.count)]
    for v, c in enumerate(view.labels):
        groups[c].append(v)
    for group in groups:
        yield g.subgraph(group)


# Structural queries
# ---------------------------------------------------------------------------


def find_bridges(g: Graph) -> Set[int]:
    """Find the edges whose removal disconnects their component.

    This is the lowlink traversal, written iteratively so deep paths do not
    hit the recursion limit. The parent edge is skipped by identity.

    Returns:
        Set[int]: The identities of the bridges.
    """
    order = [-1] * g.n
    low = [0] * g.n
    bridges: Set[int] = set()
    counter = 0

    for root in range(g.n):
        if order[root] != -1:
            continue
        order[root] = low[root] = counter
        counter += 1
        # Frames are (vertex, edge used to enter it, next adjacency index).
        stack: List[List[int]] = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            v, parent_edge, i = frame
            adj = g.adjacency[v]
            if i < len(adj):
                frame[2] += 1
                w, e = adj[i]
                if e == parent_edge:
                    continue
                if order[w] == -1:
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append([w, e, 0])
                else:
                    low[v] = min(low[v], order[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] > order[u]:
                        bridges.add(parent_edge)

    return bridges


def is_subcubic(g: Graph) -> bool:
    """True if no vertex has degree above 3."""
    return g.max_degree() <= 3


def find_claw(g: Graph) -> Optional[Tuple[int, int, int, int]]:
    """Find an induced claw ``(center, a, b, c)``, or None.

    The scan checks every neighbor triple of every vertex, which costs
    ``O(sum of deg^3)``.
    """
    for v in range(g.n):
        for a, b, c in combinations(g.neighbors(v), 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return (v, a, b, c)
    return None


def is_claw_free(g: Graph) -> bool:
    """True if the graph has no induced :math:`K_{1,3}`."""
    return find_claw(g) is None


def list_triangles(g: Graph) -> List[Tuple[int, int, int]]:
    """Enumerate every triangle once, as sorted triples in sorted order."""
    triangles = []
    for u in range(g.n):
        higher = [w for w in g.neighbors(u) if w > u]
        for v, w in combinations(higher, 2):
            if g.has_edge(v, w):
                triangles.append((u, v, w))
    return triangles
