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

"""Rewrite steps and the rewrite log.

A step is a small frozen record that names, in the identities of the graph
it was applied to, exactly what it changes. Applying a step to that graph
with :meth:`RewriteStep.apply` yields a :class:`Rewrite`: the new graph plus
tables translating old identities into new ones. Replaying a log therefore
needs nothing but the original graph and the steps.

Identities are compacted after every step. Surviving vertices and edges keep
their relative order and fresh ones are appended after them.

.. rubric:: Trace Format

:meth:`RewriteLog.to_trace` writes one step per line: a tag followed by
``key=value`` fields. Lists are comma separated, the members of a nested
tuple are colon separated and ``-`` marks an empty or missing value::

    mod3 triangles=0:1:2 retained=- needles=2,4,5 discarded=-
    mod1 hub=3 removed=5 retained=4
    mod2 vertex=0 u1=1 u2=2
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, fields
from typing import Dict, List, Optional, Tuple, Union

from me2c.errors import CertificationError, PreconditionError
from me2c.graph import Graph


logger = logging.getLogger(__name__)


class GraphEditor:
    """A mutable scratch copy of a graph used to perform one step.

    The editor keeps the identities of the source graph. New vertices and
    edges get identities after the existing ones, in creation order, and
    removed ones leave holes that :meth:`finish` compacts away.
    """

    def __init__(self, g: Graph):
        self.source = g
        self.alive = [True] * g.n
        self.edges: List[Optional[Tuple[int, int]]] = list(g.edges)
        self.adj: List[Dict[int, int]] = [dict(a) for a in g.adjacency]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> List[int]:
        return sorted(self.adj[v])

    def edge_id(self, u: int, v: int) -> Optional[int]:
        return self.adj[u].get(v)

    def add_vertex(self) -> int:
        self.alive.append(True)
        self.adj.append({})
        return len(self.alive) - 1

    def remove_vertex(self, v: int):
        if self.adj[v]:
            raise PreconditionError(f"vertex {v} still has edges")
        self.alive[v] = False

    def add_edge(self, u: int, v: int) -> int:
        if u == v or v in self.adj[u]:
            raise PreconditionError(f"cannot add edge {u} {v}")
        e = len(self.edges)
        self.edges.append((u, v))
        self.adj[u][v] = e
        self.adj[v][u] = e
        return e

    def remove_edge(self, e: int):
        pair = self.edges[e]
        if pair is None:
            raise PreconditionError(f"edge {e} was already removed")
        u, v = pair
        del self.adj[u][v]
        del self.adj[v][u]
        self.edges[e] = None

    def move_edge(self, e: int, u: int, v: int):
        """Give edge ``e`` new endpoints while keeping its identity."""
        self.remove_edge(e)
        if u == v or v in self.adj[u]:
            raise PreconditionError(f"cannot move edge {e} onto {u} {v}")
        self.edges[e] = (u, v)
        self.adj[u][v] = e
        self.adj[v][u] = e

    def finish(self) -> Rewrite:
        """Compact identities and build the resulting graph."""
        vertex_map: List[Optional[int]] = []
        next_id = 0
        for ok in self.alive:
            if ok:
                vertex_map.append(next_id)
                next_id += 1
            else:
                vertex_map.append(None)

        edge_map: List[Optional[int]] = []
        edges = []
        for pair in self.edges:
            if pair is None:
                edge_map.append(None)
            else:
                u, v = pair
                edge_map.append(len(edges))
                edges.append((vertex_map[u], vertex_map[v]))

        after = Graph(next_id, tuple(edges))
        return Rewrite(self.source, after, tuple(vertex_map), tuple(edge_map))


@dataclass(frozen=True)
class Rewrite:
    """The outcome of applying one step.

    Parameters:
        before (Graph): The graph the step was applied to.
        after (Graph): The resulting graph.
        vertex_map (Tuple[Optional[int], ...]):
            For every editor vertex (the old ones first, then the fresh
            ones) its identity in ``after``, or None if it was removed.
        edge_map (Tuple[Optional[int], ...]):
            The same for edges.
    """

    before: Graph
    after: Graph
    vertex_map: Tuple[Optional[int], ...]
    edge_map: Tuple[Optional[int], ...]

    def fresh_edge(self, k: int) -> int:
        """The identity in ``after`` of the ``k``-th edge the step created."""
        e = self.edge_map[self.before.m + k]
        assert e is not None
        return e

    def fresh_vertex(self, k: int) -> int:
        """The identity in ``after`` of the ``k``-th vertex the step created."""
        v = self.vertex_map[self.before.n + k]
        assert v is not None
        return v


def _format_value(value, depth: int = 0) -> str:
    if isinstance(value, (tuple, list)):
        sep = "," if depth == 0 else ":"
        return sep.join(_format_value(x, depth + 1) for x in value) or "-"
    if value is None:
        return "-"
    return str(value)


class _StepBase:
    """Shared helpers for the step records."""

    tag = "step"

    def to_trace(self) -> str:
        """Format this step as one trace line."""
        parts = [self.tag]
        for f in fields(self):
            parts.append(f"{f.name}={_format_value(getattr(self, f.name))}")
        return " ".join(parts)


@dataclass(frozen=True)
class Mod1Leaf(_StepBase):
    """Remove a leaf that shares its neighbor with another leaf.

    Parameters:
        hub (int): The common neighbor, of degree at least 3.
        removed (int): The leaf that is deleted together with its edge.
        retained (int): A leaf of ``hub`` that stays.
    """

    tag = "mod1"

    hub: int
    removed: int
    retained: int

    def apply(self, g: Graph) -> Rewrite:
        ed = GraphEditor(g)
        e = ed.edge_id(self.hub, self.removed)
        if e is None or ed.degree(self.removed) != 1 or ed.edge_id(self.hub, self.retained) is None:
            raise PreconditionError(f"{self.to_trace()} does not fit the graph")
        ed.remove_edge(e)
        ed.remove_vertex(self.removed)
        return ed.finish()


@dataclass(frozen=True)
class Mod2Split(_StepBase):
    """Split a degree-2 vertex into two leaves.

    The vertex keeps its identity as the leaf on the ``u1`` side. The leaf on
    the ``u2`` side is fresh, and the edge to ``u2`` moves onto it, so both
    edges keep their identities.

    Parameters:
        vertex (int): The degree-2 vertex.
        u1 (int): Its smaller neighbor.
        u2 (int): Its larger neighbor.
    """

    tag = "mod2"

    vertex: int
    u1: int
    u2: int

    def apply(self, g: Graph) -> Rewrite:
        ed = GraphEditor(g)
        if ed.neighbors(self.vertex) != [self.u1, self.u2]:
            raise PreconditionError(f"{self.to_trace()} does not fit the graph")
        e2 = ed.edge_id(self.vertex, self.u2)
        leaf = ed.add_vertex()
        ed.move_edge(e2, self.u2, leaf)
        return ed.finish()


@dataclass(frozen=True)
class Mod3Cactus(_StepBase):
    """Replace the triangles of a simple cactus by independent edges.

    Parameters:
        triangles (Tuple[Tuple[int, int, int], ...]):
            The triangles, as sorted vertex triples.
        retained (Tuple[Optional[Tuple[int, int]], ...]):
            Per triangle, a triangle edge that is kept in place of a fresh
            edge, or None. Only the perfect-matching variant keeps edges.
        needles (Tuple[int, ...]):
            The identities of the needles.
        discarded (Tuple[int, ...]):
            The cactus vertices left isolated and removed.
    """

    tag = "mod3"

    triangles: Tuple[Tuple[int, int, int], ...]
    retained: Tuple[Optional[Tuple[int, int]], ...]
    needles: Tuple[int, ...]
    discarded: Tuple[int, ...]

    def triangle_edges(self, g: Graph, i: int) -> List[int]:
        """The identities of the three edges of triangle ``i``."""
        a, b, c = self.triangles[i]
        out = [g.edge_id(a, b), g.edge_id(a, c), g.edge_id(b, c)]
        if None in out:
            raise PreconditionError(f"triangle {a} {b} {c} is not in the graph")
        return out  # type: ignore[return-value]

    def apply(self, g: Graph) -> Rewrite:
        ed = GraphEditor(g)
        for i, keep in enumerate(self.retained):
            kept = None if keep is None else g.edge_id(*keep)
            for e in self.triangle_edges(g, i):
                if e != kept:
                    ed.remove_edge(e)
        for keep in self.retained:
            if keep is None:
                x = ed.add_vertex()
                y = ed.add_vertex()
                ed.add_edge(x, y)
        for v in self.discarded:
            ed.remove_vertex(v)
        return ed.finish()

    def replacement_edges(self, rw: Rewrite) -> List[int]:
        """The edge of ``rw.after`` standing in for each triangle."""
        out = []
        fresh = 0
        for keep in self.retained:
            if keep is None:
                out.append(rw.fresh_edge(fresh))
                fresh += 1
            else:
                e = rw.edge_map[rw.before.edge_id(*keep)]
                assert e is not None
                out.append(e)
        return out


@dataclass(frozen=True)
class Mod4Side:
    """One endpoint of a removed bridge.

    Parameters:
        center (int): The bridge endpoint.
        ends (Tuple[int, ...]): Its other neighbors (empty for a leaf).
        removed (Tuple[int, ...]): The edges from ``center`` to ``ends``.
        existing (Optional[int]):
            The identity of an edge already joining the two ends, in which
            case no second copy is added.
    """

    center: int
    ends: Tuple[int, ...]
    removed: Tuple[int, ...]
    existing: Optional[int]

    @property
    def deduplicated(self) -> bool:
        return self.existing is not None

    def __str__(self) -> str:
        ends = _format_value(self.ends, 1)
        flag = ":dedup" if self.deduplicated else ""
        return f"{self.center}/{ends}{flag}"


@dataclass(frozen=True)
class Mod4Bridge(_StepBase):
    """Cut a bridge loose and join the former neighbors of its endpoints.

    On each degree-3 side the first removed edge moves onto the pair of
    ends and becomes the join edge, unless the ends are already adjacent.

    Parameters:
        bridge (int): The bridge identity.
        case (str): The endpoint degrees, ``"3-1"``, ``"1-3"`` or ``"3-3"``.
        sides (Tuple[Mod4Side, ...]): The endpoints with three neighbors.
    """

    tag = "mod4"

    bridge: int
    case: str
    sides: Tuple[Mod4Side, ...]

    def apply(self, g: Graph) -> Rewrite:
        ed = GraphEditor(g)
        for side in self.sides:
            first, second = side.removed
            if side.existing is None:
                ed.move_edge(first, *side.ends)
            else:
                ed.remove_edge(first)
            ed.remove_edge(second)
        return ed.finish()

    def join_edge(self, rw: Rewrite, side: Mod4Side) -> int:
        """The edge of ``rw.after`` joining the ends of ``side``."""
        e = side.existing if side.existing is not None else side.removed[0]
        out = rw.edge_map[e]
        assert out is not None
        return out


@dataclass(frozen=True)
class Mod5Contract(_StepBase):
    """Contract two adjacent vertices that each carry one pendant edge.

    ``u1`` becomes the merged vertex and keeps its pendant edge to ``v1``.
    The other edges of ``u2`` move to ``u1``, except those to common
    neighbors, which are dropped. The edge ``u1 u2`` is deleted, so
    ``u2 v2`` is left over as the new isolated edge.

    Parameters:
        u1 (int): The vertex that absorbs ``u2``.
        u2 (int): The vertex that is absorbed.
        v1 (int): The leaf of ``u1``.
        v2 (int): The leaf of ``u2``.
        contracted (int): The identity of edge ``u1 u2``.
        moved (Tuple[int, ...]): Edges of ``u2`` re-attached to ``u1``.
        merged (Tuple[Tuple[int, int], ...]):
            Pairs ``(dropped, kept)``: an edge of ``u2`` to a common
            neighbor and the edge of ``u1`` that replaces it.
    """

    tag = "mod5"

    u1: int
    u2: int
    v1: int
    v2: int
    contracted: int
    moved: Tuple[int, ...]
    merged: Tuple[Tuple[int, int], ...]

    def apply(self, g: Graph) -> Rewrite:
        ed = GraphEditor(g)
        ed.remove_edge(self.contracted)
        for dropped, _ in self.merged:
            ed.remove_edge(dropped)
        for e in self.moved:
            x = g.other(e, self.u2)
            ed.move_edge(e, self.u1, x)
        return ed.finish()


#: Any rewrite step.
RewriteStep = Union[Mod1Leaf, Mod2Split, Mod3Cactus, Mod4Bridge, Mod5Contract]


@dataclass(frozen=True)
class LogEntry:
    """A step together with the rewrite it produced."""

    step: RewriteStep
    rewrite: Rewrite


@dataclass(frozen=True)
class RewriteLog:
    """The ordered steps that turned ``original`` into ``result``.

    Parameters:
        original (Graph): The input graph.
        entries (Tuple[LogEntry, ...]): The steps with their rewrites.
    """

    original: Graph
    entries: Tuple[LogEntry, ...] = field(default=())

    @property
    def steps(self) -> List[RewriteStep]:
        """The steps in application order."""
        return [entry.step for entry in self.entries]

    @property
    def result(self) -> Graph:
        """The graph after the last step."""
        return self.entries[-1].rewrite.after if self.entries else self.original

    def __len__(self) -> int:
        return len(self.entries)

    def append(self, step: RewriteStep, rewrite: Rewrite) -> RewriteLog:
        """Return a log extended by one step."""
        return RewriteLog(self.original, self.entries + (LogEntry(step, rewrite),))

    def replay(self) -> Graph:
        """Re-apply every step to ``original``.

        Raises:
            CertificationError: The replay diverges from the stored graphs.
        """
        g = self.original
        for i, entry in enumerate(self.entries):
            g = entry.step.apply(g).after
            if g != entry.rewrite.after:
                raise CertificationError(f"replay diverged at step {i}: {entry.step.to_trace()}")
        return g

    def counts(self) -> Dict[str, int]:
        """The number of applications per step tag."""
        out = {tag: 0 for tag in ("mod1", "mod2", "mod3", "mod4", "mod5")}
        for entry in self.entries:
            out[entry.step.tag] += 1
        return out

    def to_trace(self) -> str:
        """Format the log as a line-oriented trace."""
        return "".join(entry.step.to_trace() + "\n" for entry in self.entries)

