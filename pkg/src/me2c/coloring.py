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

"""Edge 2-colorings.

A coloring assigns a color to every edge. It is *feasible* when every vertex
sees at most two distinct colors. Colors are always canonical: they are the
integers ``0..k-1`` numbered in order of first use along the edge identities.

.. rubric:: Coloring Format

.. code:: text

    colors 3
    0 1 0
    1 2 1
    0 2 2

The header gives the color count. Each following line repeats an edge of the
graph, in identity order, followed by its color.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from me2c.errors import (
    CertificationError,
    GraphFormatError,
    InfeasibleColoringError,
    PreconditionError,
)
from me2c.graph import Graph
from me2c.matching import maximum_matching
from me2c.normalize import is_normalized
from me2c.rewrite import (
    Mod1Leaf,
    Mod2Split,
    Mod3Cactus,
    Mod4Bridge,
    Mod5Contract,
    Rewrite,
    RewriteLog,
)


logger = logging.getLogger(__name__)


def _canonical(colors: Sequence[int]) -> Tuple[int, ...]:
    names: Dict[int, int] = {}
    out = []
    for c in colors:
        if c not in names:
            names[c] = len(names)
        out.append(names[c])
    return tuple(out)


@dataclass(frozen=True)
class EdgeColoring:
    """A color for every edge of a graph.

    The colors are renumbered to canonical form on construction, so two
    colorings that differ only by color names compare equal.

    Parameters:
        colors (Sequence[int]): The color of each edge, by edge identity.
    """

    colors: Tuple[int, ...]  #: Canonical color per edge.

    def __post_init__(self):
        object.__setattr__(self, "colors", _canonical(self.colors))

    @property
    def count(self) -> int:
        """The number of distinct colors."""
        return max(self.colors, default=-1) + 1

    def __len__(self) -> int:
        return len(self.colors)

    def seen(self, g: Graph, v: int) -> FrozenSet[int]:
        """The colors at vertex ``v``."""
        return frozenset(self.colors[e] for e in g.incident(v))

    def classes(self) -> List[List[int]]:
        """The edges of each color."""
        out: List[List[int]] = [[] for _ in range(self.count)]
        for e, c in enumerate(self.colors):
            out[c].append(e)
        return out

    def to_text(self, g: Graph) -> str:
        """Serialize to the coloring format."""
        self._check_total(g)
        lines = [f"colors {self.count}"]
        lines += [f"{u} {v} {c}" for (u, v), c in zip(g.edges, self.colors)]
        return "\n".join(lines) + "\n"

    def _check_total(self, g: Graph):
        if len(self.colors) != g.m:
            raise PreconditionError(f"coloring has {len(self.colors)} edges, graph has {g.m}")

    @classmethod
    def from_text(cls, text: str, g: Graph) -> EdgeColoring:
        """Parse the coloring format against graph ``g``.

        Raises:
            GraphFormatError:
                The document is malformed, disagrees with the edges of ``g``,
                or its header count is wrong.
        """
        declared: Optional[int] = None
        colors: List[int] = []
        last_line = 0
        for lineno, raw in enumerate(text.splitlines(), start=1):
            last_line = lineno
            line = raw.split("#", 1)[0].strip()
            if line == "":
                continue
            fields_ = line.split()
            if declared is None:
                if len(fields_) != 2 or fields_[0] != "colors" or not fields_[1].isdigit():
                    raise GraphFormatError(f"expected 'colors k': {raw!r}", lineno)
                declared = int(fields_[1])
                continue
            try:
                u, v, c = (int(x) for x in fields_)
            except ValueError:
                raise GraphFormatError(f"expected three integers: {raw!r}", lineno)
            e = len(colors)
            if e >= g.m:
                raise GraphFormatError(f"more than {g.m} colored edges", lineno)
            if tuple(sorted((u, v))) != g.edges[e]:
                a, b = g.edges[e]
                raise GraphFormatError(f"edge {e} is {a} {b}, not {u} {v}", lineno)
            if c < 0:
                raise GraphFormatError(f"negative color {c}", lineno)
            colors.append(c)

        if declared is None:
            raise GraphFormatError("missing header 'colors k'", max(last_line, 1))
        if len(colors) != g.m:
            raise GraphFormatError(f"expected {g.m} colored edges, found {len(colors)}", max(last_line, 1))
        chi = cls(tuple(colors))
        if chi.count != declared:
            raise GraphFormatError(f"header says {declared} colors, found {chi.count}", 1)
        return chi


# Feasibility
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    """A vertex that sees more than two colors."""

    vertex: int  #: The first offending vertex.
    colors: FrozenSet[int]  #: The colors it sees.

    def to_error(self) -> InfeasibleColoringError:
        return InfeasibleColoringError(self.vertex, self.colors)


def check_feasible(g: Graph, chi: EdgeColoring) -> Optional[Violation]:
    """Check that every vertex sees at most two colors.

    Returns:
        Optional[Violation]: None if feasible, else the smallest offender.

    Raises:
        PreconditionError: ``chi`` does not color every edge of ``g``.
    """
    chi._check_total(g)
    for v in range(g.n):
        seen = chi.seen(g, v)
        if len(seen) > 2:
            return Violation(v, seen)
    return None


def require_feasible(g: Graph, chi: EdgeColoring):
    """Like :func:`check_feasible` but raise on a violation.

    Raises:
        InfeasibleColoringError: Some vertex sees three or more colors.
    """
    violation = check_feasible(g, chi)
    if violation is not None:
        raise violation.to_error()


def colors_adjacent_ok(g: Graph, chi: EdgeColoring, u: int, v: int) -> bool:
    """Check the adjacency rule for a feasible coloring.

    Two vertices that together see four or more colors cannot be adjacent.
    The function returns False exactly when that rule is broken.
    """
    if not g.has_edge(u, v):
        return True
    return len(chi.seen(g, u) | chi.seen(g, v)) < 4


# The matching-based algorithm
# ---------------------------------------------------------------------------


def basic_algorithm(g: Graph) -> EdgeColoring:
    """Color with a maximum matching plus one color per leftover component.

    Every matched edge gets its own color. The unmatched edges split into
    connected components and each component gets one more color. A vertex
    then sees at most its matched color and the color of its component.

    Returns:
        EdgeColoring:
            A feasible coloring with ``|M| + c`` colors, where ``c`` is the
            number of components of the unmatched edges.
    """
    matching = maximum_matching(g)
    colors = [-1] * g.m
    for k, e in enumerate(sorted(matching.edges)):
        colors[e] = k

    next_color = matching.size
    for start in range(g.m):
        if colors[start] != -1:
            continue
        colors[start] = next_color
        queue = deque([start])
        while queue:
            e = queue.popleft()
            for x in g.edges[e]:
                for f in g.incident(x):
                    if colors[f] == -1:
                        colors[f] = next_color
                        queue.append(f)
        next_color += 1

    chi = EdgeColoring(tuple(colors))
    logger.debug(f"basic algorithm: |M|={matching.size}, {chi.count} colors")
    return chi


# Lifting
# ---------------------------------------------------------------------------


def _pull(rw: Rewrite, colors: Sequence[int]) -> List[Optional[int]]:
    out: List[Optional[int]] = []
    for e in range(rw.before.m):
        f = rw.edge_map[e]
        out.append(None if f is None else colors[f])
    return out


def _fresh(colors: Sequence[Optional[int]]) -> int:
    return max((c for c in colors if c is not None), default=-1) + 1


def _lift_mod1(step: Mod1Leaf, rw: Rewrite, colors: List[int]) -> List[Optional[int]]:
    out = _pull(rw, colors)
    hub = rw.vertex_map[step.hub]
    seen = {colors[f] for f in rw.after.incident(hub)}  # type: ignore[arg-type]
    out[rw.before.edge_id(step.hub, step.removed)] = min(seen)  # type: ignore[index]
    return out


def _lift_mod2(step: Mod2Split, rw: Rewrite, colors: List[int]) -> List[Optional[int]]:
    return _pull(rw, colors)


def _lift_mod3(step: Mod3Cactus, rw: Rewrite, colors: List[int]) -> List[Optional[int]]:
    out = _pull(rw, colors)
    for i, replacement in enumerate(step.replacement_edges(rw)):
        for e in step.triangle_edges(rw.before, i):
            out[e] = colors[replacement]
    return out


def _lift_mod4(step: Mod4Bridge, rw: Rewrite, colors: List[int]) -> List[Optional[int]]:
    out = _pull(rw, colors)
    for side in step.sides:
        join = colors[step.join_edge(rw, side)]
        for e in side.removed:
            out[e] = join
    return out


def _isolate_pendant_color(g: Graph, colors: List[int], pendant: int, hub: int):
    """Give pendant edge ``pendant`` a color no other edge has, in place.

    If the hub sees a second color, that color is merged into the pendant's
    color everywhere and then handed to the pendant alone. Otherwise the
    pendant gets a fresh color. The color count never drops.
    """
    c1 = colors[pendant]
    if sum(1 for c in colors if c == c1) == 1:
        return
    seen = {colors[f] for f in g.incident(hub)}
    if len(seen) == 1:
        colors[pendant] = _fresh(colors)
        return
    (c2,) = seen - {c1}
    for f, c in enumerate(colors):
        if c == c2:
            colors[f] = c1
    colors[pendant] = c2


def _lift_mod5(step: Mod5Contract, rw: Rewrite, colors: List[int]) -> List[Optional[int]]:
    colors = list(colors)
    u12 = rw.vertex_map[step.u1]
    pendant = rw.edge_map[rw.before.edge_id(step.u1, step.v1)]  # type: ignore[index]
    _isolate_pendant_color(rw.after, colors, pendant, u12)  # type: ignore[arg-type]

    out = _pull(rw, colors)
    others = {colors[f] for f in rw.after.incident(u12)} - {colors[pendant]}  # type: ignore[arg-type]
    out[step.contracted] = min(others) if others else _fresh(colors)
    for dropped, kept in step.merged:
        out[dropped] = colors[rw.edge_map[kept]]  # type: ignore[index]
    return out


_LIFTERS: Dict[type, Callable] = {
    Mod1Leaf: _lift_mod1,
    Mod2Split: _lift_mod2,
    Mod3Cactus: _lift_mod3,
    Mod4Bridge: _lift_mod4,
    Mod5Contract: _lift_mod5,
}


def lift_coloring(log: RewriteLog, chi: EdgeColoring) -> EdgeColoring:
    """Turn a coloring of ``log.result`` into one of ``log.original``.

    Steps are undone newest first. Every rule keeps the coloring feasible and
    never loses a color.

    Raises:
        InfeasibleColoringError: ``chi`` is not feasible on the result graph.
        PreconditionError: ``chi`` does not fit the result graph.
        CertificationError: A rule produced an infeasible coloring.
    """
    require_feasible(log.result, chi)
    colors: List[int] = list(chi.colors)
    for entry in reversed(log.entries):
        lifted = _LIFTERS[type(entry.step)](entry.step, entry.rewrite, colors)
        if any(c is None for c in lifted):
            raise CertificationError(f"lifting left edges uncolored: {entry.step.to_trace()}")
        colors = lifted  # type: ignore[assignment]

    out = EdgeColoring(tuple(colors))
    violation = check_feasible(log.original, out)
    if violation is not None:
        raise CertificationError(f"lifted coloring is infeasible: {violation.to_error()}")
    if out.count < chi.count:
        raise CertificationError(f"lifting lost colors: {chi.count} -> {out.count}")
    return out


def make_pendant_colors_unique(g: Graph, chi: EdgeColoring) -> EdgeColoring:
    """Recolor so every pendant edge has a color of its own.

    Leaves are processed smallest first. Each fix merges the hub's second
    color into the pendant's color and then moves the pendant onto the freed
    color, or gives it a fresh color when the hub sees only one.

    Raises:
        PreconditionError: Two leaves share a neighbor.
    """
    require_feasible(g, chi)
    hubs: Set[int] = set()
    for v in g.leaves():
        (u,) = g.neighbors(v)
        if u in hubs:
            raise PreconditionError(f"vertex {u} has two leaf neighbors")
        hubs.add(u)

    colors = list(chi.colors)
    for v in g.leaves():
        (u,) = g.neighbors(v)
        _isolate_pendant_color(g, colors, g.incident(v)[0], u)
    return EdgeColoring(tuple(colors))


# Character graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CharacterGraph:
    """A subgraph holding exactly one edge of each color.

    Parameters:
        host (Graph): The colored graph.
        coloring (EdgeColoring): The coloring of ``host``.
        edges (Tuple[int, ...]): The chosen edge of each color, by color.
    """

    host: Graph
    coloring: EdgeColoring
    edges: Tuple[int, ...]

    degrees: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        degrees = [0] * self.host.n
        for e in self.edges:
            for v in self.host.edges[e]:
                degrees[v] += 1
        object.__setattr__(self, "degrees", tuple(degrees))

    def validate(self):
        """Check one edge per color and maximum degree 2.

        Raises:
            CertificationError: The structure is broken.
        """
        if len(self.edges) != self.coloring.count:
            raise CertificationError("character graph needs one edge per color")
        for c, e in enumerate(self.edges):
            if self.coloring.colors[e] != c:
                raise CertificationError(f"edge {e} does not have color {c}")
        if any(d > 2 for d in self.degrees):
            raise CertificationError("character graph has a vertex of degree > 2")

    @property
    def free(self) -> List[int]:
        """Vertices without character edges."""
        return [v for v, d in enumerate(self.degrees) if d == 0]

    @property
    def end(self) -> List[int]:
        """Vertices with one character edge."""
        return [v for v, d in enumerate(self.degrees) if d == 1]

    @property
    def inner(self) -> List[int]:
        """Vertices with two character edges."""
        return [v for v, d in enumerate(self.degrees) if d == 2]

    def _adjacency(self) -> List[List[Tuple[int, int]]]:
        adj: List[List[Tuple[int, int]]] = [[] for _ in range(self.host.n)]
        for e in sorted(self.edges):
            u, v = self.host.edges[e]
            adj[u].append((v, e))
            adj[v].append((u, e))
        return adj

    def _components(self) -> List[List[int]]:
        adj = self._adjacency()
        seen = [False] * self.host.n
        out = []
        for root in range(self.host.n):
            if seen[root]:
                continue
            seen[root] = True
            group = [root]
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for w, _ in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        group.append(w)
                        queue.append(w)
            out.append(sorted(group))
        return out

    def components(self) -> int:
        """The number of components, free vertices included."""
        return len(self._components())

    def cycles(self) -> List[List[int]]:
        """The components that are cycles, as sorted vertex lists."""
        return [
            group
            for group in self._components()
            if len(group) > 2 and all(self.degrees[v] == 2 for v in group)
        ]

    def is_acyclic(self) -> bool:
        """True if the character graph is a forest of paths."""
        return not self.cycles()


def extract_character_graph(g: Graph, chi: EdgeColoring) -> CharacterGraph:
    """Pick the smallest-identity edge of every color."""
    require_feasible(g, chi)
    h = CharacterGraph(g, chi, tuple(edges[0] for edges in chi.classes()))
    h.validate()
    return h


def make_cycle_free(g: Graph, chi: EdgeColoring, h: CharacterGraph) -> CharacterGraph:
    """Break every cycle of ``h`` by swapping in an edge that leaves it.

    For a cycle vertex ``u`` with a neighbor ``v`` off the cycle, the edge
    ``uv`` shares its color with one of the two cycle edges at ``u``; that
    cycle edge is replaced by ``uv``. The smallest such ``u`` and ``v`` are
    used. Each swap removes one cycle and creates none.

    Raises:
        PreconditionError:
            ``g`` is not normalized.
        CertificationError:
            Two cycle vertices are adjacent in ``g`` although together they
            see four colors.
    """
    if not is_normalized(g):
        raise PreconditionError("character cycles can only be broken in a normalized graph")
    edges = list(h.edges)
    while True:
        current = CharacterGraph(g, chi, tuple(edges))
        cycles = current.cycles()
        if not cycles:
            current.validate()
            return current

        cycle = cycles[0]
        members = set(cycle)
        for i, u in enumerate(cycle):
            for w in cycle[i + 1 :]:
                if not colors_adjacent_ok(g, chi, u, w):
                    raise CertificationError(f"cycle vertices {u} and {w} are adjacent")

        swap = None
        for u in cycle:
            outside = [v for v in g.neighbors(u) if v not in members]
            if outside:
                swap = (u, outside[0])
                break
        if swap is None:
            raise PreconditionError(
                f"character cycle {cycle} has no outside neighbor; normalize the graph first"
            )

        u, v = swap
        e = g.edge_id(u, v)
        c = chi.colors[e]  # type: ignore[index]
        logger.debug(f"character cycle {cycle}: swap color {c} onto edge {u} {v}")
        edges[c] = e  # type: ignore[assignment]
