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

"""Normalization: the five graph modifications and the pipelines using them.

Each modification has a *finder* that returns the step to perform (or None)
and an ``apply_*`` function that performs it. Every finder picks the
applicable instance with the smallest identities.

=================  ========================================================
strategy           modifications
=================  ========================================================
general            2, then 1, then 3, until none applies
subcubic           the general loop; when it is exhausted, one 4; repeat
clawfree           the general loop, plus 5 right after a qualifying 2
pm                 the general loop with the matching-preserving 3, while
                   tracking a perfect matching and the leaves created by 2
=================  ========================================================
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from me2c.errors import CertificationError, PreconditionError, StepLimitError
from me2c.graph import Graph, find_bridges, is_claw_free, is_subcubic, list_triangles
from me2c.matching import Matching, is_perfect, maximum_matching
from me2c.rewrite import (
    LogEntry,
    Mod1Leaf,
    Mod2Split,
    Mod3Cactus,
    Mod4Bridge,
    Mod4Side,
    Mod5Contract,
    Rewrite,
    RewriteLog,
    RewriteStep,
)


logger = logging.getLogger(__name__)


class Strategy(enum.Enum):
    """A normalization pipeline."""

    GENERAL = "general"
    SUBCUBIC = "subcubic"
    CLAWFREE = "clawfree"
    PERFECT_MATCHING = "pm"

    @classmethod
    def parse(cls, name: str) -> Strategy:
        """Look up a strategy by its name.

        Raises:
            PreconditionError: No strategy has that name.
        """
        for s in cls:
            if s.value == name:
                return s
        names = ", ".join(s.value for s in cls)
        raise PreconditionError(f"unknown strategy {name!r} (expected one of: {names})")


def check_strategy(g: Graph, strategy: Strategy):
    """Raise PreconditionError if ``g`` does not suit ``strategy``."""
    if strategy is Strategy.SUBCUBIC and not is_subcubic(g):
        raise PreconditionError(f"graph has max degree {g.max_degree()}, not subcubic")
    if strategy is Strategy.CLAWFREE and not is_claw_free(g):
        raise PreconditionError("graph contains an induced claw")
    if strategy is Strategy.PERFECT_MATCHING and not is_perfect(maximum_matching(g), g):
        raise PreconditionError("graph has no perfect matching")


# Modification 1 and 2
# ---------------------------------------------------------------------------


def find_mod1(g: Graph, matched: Optional[FrozenSet[int]] = None) -> Optional[Mod1Leaf]:
    """Find two leaves with a common neighbor of degree at least 3.

    Arguments:
        g (Graph):
            The graph.
        matched (Optional[FrozenSet[int]]):
            Matched vertices. A matched leaf is always retained and never
            removed.
    """
    matched = matched or frozenset()
    for u in range(g.n):
        if g.degree(u) < 3:
            continue
        leaves = [w for w in g.neighbors(u) if g.degree(w) == 1]
        if len(leaves) < 2:
            continue
        keep = [w for w in leaves if w in matched]
        retained = keep[0] if keep else leaves[0]
        removed = next(w for w in leaves if w != retained and w not in matched)
        return Mod1Leaf(hub=u, removed=removed, retained=retained)
    return None


def apply_mod1(g: Graph) -> Optional[Tuple[Graph, Mod1Leaf]]:
    """Apply modification 1 once, or return None if it does not apply."""
    step = find_mod1(g)
    if step is None:
        return None
    return step.apply(g).after, step


def find_mod2(g: Graph) -> Optional[Mod2Split]:
    """Find the smallest vertex of degree 2."""
    for v in range(g.n):
        if g.degree(v) == 2:
            u1, u2 = g.neighbors(v)
            return Mod2Split(vertex=v, u1=u1, u2=u2)
    return None


def apply_mod2(g: Graph) -> Optional[Tuple[Graph, Mod2Split]]:
    """Apply modification 2 once, or return None if it does not apply."""
    step = find_mod2(g)
    if step is None:
        return None
    return step.apply(g).after, step


# Modification 3
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Cactus:
    """A simple triangular cactus inside a host graph.

    Parameters:
        triangles (Tuple[Tuple[int, int, int], ...]):
            The triangles as sorted triples, in discovery order. Every
            triangle after the first shares one vertex with an earlier one.
        needles (Tuple[int, ...]):
            The host edges that touch the cactus without belonging to it.
    """

    triangles: Tuple[Tuple[int, int, int], ...]
    needles: Tuple[int, ...]

    @property
    def vertices(self) -> List[int]:
        """The cactus vertices, smallest first."""
        return sorted({v for t in self.triangles for v in t})

    def edges(self, g: Graph) -> Set[int]:
        """The identities of the triangle edges."""
        out = set()
        for a, b, c in self.triangles:
            for u, v in ((a, b), (a, c), (b, c)):
                e = g.edge_id(u, v)
                if e is None:
                    raise PreconditionError(f"triangle {a} {b} {c} is not in the graph")
                out.add(e)
        return out

    def shared(self) -> List[int]:
        """The vertices that lie in two triangles."""
        count: Dict[int, int] = {}
        for t in self.triangles:
            for v in t:
                count[v] = count.get(v, 0) + 1
        return sorted(v for v, k in count.items() if k == 2)

    def validate(self, g: Graph):
        """Check the simple-cactus conditions in ``g``.

        Raises:
            PreconditionError: A condition does not hold.
        """
        if not self.triangles:
            raise PreconditionError("cactus has no triangles")
        cactus_edges = self.edges(g)
        if len(cactus_edges) != 3 * len(self.triangles):
            raise PreconditionError("cactus triangles share an edge")

        owners: Dict[int, List[int]] = {}
        for i, t in enumerate(self.triangles):
            for v in t:
                owners.setdefault(v, []).append(i)
        if any(len(ts) > 2 for ts in owners.values()):
            raise PreconditionError("a cactus vertex lies in three triangles")

        # The triangles must form a tree: connected, one link fewer than nodes.
        links = [ts for ts in owners.values() if len(ts) == 2]
        if len(links) != len(self.triangles) - 1:
            raise PreconditionError("cactus triangles do not form a tree")
        reached = {0}
        frontier = [0]
        while frontier:
            i = frontier.pop()
            for a, b in links:
                for x, y in ((a, b), (b, a)):
                    if x == i and y not in reached:
                        reached.add(y)
                        frontier.append(y)
        if len(reached) != len(self.triangles):
            raise PreconditionError("cactus is not connected")

        needles = set()
        for v in owners:
            if g.degree(v) not in (3, 4):
                raise PreconditionError(f"cactus vertex {v} has degree {g.degree(v)}")
            outside = [e for e in g.incident(v) if e not in cactus_edges]
            if len(outside) > 1:
                raise PreconditionError(f"cactus vertex {v} has {len(outside)} needles")
            needles.update(outside)
        if tuple(sorted(needles)) != self.needles:
            raise PreconditionError("cactus needles do not match the graph")


def find_simple_cactus(g: Graph) -> Optional[Cactus]:
    """Find a simple cactus.

    Candidate triangles are those whose vertices all have degree 3 or 4. A
    degree-4 vertex of a simple cactus lies in exactly two of its triangles,
    and the second one is forced: it must consist of the vertex and its two
    neighbors outside the first triangle. Candidates with a degree-4 vertex
    that has no such partner are discarded until none is left to discard.
    Each survivor, in order, seeds a cactus that grows by forced partners;
    growth fails when a partner would close a cycle of triangles.

    Returns:
        Optional[Cactus]: The first cactus found, or None.
    """
    degree = g.degrees()
    alive = {t for t in list_triangles(g) if all(degree[v] in (3, 4) for v in t)}

    def partner(t: Tuple[int, int, int], w: int) -> Optional[Tuple[int, int, int]]:
        others = [x for x in g.neighbors(w) if x not in t]
        if len(others) != 2:
            return None
        p = tuple(sorted((w, *others)))
        return p if p in alive else None  # type: ignore[return-value]

    changed = True
    while changed:
        changed = False
        for t in sorted(alive):
            if any(degree[w] == 4 and partner(t, w) is None for w in t):
                alive.discard(t)
                changed = True

    for seed in sorted(alive):
        triangles = [seed]
        owner: Dict[int, List[Tuple[int, int, int]]] = {v: [seed] for v in seed}
        pending = [w for w in seed if degree[w] == 4]
        ok = True
        while pending and ok:
            w = pending.pop(0)
            if len(owner[w]) == 2:
                continue
            p = partner(owner[w][0], w)
            fresh = [x for x in p if x != w] if p else []
            if p is None or any(x in owner for x in fresh):
                ok = False
                break
            triangles.append(p)
            owner[w].append(p)
            for x in fresh:
                owner[x] = [p]
                if degree[x] == 4:
                    pending.append(x)
        if not ok:
            logger.debug(f"cactus seed {seed} closes a cycle of triangles")
            continue

        cactus = Cactus(tuple(triangles), ())
        cactus_edges = cactus.edges(g)
        needles = sorted(
            {e for v in owner for e in g.incident(v) if e not in cactus_edges}
        )
        cactus = Cactus(tuple(triangles), tuple(needles))
        cactus.validate(g)
        return cactus

    return None


def mod3_step(g: Graph, c: Cactus, matching: Optional[Matching] = None) -> Mod3Cactus:
    """Build the modification-3 step for cactus ``c``.

    Without a matching every triangle is replaced by a fresh edge. With a
    matching, a triangle that contains a matched edge keeps that edge, and
    the others get a fresh edge.

    Raises:
        PreconditionError:
            The cactus is not simple, or a cactus vertex is unmatched.
    """
    c.validate(g)
    retained: List[Optional[Tuple[int, int]]] = []
    removed_at: Dict[int, int] = {}

    for t in c.triangles:
        a, b, d = t
        pairs = [(a, b), (a, d), (b, d)]
        keep = None
        if matching is not None:
            for v in t:
                if not matching.is_matched(v):
                    raise PreconditionError(f"cactus vertex {v} is not matched")
            in_m = [p for p in pairs if g.edge_id(*p) in matching.edges]
            keep = in_m[0] if in_m else None
        retained.append(keep)
        for p in pairs:
            if p != keep:
                for v in p:
                    removed_at[v] = removed_at.get(v, 0) + 1

    discarded = tuple(v for v in c.vertices if g.degree(v) == removed_at.get(v, 0))
    return Mod3Cactus(
        triangles=c.triangles,
        retained=tuple(retained),
        needles=c.needles,
        discarded=discarded,
    )


def apply_mod3(g: Graph, c: Cactus) -> Tuple[Graph, Mod3Cactus]:
    """Replace every triangle of ``c`` by a fresh isolated edge."""
    step = mod3_step(g, c)
    return step.apply(g).after, step


def _carry_matching(m: Matching, rw: Rewrite, extra: Iterable[int] = ()) -> Matching:
    edges = [rw.edge_map[e] for e in m.edges]
    if any(e is None for e in edges):
        raise PreconditionError("rewrite removed a matched edge")
    return Matching.from_edges(rw.after, [*edges, *extra])


def apply_mod3_pm(g: Graph, c: Cactus, m: Matching) -> Tuple[Graph, Mod3Cactus, Matching]:
    """Apply the matching-preserving variant of modification 3.

    Arguments:
        g (Graph): The graph.
        c (Cactus): A simple cactus of ``g``.
        m (Matching): A matching covering every cactus vertex.

    Returns:
        Tuple[Graph, Mod3Cactus, Matching]:
            The new graph, the step, and the matching carried over with every
            fresh edge added to it.
    """
    step = mod3_step(g, c, m)
    rw = step.apply(g)
    fresh = [rw.fresh_edge(k) for k in range(sum(r is None for r in step.retained))]
    return rw.after, step, _carry_matching(m, rw, fresh)


# Modification 4 and 5
# ---------------------------------------------------------------------------


def find_mod4(g: Graph) -> Optional[Mod4Bridge]:
    """Find the smallest bridge that is not an isolated edge.

    Raises:
        PreconditionError:
            A bridge endpoint has degree 2 or more than 3. Either the graph is
            not subcubic or modifications 1 to 3 were not exhausted first.
    """
    for e in sorted(find_bridges(g)):
        u, v = g.edges[e]
        du, dv = g.degree(u), g.degree(v)
        if du == 1 and dv == 1:
            continue
        if du not in (1, 3) or dv not in (1, 3):
            raise PreconditionError(
                f"bridge {u} {v} has endpoint degrees {du} and {dv}; "
                "modification 4 needs a subcubic graph normalized by 1-3"
            )
        sides = []
        for center, far in ((u, v), (v, u)):
            if g.degree(center) != 3:
                continue
            ends = tuple(x for x in g.neighbors(center) if x != far)
            removed = tuple(g.edge_id(center, x) for x in ends)
            sides.append(Mod4Side(center, ends, removed, g.edge_id(*ends)))  # type: ignore[arg-type]
        return Mod4Bridge(bridge=e, case=f"{du}-{dv}", sides=tuple(sides))
    return None


def apply_mod4(g: Graph) -> Optional[Tuple[Graph, Mod4Bridge]]:
    """Apply modification 4 once, or return None if it does not apply."""
    step = find_mod4(g)
    if step is None:
        return None
    return step.apply(g).after, step


def mod5_candidate(g: Graph, a: int, b: int) -> Optional[Mod5Contract]:
    """Check whether the adjacent pair ``a``, ``b`` can be contracted.

    Both vertices must have exactly one leaf neighbor, at least one of them
    must have a neighbor besides its leaf and its partner, and every common
    neighbor must have degree at least 3 so the merge leaves it a non-leaf.
    """
    if a == b or not g.has_edge(a, b):
        return None
    if g.degree(a) == 1 or g.degree(b) == 1:
        return None
    u1, u2 = min(a, b), max(a, b)
    leaves1 = [w for w in g.neighbors(u1) if g.degree(w) == 1]
    leaves2 = [w for w in g.neighbors(u2) if g.degree(w) == 1]
    if len(leaves1) != 1 or len(leaves2) != 1:
        return None
    v1, v2 = leaves1[0], leaves2[0]
    others1 = set(g.neighbors(u1)) - {u2, v1}
    others2 = set(g.neighbors(u2)) - {u1, v2}
    # A split triangle leaves such a pair: a path joining the two leaves.
    if not others1 and not others2:
        return None
    common = sorted(others1 & others2)
    if any(g.degree(x) < 3 for x in common):
        return None
    return Mod5Contract(
        u1=u1,
        u2=u2,
        v1=v1,
        v2=v2,
        contracted=g.edge_id(u1, u2),  # type: ignore[arg-type]
        moved=tuple(g.edge_id(u2, x) for x in sorted(others2 - others1)),  # type: ignore[misc]
        merged=tuple((g.edge_id(u2, x), g.edge_id(u1, x)) for x in common),  # type: ignore[misc]
    )


def find_mod5(g: Graph) -> Optional[Mod5Contract]:
    """Find the first contractible pair, scanning edges by identity."""
    for u, v in g.edges:
        step = mod5_candidate(g, u, v)
        if step is not None:
            return step
    return None


def apply_mod5(g: Graph) -> Optional[Tuple[Graph, Mod5Contract]]:
    """Apply modification 5 once, or return None if it does not apply."""
    step = find_mod5(g)
    if step is None:
        return None
    return step.apply(g).after, step


# Pipelines
# ---------------------------------------------------------------------------


def is_normalized(g: Graph) -> bool:
    """True if none of modifications 1, 2 and 3 applies."""
    return find_mod2(g) is None and find_mod1(g) is None and find_simple_cactus(g) is None


@dataclass(frozen=True)
class NormalizeStats:
    """What a normalization did.

    Parameters:
        strategy (Strategy): The pipeline that ran.
        counts (Dict[str, int]): Applications per modification tag.
        d2_plus (int):
            Perfect-matching strategy only: modification-2 events whose two
            new leaves both survive to the end.
        d2_minus (int):
            Perfect-matching strategy only: events that lost one new leaf to
            modification 1.
        cases (Tuple[str, ...]):
            Per modification-2 event, ``"+"`` or ``"-"`` as counted above.
        couplings (Tuple[Tuple[int, int], ...]):
            Pairs ``(creator, trigger)`` of event indices: a leaf created by
            event ``creator`` was removed while event ``trigger`` was the
            latest one.
        pendant_leaves (Tuple[int, ...]):
            Vertices of the final graph that are leaves created by
            modification 2. There are ``2 * d2_plus + d2_minus`` of them.
        pendant_edges (Tuple[int, ...]):
            Edges of the final graph at surviving leaves created by
            modification 2. They form a matching.
        mod5_pairs (Tuple[Tuple[int, int], ...]):
            Log positions ``(mod2, mod5)`` of each contraction and the split
            that enabled it.
        original_n (int): The vertex count of the input graph.
    """

    strategy: Strategy
    counts: Dict[str, int]
    d2_plus: int = 0
    d2_minus: int = 0
    cases: Tuple[str, ...] = ()
    couplings: Tuple[Tuple[int, int], ...] = ()
    pendant_leaves: Tuple[int, ...] = ()
    pendant_edges: Tuple[int, ...] = ()
    mod5_pairs: Tuple[Tuple[int, int], ...] = ()
    original_n: int = 0

    @property
    def steps(self) -> int:
        """The total number of steps."""
        return sum(self.counts.values())

    @property
    def d2_events(self) -> int:
        """The number of modification-2 events."""
        return self.counts.get("mod2", 0)

    @property
    def matching_lower_bound(self) -> int:
        """The size of the matching formed by :attr:`pendant_edges`."""
        return len(self.pendant_edges)


class Normalizer:
    """Run one normalization pipeline step by step.

    Call :meth:`step` until it returns None, or :meth:`run` to do that in
    one go. Between steps, :attr:`graph` is the current graph and
    :attr:`matching` the tracked matching (perfect-matching strategy only).

    Parameters:
        g (Graph):
            The input graph.
        strategy (Strategy):
            The pipeline to run.
        step_limit_factor (int):
            The step counter trips at ``factor * (n + m + 1)^2 + 100``.
        matching (Optional[Matching]):
            For the perfect-matching strategy, a perfect matching of ``g``.
            A maximum matching is computed if not given.

    Raises:
        PreconditionError:
            ``g`` does not suit the strategy.
    """

    def __init__(
        self,
        g: Graph,
        strategy: Strategy = Strategy.GENERAL,
        step_limit_factor: int = 16,
        matching: Optional[Matching] = None,
    ):
        if strategy is not Strategy.PERFECT_MATCHING:
            check_strategy(g, strategy)

        self.matching: Optional[Matching] = None
        if strategy is Strategy.PERFECT_MATCHING:
            matching = matching or maximum_matching(g)
            matching.validate(g)
            if not is_perfect(matching, g):
                raise PreconditionError("graph has no perfect matching")
            self.matching = matching

        self.strategy = strategy
        self.graph = g
        self.log = RewriteLog(g)
        self.limit = step_limit_factor * (g.n + g.m + 1) ** 2 + 100
        self.done = False

        # Leaves created by modification 2, mapped to the creating event.
        self._origin: Dict[int, int] = {}
        self._events = 0
        self._removed: List[int] = []
        self._couplings: List[Tuple[int, int]] = []
        self._mod5_pairs: List[Tuple[int, int]] = []

    def _record(self, step: RewriteStep, rw: Rewrite):
        logger.debug(f"apply {step.to_trace()}")
        self.log = self.log.append(step, rw)
        self.graph = rw.after
        if len(self.log) > self.limit:
            raise StepLimitError(f"normalization exceeded {self.limit} steps")
        self._origin = {
            rw.vertex_map[v]: k  # type: ignore[misc]
            for v, k in self._origin.items()
            if rw.vertex_map[v] is not None
        }

    def _apply(self, step: RewriteStep) -> LogEntry:
        g = self.graph
        rw = step.apply(g)

        if self.matching is not None:
            extra: List[int] = []
            if isinstance(step, Mod3Cactus):
                extra = [rw.fresh_edge(k) for k in range(sum(r is None for r in step.retained))]
            self.matching = _carry_matching(self.matching, rw, extra)

        if isinstance(step, Mod1Leaf) and step.removed in self._origin:
            creator = self._origin[step.removed]
            self._removed[creator] += 1
            if creator != self._events - 1:
                self._couplings.append((creator, self._events - 1))

        self._record(step, rw)

        if isinstance(step, Mod2Split):
            k = self._events
            self._events += 1
            self._removed.append(0)
            self._origin[rw.vertex_map[step.vertex]] = k  # type: ignore[index]
            self._origin[rw.fresh_vertex(0)] = k

        return self.log.entries[-1]

    def _general_step(self) -> Optional[RewriteStep]:
        g = self.graph
        step: Optional[RewriteStep] = find_mod2(g)
        if step is None:
            matched = None
            if self.matching is not None:
                matched = frozenset(v for v, w in enumerate(self.matching.mate) if w is not None)
            step = find_mod1(g, matched)
        if step is None:
            cactus = find_simple_cactus(g)
            if cactus is not None:
                step = mod3_step(g, cactus, self.matching)
        return step

    def step(self) -> Optional[LogEntry]:
        """Apply the next modification.

        Returns:
            Optional[LogEntry]: The applied step, or None once normalized.
        """
        if self.done:
            return None

        step = self._general_step()
        if step is None and self.strategy is Strategy.SUBCUBIC:
            step = find_mod4(self.graph)
        if step is None:
            self.done = True
            return None

        entry = self._apply(step)

        if self.strategy is Strategy.CLAWFREE and isinstance(step, Mod2Split):
            vm = entry.rewrite.vertex_map
            contract = mod5_candidate(self.graph, vm[step.u1], vm[step.u2])  # type: ignore[arg-type]
            if contract is not None:
                mod2_at = len(self.log) - 1
                self._apply(contract)
                self._mod5_pairs.append((mod2_at, len(self.log) - 1))

        return entry

    def stats(self) -> NormalizeStats:
        """Summarize the steps applied so far."""
        cases: Tuple[str, ...] = ()
        plus = minus = 0
        pendant_leaves: Tuple[int, ...] = ()
        pendant_edges: Tuple[int, ...] = ()
        if self.strategy is Strategy.PERFECT_MATCHING:
            for k, removed in enumerate(self._removed):
                if removed >= 2:
                    raise CertificationError(f"modification-2 event {k} lost both leaves")
            cases = tuple("+" if r == 0 else "-" for r in self._removed)
            plus = cases.count("+")
            minus = cases.count("-")
            pendant_leaves = tuple(sorted(v for v in self._origin if self.graph.degree(v) == 1))
            pendant_edges = tuple(sorted({self.graph.incident(v)[0] for v in pendant_leaves}))
        return NormalizeStats(
            strategy=self.strategy,
            counts=self.log.counts(),
            d2_plus=plus,
            d2_minus=minus,
            cases=cases,
            couplings=tuple(self._couplings),
            pendant_leaves=pendant_leaves,
            pendant_edges=pendant_edges,
            mod5_pairs=tuple(self._mod5_pairs),
            original_n=self.log.original.n,
        )

    def run(self) -> Tuple[Graph, RewriteLog, NormalizeStats]:
        """Step until normalized."""
        while self.step() is not None:
            pass
        stats = self.stats()
        logger.debug(f"normalized after {stats.steps} steps: {stats.counts}")
        return self.graph, self.log, stats


def normalize(
    g: Graph,
    strategy: Strategy = Strategy.GENERAL,
    step_limit_factor: int = 16,
) -> Tuple[Graph, RewriteLog, NormalizeStats]:
    """Normalize ``g`` with the given pipeline.

    Arguments:
        g (Graph): The input graph.
        strategy (Strategy): The pipeline.
        step_limit_factor (int): See :class:`Normalizer`.

    Returns:
        Tuple[Graph, RewriteLog, NormalizeStats]:
            The normalized graph, the log leading to it, and statistics.

    Raises:
        PreconditionError: ``g`` does not suit the strategy.
        StepLimitError: The step counter tripped.
    """
    return Normalizer(g, strategy, step_limit_factor).run()
