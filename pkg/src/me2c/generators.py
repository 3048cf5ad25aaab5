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

"""Graph families for tests and benchmarks.

Random families take an integer seed and draw from NumPy's ``PCG64`` bit
generator, so a seed always produces the same graph.
"""

from __future__ import annotations

import logging
from typing import Callable, Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from me2c.errors import PreconditionError
from me2c.graph import Graph


logger = logging.getLogger(__name__)


def _require(ok: bool, message: str):
    if not ok:
        raise PreconditionError(message)


def gen_cycle(n: int) -> Graph:
    """The cycle ``C_n``, edges ``i, i+1`` in order."""
    _require(n >= 3, f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def gen_complete(n: int) -> Graph:
    """The complete graph ``K_n``, edges in lexicographic order."""
    _require(n >= 1, f"a complete graph needs at least 1 vertex, got {n}")
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def gen_path(n: int) -> Graph:
    """The path on ``n`` vertices."""
    _require(n >= 1, f"a path needs at least 1 vertex, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def gen_star(k: int) -> Graph:
    """The star ``K_{1,k}`` with center 0."""
    _require(k >= 1, f"a star needs at least 1 leaf, got {k}")
    return Graph(k + 1, tuple((0, i) for i in range(1, k + 1)))


def gen_petersen() -> Graph:
    """The Petersen graph: outer 5-cycle, five spokes, inner pentagram."""
    edges: List[Tuple[int, int]] = []
    edges += [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(edges))


def gen_subcubic_random(n: int, seed: int = 0) -> Graph:
    """A random graph of maximum degree 3.

    ``3n`` vertex pairs are drawn. A pair is kept unless it is a loop, an
    existing edge, or would push an endpoint past degree 3.
    """
    _require(n >= 1, f"need at least 1 vertex, got {n}")
    rng = np.random.default_rng(seed)
    degree = [0] * n
    edges: List[Tuple[int, int]] = []
    seen = set()
    for _ in range(3 * n):
        u, v = (int(x) for x in rng.integers(0, n, size=2))
        key = (min(u, v), max(u, v))
        if u == v or key in seen or degree[u] == 3 or degree[v] == 3:
            continue
        seen.add(key)
        edges.append(key)
        degree[u] += 1
        degree[v] += 1
    return Graph(n, tuple(edges))


def gen_clawfree_random(n: int, p: float = 0.5, seed: int = 0) -> Graph:
    """The line graph of a random ``G(n, p)``, which is claw-free.

    The vertices of the line graph are the base edges in sorted order.
    """
    _require(n >= 1, f"need at least 1 base vertex, got {n}")
    _require(0.0 <= p <= 1.0, f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    base = nx.Graph()
    base.add_nodes_from(range(n))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                base.add_edge(u, v)

    line = nx.line_graph(base)
    order = sorted(tuple(sorted(x)) for x in line.nodes)
    index = {x: i for i, x in enumerate(order)}
    edges = sorted(
        tuple(sorted((index[tuple(sorted(a))], index[tuple(sorted(b))]))) for a, b in line.edges
    )
    return Graph(len(order), tuple(edges))  # type: ignore[arg-type]


def gen_pm_random(n: int, p: float = 0.5, seed: int = 0) -> Graph:
    """A random graph with a planted perfect matching.

    The pairs ``2i, 2i+1`` come first. Every other pair, in lexicographic
    order, is added with probability ``p``.
    """
    _require(n >= 2 and n % 2 == 0, f"a perfect matching needs an even n >= 2, got {n}")
    _require(0.0 <= p <= 1.0, f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    edges = [(2 * i, 2 * i + 1) for i in range(n // 2)]
    for u in range(n):
        for v in range(u + 1, n):
            if u % 2 == 0 and v == u + 1:
                continue
            if rng.random() < p:
                edges.append((u, v))
    return Graph(n, tuple(edges))


def gen_cactus_chain(k: int) -> Graph:
    """A chain of ``k`` triangles sharing one vertex each, plus needles.

    The spine is ``a_0 .. a_k`` (vertices ``0..k``) and the tips are
    ``b_1 .. b_k`` (vertices ``k+1..2k``). Triangle ``i`` is ``a_{i-1}, b_i,
    a_i``. Every tip and both spine ends carry a needle to a fresh leaf, so
    ``n = 3k + 3`` and ``m = 4k + 2``.
    """
    _require(k >= 1, f"a cactus chain needs at least 1 triangle, got {k}")
    edges: List[Tuple[int, int]] = []
    for i in range(k):
        a, b, c = i, k + 1 + i, i + 1
        edges += [(a, b), (b, c), (a, c)]
    holders = [0] + [k + 1 + i for i in range(k)] + [k]
    leaf = 2 * k + 1
    for h in holders:
        edges.append((h, leaf))
        leaf += 1
    return Graph(leaf, tuple(edges))


#: The generator families by name, for the ``gen`` command.
FAMILIES: Dict[str, Callable[..., Graph]] = {
    "cycle": gen_cycle,
    "complete": gen_complete,
    "path": gen_path,
    "star": gen_star,
    "petersen": gen_petersen,
    "subcubic": gen_subcubic_random,
    "clawfree": gen_clawfree_random,
    "pm": gen_pm_random,
    "cactus-chain": gen_cactus_chain,
}


#: The families that take a ``seed`` keyword.
RANDOM_FAMILIES = frozenset({"subcubic", "clawfree", "pm"})


def generate(family: str, *params, seed: Optional[int] = None) -> Graph:
    """Build a graph of the named family.

    ``seed`` is passed on to the random families and ignored by the others.

    Raises:
        PreconditionError: Unknown family or bad parameters.
    """
    try:
        fn = FAMILIES[family]
    except KeyError:
        names = ", ".join(sorted(FAMILIES))
        raise PreconditionError(f"unknown family {family!r} (expected one of: {names})")
    try:
        if family in RANDOM_FAMILIES and seed is not None:
            g = fn(*params, seed=seed)
        else:
            g = fn(*params)
    except TypeError as e:
        raise PreconditionError(f"bad parameters for {family}: {e}")
    logger.debug(f"generated {family}{tuple(params)}: n={g.n} m={g.m}")
    return g
