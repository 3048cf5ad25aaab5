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

"""Graph strategies and seeded corpora shared by the test modules."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

import numpy as np
from hypothesis import strategies as st
from hypothesis.strategies import DrawFn, composite

from me2c.graph import Graph
from me2c.generators import gen_clawfree_random, gen_pm_random, gen_subcubic_random


@composite
def graphs(draw: DrawFn, min_n: int = 1, max_n: int = 7, max_m: int = 10) -> Graph:
    """Small simple graphs. Edge identities follow the draw order."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return Graph(n, ())
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m))
    return Graph(n, tuple(edges))


@composite
def subcubic_graphs(draw: DrawFn, max_n: int = 8) -> Graph:
    n = draw(st.integers(2, max_n))
    seed = draw(st.integers(0, 2**16))
    return gen_subcubic_random(n, seed=seed)


def seeded_graphs(count: int, max_n: int = 7, max_m: int = 12, seed: int = 0) -> Iterator[Graph]:
    """``count`` random graphs with at least one edge, from a fixed seed."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(3, max_n + 1))
        pairs = list(combinations(range(n), 2))
        m = int(rng.integers(1, min(max_m, len(pairs)) + 1))
        picked = rng.choice(len(pairs), size=m, replace=False)
        yield Graph(n, tuple(pairs[int(i)] for i in picked))


def seeded_class(family: str, count: int, max_m: int = 13) -> Iterator[Graph]:
    """``count`` graphs of a random family with at most ``max_m`` edges."""
    seed = 0
    made = 0
    while made < count:
        if family == "subcubic":
            g = gen_subcubic_random(3 + seed % 6, seed=seed)
        elif family == "clawfree":
            g = gen_clawfree_random(3 + seed % 3, p=0.5, seed=seed)
        elif family == "pm":
            g = gen_pm_random(4 + 2 * (seed % 3), p=0.3, seed=seed)
        else:
            raise ValueError(family)
        seed += 1
        if 0 < g.m <= max_m:
            made += 1
            yield g
