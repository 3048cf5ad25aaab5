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

from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from me2c.generators import gen_cactus_chain, gen_cycle, gen_petersen, gen_star
from me2c.graph import Graph


settings.register_profile(
    "me2c",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("me2c")


@pytest.fixture
def k3() -> Graph:
    return Graph.from_text("3 3\n0 1\n1 2\n2 0\n")


@pytest.fixture
def k4() -> Graph:
    return Graph.from_text("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")


@pytest.fixture
def c5() -> Graph:
    return gen_cycle(5)


@pytest.fixture
def p3() -> Graph:
    return Graph(3, ((0, 1), (1, 2)))


@pytest.fixture
def claw() -> Graph:
    return gen_star(3)


@pytest.fixture
def petersen() -> Graph:
    return gen_petersen()


@pytest.fixture
def two_edges() -> Graph:
    return Graph(4, ((0, 1), (2, 3)))


@pytest.fixture
def chain3() -> Graph:
    return gen_cactus_chain(3)


@pytest.fixture
def dumbbell() -> Graph:
    """Two cubic halves joined by a bridge between vertices 6 and 13.

    Each half is ``K_{3,3}`` minus the edge ``0 3`` plus a vertex adjacent to
    ``0`` and ``3``. The graph is cubic, triangle-free and normalized by
    modifications 1 to 3.
    """
    half = [(0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (0, 6), (3, 6)]
    edges = half + [(u + 7, v + 7) for u, v in half] + [(6, 13)]
    return Graph(14, tuple(edges))


@pytest.fixture
def pendant_k33() -> Graph:
    """``K_{3,3}`` minus ``0 3`` with pendants ``0 6`` and ``3 7``."""
    edges = [(0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (0, 6), (3, 7)]
    return Graph(8, tuple(edges))


@pytest.fixture
def write_graph(tmp_path: Path):
    """Write a graph to ``tmp_path`` and return the path."""

    def write(g: Graph, name: str = "graph.g") -> Path:
        path = tmp_path / name
        path.write_text(g.to_text())
        return path

    return write
