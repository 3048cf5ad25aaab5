from __future__ import annotations

import pytest

from me2c.errors import PreconditionError
from me2c.generators import (
    gen_cactus_chain,
    gen_clawfree_random,
    gen_pm_random,
    gen_subcubic_random,
    generate,
)
from me2c.graph import is_claw_free, is_subcubic
from me2c.matching import is_perfect, maximum_matching
from me2c.normalize import find_simple_cactus


def test_cycle_text():
    assert generate("cycle", 5).to_text() == "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n"


def test_petersen():
    g = generate("petersen")
    assert (g.n, g.m) == (10, 15)
    assert g.degrees() == [3] * 10


def test_complete_star_and_path():
    assert generate("complete", 5).m == 10
    assert generate("star", 4).leaves() == [1, 2, 3, 4]
    assert generate("path", 1).m == 0


@pytest.mark.parametrize("seed", range(40))
def test_subcubic(seed):
    assert is_subcubic(gen_subcubic_random(12, seed=seed))


@pytest.mark.parametrize("seed", range(100))
def test_clawfree(seed):
    assert is_claw_free(gen_clawfree_random(6, p=0.5, seed=seed))


def test_clawfree_of_a_triangle():
    g = gen_clawfree_random(3, p=1.0)
    assert (g.n, g.m) == (3, 3)


@pytest.mark.parametrize("seed", range(20))
def test_pm_contains_the_planted_matching(seed):
    g = gen_pm_random(8, p=0.3, seed=seed)
    for i in range(4):
        assert g.has_edge(2 * i, 2 * i + 1)
    assert is_perfect(maximum_matching(g), g)


@pytest.mark.parametrize("k", range(1, 6))
def test_cactus_chain(k):
    g = gen_cactus_chain(k)
    assert (g.n, g.m) == (3 * k + 3, 4 * k + 2)
    cactus = find_simple_cactus(g)
    assert cactus is not None
    assert len(cactus.triangles) == k
    cactus.validate(g)


def test_seeds_are_deterministic():
    assert generate("subcubic", 10, seed=4) == generate("subcubic", 10, seed=4)
    assert generate("pm", 6, 0.5, seed=1) == gen_pm_random(6, 0.5, seed=1)
    assert generate("cycle", 4, seed=9) == generate("cycle", 4)


@pytest.mark.parametrize(
    "family, params",
    [
        ("nope", ()),
        ("cycle", (2,)),
        ("cycle", ()),
        ("star", (0,)),
        ("pm", (5,)),
        ("clawfree", (4, 1.5)),
        ("cactus-chain", (0,)),
    ],
)
def test_generate_errors(family, params):
    with pytest.raises(PreconditionError):
        generate(family, *params)


def test_pm_without_extra_edges():
    assert gen_pm_random(6, 0.0, seed=5).edges == ((0, 1), (2, 3), (4, 5))
