from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from helpers import graphs, seeded_graphs
from me2c.errors import BudgetExceededError, PreconditionError
from me2c.graph import Graph
from me2c.matching import (
    Matching,
    greedy_matching,
    is_perfect,
    maximum_matching,
)
from me2c.oracle import exact_matching_bruteforce


def test_petersen_has_a_perfect_matching(petersen):
    m = maximum_matching(petersen)
    assert m.size == 5
    assert is_perfect(m, petersen)
    m.validate(petersen)


def test_odd_cycle(c5):
    m = maximum_matching(c5)
    assert m.size == 2
    assert not is_perfect(m, c5)
    assert m.size == exact_matching_bruteforce(c5)


def test_blossom_is_needed():
    # Greedy matches 0-1, 2-3 and 4-5. The search from 6 meets the odd cycle
    # 1-2-3-4-5 and only reaches 7 after shrinking it.
    edges = ((0, 1), (2, 3), (4, 5), (0, 6), (1, 2), (3, 4), (1, 5), (2, 7))
    g = Graph(8, edges)
    assert greedy_matching(g).count(-1) == 2
    m = maximum_matching(g)
    assert m.size == 4
    assert is_perfect(m, g)


def test_deterministic(petersen):
    assert maximum_matching(petersen) == maximum_matching(petersen)


def test_from_edges_rejects_overlap(p3):
    with pytest.raises(PreconditionError):
        Matching.from_edges(p3, [0, 1])


def test_validate_catches_a_bad_mate_table(p3):
    m = Matching(frozenset({0}), (1, 0, 2))
    with pytest.raises(PreconditionError):
        m.validate(p3)


def test_a_maximal_matching_is_not_maximum():
    # The middle edge alone blocks both others; the path 0-1-2-3 augments it.
    g = Graph(4, ((0, 1), (1, 2), (2, 3)))
    assert Matching.from_edges(g, [1]).size == 1
    assert maximum_matching(g).size == exact_matching_bruteforce(g) == 2


@given(graphs(max_n=10, max_m=20))
def test_size_matches_networkx(g):
    m = maximum_matching(g)
    m.validate(g)
    expected = len(nx.max_weight_matching(g.to_networkx(), maxcardinality=True))
    assert m.size == expected


def test_size_matches_bruteforce_on_a_seeded_corpus():
    for g in seeded_graphs(300, max_n=10, max_m=18, seed=7):
        assert maximum_matching(g).size == exact_matching_bruteforce(g)


def test_bruteforce_budget():
    with pytest.raises(BudgetExceededError):
        exact_matching_bruteforce(Graph(13, ()))
