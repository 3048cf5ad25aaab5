from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import graphs, seeded_class
from me2c.errors import CertificationError, PreconditionError, StepLimitError
from me2c.generators import gen_cactus_chain, gen_clawfree_random, gen_petersen, generate
from me2c.graph import Graph, component_subgraphs, is_claw_free, is_subcubic
from me2c.matching import Matching, is_perfect, maximum_matching
from me2c.normalize import (
    Cactus,
    Normalizer,
    Strategy,
    apply_mod1,
    apply_mod2,
    apply_mod3,
    apply_mod3_pm,
    apply_mod4,
    apply_mod5,
    find_mod1,
    find_mod2,
    find_mod4,
    find_mod5,
    find_simple_cactus,
    is_normalized,
    mod5_candidate,
    normalize,
)
from me2c.rewrite import Mod1Leaf, Mod2Split, Mod5Contract, RewriteLog


# Modifications 1 and 2
# ---------------------------------------------------------------------------


def test_mod1_on_a_claw(claw):
    g, step = apply_mod1(claw)
    assert step == Mod1Leaf(hub=0, removed=2, retained=1)
    assert g == Graph(3, ((0, 1), (0, 2)))


def test_mod1_needs_a_hub_of_degree_three(p3, k3):
    assert apply_mod1(p3) is None
    assert apply_mod1(k3) is None


def test_mod1_keeps_matched_leaves(claw):
    step = find_mod1(claw, matched=frozenset({2}))
    assert step.retained == 2
    assert step.removed == 1


def test_mod2_on_a_path(p3):
    g, step = apply_mod2(p3)
    assert step == Mod2Split(vertex=1, u1=0, u2=2)
    assert g == Graph(4, ((0, 1), (2, 3)))


def test_mod2_on_a_triangle(k3):
    g, _ = apply_mod2(k3)
    assert g.n == 4
    assert g.m == 3
    assert g.degrees() == [1, 2, 2, 1]


def test_mod2_on_k4(k4):
    assert apply_mod2(k4) is None


# Modification 3
# ---------------------------------------------------------------------------


def test_cactus_of_k4(k4):
    cactus = find_simple_cactus(k4)
    assert cactus == Cactus(triangles=((0, 1, 2),), needles=(2, 4, 5))
    assert cactus.vertices == [0, 1, 2]


def test_cactus_of_chain(chain3):
    cactus = find_simple_cactus(chain3)
    assert len(cactus.triangles) == 3
    assert cactus.shared() == [1, 2]
    assert len(cactus.needles) == 5


def test_no_cactus_without_triangles(petersen):
    assert find_simple_cactus(petersen) is None


def test_no_cactus_in_k5():
    k5 = Graph(5, tuple((u, v) for u in range(5) for v in range(u + 1, 5)))
    assert find_simple_cactus(k5) is None


def test_triangle_pair_sharing_an_edge_is_not_a_cactus():
    # Two triangles on the edge 0 1. Their tips have degree 2.
    g = Graph(4, ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3)))
    assert find_simple_cactus(g) is None


def test_cactus_validate_rejects_wrong_needles(k4):
    with pytest.raises(PreconditionError):
        Cactus(((0, 1, 2),), (2, 4)).validate(k4)


def test_mod3_on_k4(k4):
    g, step = apply_mod3(k4, find_simple_cactus(k4))
    assert step.retained == (None,)
    assert step.discarded == ()
    assert g == Graph(6, ((0, 3), (1, 3), (2, 3), (4, 5)))


def test_mod3_on_a_single_triangle_chain():
    g = gen_cactus_chain(1)
    after, step = apply_mod3(g, find_simple_cactus(g))
    assert after.m == 4
    assert after.degrees() == [1] * 8


def test_mod3_discards_the_shared_vertex():
    g = gen_cactus_chain(2)
    after, step = apply_mod3(g, find_simple_cactus(g))
    assert step.discarded == (1,)
    assert after.n == g.n - 1 + 4
    assert after.m == 6
    assert after.max_degree() == 1


def _needle_triangle():
    # Triangle 0 1 2 with needles 0-3, 1-4, 2-5.
    return [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]


def test_mod3_pm_keeps_the_matched_triangle_edge():
    g = Graph(6, tuple(_needle_triangle() + [(3, 4)]))
    m = Matching.from_edges(g, [0, 5, 6])
    after, step, carried = apply_mod3_pm(g, find_simple_cactus(g), m)
    assert step.retained == ((0, 1),)
    assert after.has_edge(0, 1)
    assert not after.has_edge(0, 2)
    assert is_perfect(carried, after)


def test_mod3_pm_adds_the_fresh_edge_to_the_matching():
    g = Graph(6, tuple(_needle_triangle()))
    m = Matching.from_edges(g, [3, 4, 5])
    after, step, carried = apply_mod3_pm(g, find_simple_cactus(g), m)
    assert step.retained == (None,)
    assert after.n == 8
    assert carried.size == 4
    assert is_perfect(carried, after)


def test_mod3_pm_needs_matched_cactus_vertices():
    g = Graph(6, tuple(_needle_triangle()))
    m = Matching.from_edges(g, [3, 4])
    with pytest.raises(PreconditionError):
        apply_mod3_pm(g, find_simple_cactus(g), m)


# Modifications 4 and 5
# ---------------------------------------------------------------------------


def test_mod4_on_a_pendant_bridge(pendant_k33):
    after, step = apply_mod4(pendant_k33)
    assert step.bridge == 8
    assert step.case == "3-1"
    (side,) = step.sides
    assert side.center == 0
    assert side.ends == (4, 5)
    assert not side.deduplicated
    assert after.has_edge(4, 5)
    assert after.neighbors(0) == [6]
    assert after.m == pendant_k33.m - 1


def test_mod4_on_the_dumbbell(dumbbell):
    after, step = apply_mod4(dumbbell)
    assert step.case == "3-3"
    assert len(step.sides) == 2
    assert after.degree(6) == 1
    assert after.degree(13) == 1
    assert after.has_edge(0, 3)
    assert after.has_edge(7, 10)
    assert after.m == dumbbell.m - 2


def test_mod4_deduplicates_an_existing_join():
    # Bridge 3-4; the ends 1 and 2 of vertex 3 are already adjacent.
    g = Graph(6, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (0, 5)))
    step = find_mod4(g)
    side = step.sides[0]
    assert side.center == 3
    assert side.deduplicated
    after = step.apply(g).after
    assert after.m == g.m - 2
    assert after.degree(3) == 1


def test_mod4_ignores_isolated_edges(two_edges, c5):
    assert apply_mod4(two_edges) is None
    assert apply_mod4(c5) is None


def test_mod4_rejects_a_degree_two_bridge_end(p3):
    with pytest.raises(PreconditionError):
        find_mod4(p3)


def _pendant_pair(extra):
    # u1=0, u2=1, leaves v1=2 and v2=3.
    return Graph(6, ((0, 1), (0, 2), (1, 3)) + tuple(extra))


def test_mod5_merges_private_neighbors():
    g = _pendant_pair([(0, 4), (1, 5), (4, 5)])
    after, step = apply_mod5(g)
    assert isinstance(step, Mod5Contract)
    assert (step.u1, step.u2, step.v1, step.v2) == (0, 1, 2, 3)
    assert step.merged == ()
    assert after.neighbors(0) == [2, 4, 5]
    assert after.neighbors(1) == [3]
    assert after.degree(3) == 1
    assert after.m == g.m - 1


def test_mod5_merges_common_neighbors_once():
    g = _pendant_pair([(0, 4), (1, 4), (4, 5)])
    after, step = apply_mod5(g)
    assert len(step.merged) == 1
    assert after.neighbors(0) == [2, 4]
    assert after.neighbors(4) == [0, 5]


def test_mod5_needs_common_neighbors_of_degree_three():
    g = _pendant_pair([(0, 4), (1, 4)])
    assert mod5_candidate(g, 0, 1) is None


def test_mod5_needs_adjacent_pendant_pairs(petersen, claw):
    assert find_mod5(petersen) is None
    assert find_mod5(claw) is None


# Pipelines
# ---------------------------------------------------------------------------


def test_is_normalized(petersen, k4, two_edges, c5):
    assert is_normalized(petersen)
    assert not is_normalized(k4)
    assert is_normalized(two_edges)
    assert not is_normalized(c5)


def test_normalize_triangle(k3):
    g, log, stats = normalize(k3)
    assert g.m == 3
    assert g.degrees() == [1] * 6
    assert stats.counts == {"mod1": 0, "mod2": 3, "mod3": 0, "mod4": 0, "mod5": 0}
    assert stats.steps == 3


def test_normalize_k4_trace(k4):
    g, log, stats = normalize(k4)
    assert log.to_trace() == (
        "mod3 triangles=0:1:2 retained=- needles=2,4,5 discarded=-\n"
        "mod1 hub=3 removed=1 retained=0\n"
        "mod2 vertex=2 u1=0 u2=1\n"
    )
    assert g.to_text() == "6 3\n0 2\n1 5\n3 4\n"
    assert stats.d2_plus == stats.d2_minus == 0


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_normalize_cactus_chain(k):
    g, _, stats = normalize(gen_cactus_chain(k))
    assert g.max_degree() == 1
    assert g.m == k + (k + 2)
    assert stats.counts["mod3"] == 1


def test_normalize_leaves_petersen_alone(petersen):
    g, log, _ = normalize(petersen, Strategy.SUBCUBIC)
    assert g == petersen
    assert len(log) == 0
    assert log.result == petersen


def test_subcubic_pipeline_cuts_the_bridge(dumbbell):
    g, log, stats = normalize(dumbbell, Strategy.SUBCUBIC)
    assert stats.counts["mod4"] == 1
    assert is_normalized(g)
    assert find_mod4(g) is None
    assert (g.n, g.m) == (14, 19)


def test_clawfree_pipeline_contracts_after_a_split():
    g = Graph(5, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4)))
    normalized, log, stats = normalize(g, Strategy.CLAWFREE)
    assert log.steps[0] == Mod2Split(vertex=0, u1=1, u2=2)
    assert log.steps[1].tag == "mod5"
    assert stats.mod5_pairs[0] == (0, 1)
    assert is_normalized(normalized)


def test_strategy_preconditions(claw, k4):
    with pytest.raises(PreconditionError):
        normalize(Graph(5, tuple((0, i) for i in range(1, 5))), Strategy.SUBCUBIC)
    with pytest.raises(PreconditionError):
        normalize(claw, Strategy.CLAWFREE)
    with pytest.raises(PreconditionError):
        normalize(claw, Strategy.PERFECT_MATCHING)
    normalize(k4, Strategy.PERFECT_MATCHING)


def test_strategy_parse():
    assert Strategy.parse("pm") is Strategy.PERFECT_MATCHING
    with pytest.raises(PreconditionError):
        Strategy.parse("planar")


def test_step_limit(k4):
    normalizer = Normalizer(k4)
    normalizer.limit = 1
    with pytest.raises(StepLimitError):
        normalizer.run()


@given(graphs(max_n=8, max_m=14))
def test_general_normalization_properties(g):
    normalized, log, stats = normalize(g)
    assert is_normalized(normalized)
    assert log.replay() == normalized
    assert stats.original_n == g.n
    assert sum(stats.counts.values()) == len(log)
    assert stats.counts["mod4"] == stats.counts["mod5"] == 0


@given(graphs(max_n=8, max_m=12))
def test_subcubic_normalization_properties(g):
    if not is_subcubic(g):
        return
    normalized, log, _ = normalize(g, Strategy.SUBCUBIC)
    assert is_normalized(normalized)
    assert find_mod4(normalized) is None
    assert log.replay() == normalized


def test_replay_detects_a_diverging_log(k4, petersen):
    _, log, _ = normalize(k4)
    broken = RewriteLog(petersen, log.entries)
    with pytest.raises((PreconditionError, CertificationError)):
        broken.replay()


def test_pm_matching_survives_every_step():
    for g in seeded_class("pm", 60):
        normalizer = Normalizer(g, Strategy.PERFECT_MATCHING)
        size = normalizer.matching.size
        while normalizer.step() is not None:
            normalizer.matching.validate(normalizer.graph)
            assert normalizer.matching.size >= size
            size = normalizer.matching.size

        stats = normalizer.stats()
        assert stats.d2_plus + stats.d2_minus == stats.d2_events
        assert len(stats.cases) == stats.d2_events
        Matching.from_edges(normalizer.graph, stats.pendant_edges)
        for e in stats.pendant_edges:
            u, v = normalizer.graph.edges[e]
            assert 1 in (normalizer.graph.degree(u), normalizer.graph.degree(v))


def test_pm_stats_only_for_pm():
    _, _, stats = normalize(gen_petersen())
    assert stats.cases == ()
    assert stats.pendant_edges == ()


def _pendant_and_isolated(g):
    pendant = isolated = 0
    for u, v in g.edges:
        leaves = (g.degree(u) == 1) + (g.degree(v) == 1)
        if leaves == 2:
            isolated += 1
        elif leaves == 1:
            pendant += 1
    return pendant, isolated


# Contracts after the split of vertex 0, see the pipeline test above.
CONTRACTIBLE = Graph(5, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4)))


@given(st.integers(1, 6), st.floats(0.2, 0.9), st.integers(0, 2**16))
def test_mod5_adds_one_pendant_and_one_isolated_edge(n, p, seed):
    g = CONTRACTIBLE.disjoint_union(gen_clawfree_random(n, p=p, seed=seed))
    normalized, log, stats = normalize(g, Strategy.CLAWFREE)
    assert stats.mod5_pairs
    assert stats.counts["mod5"] == len(stats.mod5_pairs)
    for mod2_at, mod5_at in stats.mod5_pairs:
        assert mod5_at == mod2_at + 1
        assert log.steps[mod2_at].tag == "mod2"
        before = log.entries[mod2_at].rewrite.before
        after = log.entries[mod5_at].rewrite.after
        pendant, isolated = _pendant_and_isolated(before)
        assert _pendant_and_isolated(after) == (pendant + 1, isolated + 1)
    assert is_normalized(normalized)
    assert log.replay() == normalized


def test_clawfree_split_triangle_is_not_contracted(k3):
    normalizer = Normalizer(k3, Strategy.CLAWFREE)
    entry = normalizer.step()
    assert entry.step == Mod2Split(vertex=0, u1=1, u2=2)
    assert normalizer.graph.degrees() == [1, 2, 2, 1]
    assert mod5_candidate(normalizer.graph, 1, 2) is None
    normalized, log, stats = normalizer.run()
    assert stats.counts["mod5"] == 0
    assert normalized.max_degree() == 1
    assert log.replay() == normalized


def _clawfree_corpus():
    yield generate("complete", 5)
    for n in range(4, 8):
        for p in (0.4, 0.6, 0.8):
            for seed in range(15):
                yield gen_clawfree_random(n, p=p, seed=seed)


def test_clawfree_odd_components_are_nearly_perfect():
    checked = 0
    for g in _clawfree_corpus():
        normalized, _, _ = normalize(g, Strategy.CLAWFREE)
        for sub, _, _ in component_subgraphs(normalized):
            if sub.n < 3 or sub.n % 2 == 0 or not is_claw_free(sub):
                continue
            assert maximum_matching(sub).size == (sub.n - 1) // 2
            checked += 1
    assert checked > 0


def test_surviving_split_leaves_count_the_d2_events():
    for g in seeded_class("pm", 200):
        normalized, _, stats = normalize(g, Strategy.PERFECT_MATCHING)
        leaves = set(stats.pendant_leaves)
        assert len(leaves) == 2 * stats.d2_plus + stats.d2_minus

        # An isolated edge between two split leaves is one matching edge.
        doubled = sum(1 for e in stats.pendant_edges if set(normalized.edges[e]) <= leaves)
        assert len(stats.pendant_edges) == len(leaves) - doubled
        assert stats.matching_lower_bound == len(stats.pendant_edges)
        Matching.from_edges(normalized, stats.pendant_edges)


def test_split_leaves_only_for_pm(k4):
    _, _, stats = normalize(k4)
    assert stats.pendant_leaves == ()
