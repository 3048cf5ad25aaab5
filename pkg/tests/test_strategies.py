from __future__ import annotations

from fractions import Fraction

import pytest

from me2c.errors import PreconditionError
from me2c.generators import gen_complete, gen_star
from me2c.graph import Graph
from me2c.normalize import Strategy
from me2c.strategies import StrategyMetadata, all_strategies, get_strategy


def test_registry_is_ordered_by_priority():
    names = list(all_strategies())
    assert names == ["subcubic", "clawfree", "pm", "general", "auto"]


def test_ratio_limits():
    assert get_strategy("subcubic").ratio_limit == Fraction(3, 2)
    assert get_strategy("clawfree").ratio_limit == Fraction(3, 2)
    assert get_strategy("pm").ratio_limit == Fraction(13, 8)
    assert get_strategy("general").ratio_limit == 2


def test_unknown_strategy():
    with pytest.raises(PreconditionError) as info:
        get_strategy("greedy")
    assert "greedy" in str(info.value)


def test_pipelines():
    assert get_strategy("pm").normalization() is Strategy.PERFECT_MATCHING
    with pytest.raises(PreconditionError):
        get_strategy("auto").normalization()


def _star_with_matching() -> Graph:
    # Center 0 has degree 5; 0-1, 2-3 and 4-5 is a perfect matching.
    return Graph(6, ((0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (2, 3), (4, 5)))


@pytest.mark.parametrize(
    "g, expected",
    [
        (gen_complete(4), "subcubic"),
        (gen_complete(5), "clawfree"),
        (_star_with_matching(), "pm"),
        (gen_star(4), "general"),
    ],
)
def test_auto_selection(g, expected):
    assert get_strategy("auto").resolve(g).name == expected


def test_resolve_checks_the_precondition():
    star = gen_star(4)
    with pytest.raises(PreconditionError):
        get_strategy("subcubic").resolve(star)
    with pytest.raises(PreconditionError):
        get_strategy("clawfree").resolve(star)
    with pytest.raises(PreconditionError):
        get_strategy("pm").resolve(star)
    assert get_strategy("general").resolve(star).name == "general"


def test_compatibility():
    meta = StrategyMetadata(name="custom", precondition="me2c.strategies.builtin:require_subcubic")
    assert meta.is_compatible(gen_complete(4))
    assert not meta.is_compatible(gen_complete(5))
