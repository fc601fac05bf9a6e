"""Exact chromatic-number oracle and greedy fallback."""

import pytest
from hypothesis import given, settings, strategies as st

from holedgraphs import (BudgetExceededError, build_graph, exact_chromatic,
                         greedy_fallback, verify_proper)


def cycle_graph(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


@pytest.mark.parametrize("g,chrom", [
    (cycle_graph(4), 2),
    (cycle_graph(7), 3),
    (complete_graph(5), 5),
    (petersen(), 3),
    (build_graph(3, []), 1),
    (build_graph(0, []), 0),
])
def test_exact_chromatic_known(g, chrom):
    value, coloring = exact_chromatic(g)
    assert value == chrom
    if g.n:
        assert verify_proper(g, coloring)
        assert coloring.num_colors == chrom


def test_exact_chromatic_respects_upper_hint():
    g = cycle_graph(5)
    value, coloring = exact_chromatic(g, upper_hint=4)
    assert value == 3
    assert verify_proper(g, coloring)


def test_exact_chromatic_budget():
    # A triangle-free Mycielski-style worst case would be overkill; a tight
    # budget on a moderate graph must trip deterministically.
    g = petersen()
    with pytest.raises(BudgetExceededError):
        exact_chromatic(g, budget=2)


@pytest.mark.parametrize("order", ["degeneracy", "saturation"])
def test_greedy_fallback_proper(order):
    g = petersen()
    coloring = greedy_fallback(g, order=order)
    assert verify_proper(g, coloring)
    assert coloring.num_colors >= 3


@settings(max_examples=40, deadline=None)
@given(st.data(), st.integers(min_value=1, max_value=9))
def test_exact_at_most_greedy(data, n):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    flags = data.draw(st.lists(st.booleans(), min_size=len(pairs),
                               max_size=len(pairs)))
    g = build_graph(n, [p for p, f in zip(pairs, flags) if f])
    value, coloring = exact_chromatic(g)
    assert verify_proper(g, coloring)
    for order in ("degeneracy", "saturation"):
        greedy = greedy_fallback(g, order=order)
        assert verify_proper(g, greedy)
        assert value <= greedy.num_colors
