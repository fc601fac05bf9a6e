"""Round-robin dispensing of a palette over ordered sets."""

from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from holedgraphs import cyclic_coloring
from holedgraphs.coloring import cyclic_color_sets


def test_golden_three_sets():
    asg, seqs, order = cyclic_coloring(
        [("a", "b", "c"), ("d", "e"), ("f",)], list(range(1, 8)))
    assert [set(s) for s in seqs] == [{1, 4, 6}, {2, 5}, {3}]
    assert seqs == [(1, 4, 6), (2, 5), (3,)]
    assert order == [0, 1, 2]
    assert asg == {"a": 1, "b": 4, "c": 6, "d": 2, "e": 5, "f": 3}


def test_sets_variant():
    assert cyclic_color_sets([3, 2, 1], list(range(1, 8))) == \
        [(1, 4, 6), (2, 5), (3,)]


def test_sorting_is_stable_on_ties():
    _, seqs, order = cyclic_coloring([("a",), ("b",)], [1, 2])
    assert order == [0, 1]
    assert seqs == [(1,), (2,)]


def test_larger_sets_dispense_first():
    _, seqs, order = cyclic_coloring([("a",), ("b", "c")], [1, 2, 3])
    assert order == [1, 0]
    assert seqs == [(2,), (1, 3)]


def test_palette_too_small():
    with pytest.raises(ValueError):
        cyclic_coloring([("a", "b")], [1])


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=6),
       st.integers(min_value=0, max_value=8))
def test_dispensing_properties(sizes, extra):
    total = sum(sizes)
    palette = list(range(1, total + extra + 1))
    elems = [[(i, j) for j in range(sz)] for i, sz in enumerate(sizes)]
    asg, seqs, order = cyclic_coloring(elems, palette)
    # Every element colored, injectively within its set.
    assert len(asg) == total
    for i, sz in enumerate(sizes):
        assert len(set(seqs[i])) == sz
    # Each color used at most ceil(total/len) times overall and the
    # dispensing is exhaustive before reusing colors.
    counts = Counter(asg.values())
    assert max(counts.values()) - min(counts.values()) <= 1 \
        if len(counts) == len(palette) else max(counts.values()) >= 1
    # Emission order visits sets in nonincreasing size.
    ordered_sizes = [sizes[i] for i in order]
    assert ordered_sizes == sorted(sizes, reverse=True)
