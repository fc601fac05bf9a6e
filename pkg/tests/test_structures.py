"""Cycle blow-up specs: validation, materialization, clique number, JSON."""

import pytest
from hypothesis import given, settings, strategies as st

from holedgraphs import (CycleBlowupSpec, clique_number_bruteforce,
                         cycle_blowup_dot, cycle_spec_from_json,
                         cycle_spec_to_json, cycle_structural_clique_number,
                         materialize_cycle_blowup, random_cycle_spec,
                         staircase_max_clique, structural_clique_number,
                         validate_cycle_spec, validate_ell_holed)
from conftest import clique_cycle_spec, iter_cycle_instances


def test_plain_cycle_spec():
    spec = clique_cycle_spec(7, 1)
    assert validate_cycle_spec(spec)
    g, cliques = materialize_cycle_blowup(spec)
    assert g.n == 7 and g.num_edges() == 7
    assert cycle_structural_clique_number(spec) == 2
    assert len(cliques) == 7


def test_validate_rejects_bad_specs():
    # Link degree vector must be nonincreasing.
    bad = CycleBlowupSpec(ell=7, sizes=(2,) + (1,) * 6,
                          links=((1, 2),) + ((1,),) * 6)
    assert not validate_cycle_spec(bad)
    # Degrees must not exceed the target clique size.
    bad = CycleBlowupSpec(ell=7, sizes=(1,) * 7, links=((2,),) + ((1,),) * 6)
    assert not validate_cycle_spec(bad)
    # Even length rejected.
    rep = validate_cycle_spec(CycleBlowupSpec(ell=6, sizes=(1,) * 6,
                                              links=((1,),) * 6))
    assert not rep and "odd" in rep.detail


def test_staircase_max_clique_small():
    # Complete link merges both cliques.
    assert staircase_max_clique(2, 3, (3, 3)) == 5
    # Empty link keeps them apart.
    assert staircase_max_clique(2, 3, (0, 0)) == 3
    # One shared vertex on each side.
    assert staircase_max_clique(2, 3, (1, 0)) == 3


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_random_spec_validates(seed):
    spec = random_cycle_spec(7, 4, seed)
    assert validate_cycle_spec(spec)


def test_structural_clique_matches_bruteforce():
    for _, spec in iter_cycle_instances(40, seed=101, max_size=4):
        g, _ = materialize_cycle_blowup(spec)
        assert (cycle_structural_clique_number(spec)
                == clique_number_bruteforce(g))


def test_materialized_blowup_is_ell_holed():
    for ell, spec in iter_cycle_instances(15, seed=202, max_size=2):
        g, _ = materialize_cycle_blowup(spec)
        assert validate_ell_holed(g, ell)


def test_structural_dispatcher():
    spec = clique_cycle_spec(9, 2)
    assert structural_clique_number(spec) == 4
    with pytest.raises(TypeError):
        structural_clique_number(object())


def test_cycle_spec_json_roundtrip():
    spec = random_cycle_spec(9, 3, 77)
    spec2 = cycle_spec_from_json(cycle_spec_to_json(spec))
    assert spec2 == spec


def test_cycle_blowup_dot():
    dot = cycle_blowup_dot(clique_cycle_spec(7, 2))
    assert dot.startswith("graph")
