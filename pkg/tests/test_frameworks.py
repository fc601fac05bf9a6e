"""Framework specs: validation, materialization, clique number, holes."""

import pytest

from holedgraphs import (FrameworkSpec, Tent, clique_number_bruteforce,
                         default_assignment, framework_blowup_dot,
                         framework_from_json,
                         framework_structural_clique_number, framework_to_json,
                         materialize_framework_blowup, random_framework,
                         structural_clique_number, validate_assignment,
                         validate_ell_holed, validate_framework)
from conftest import iter_framework_instances, naive_clique_number


def simple_spec(ell=7, k=3):
    """Smallest well-formed m=0 framework: one upper star tent; the lower
    side degenerates to the directed chain b_k -> ... -> b_1."""
    upper = (Tent(apex="a0", base=tuple(f"a{i}" for i in range(1, k + 1))),)
    return FrameworkSpec(ell=ell, k=k, m=0, upper_tents=upper)


def test_simple_spec_validates():
    spec = simple_spec()
    assert validate_framework(spec)
    asg = default_assignment(spec)
    assert validate_assignment(spec, asg)


def test_validate_rejects_missing_tent():
    spec = FrameworkSpec(ell=7, k=3, m=0,
                         upper_tents=(Tent(apex="a0", base=("a1",)),),
                         lower_tents=(Tent(apex="b3", base=("b1", "b2")),))
    assert not validate_framework(spec)  # a2, a3 unreachable


def test_materialize_singleton_framework():
    spec = simple_spec()
    g, cliques = materialize_framework_blowup(spec, default_assignment(spec))
    # k paths of (ell-1)/2 vertices each, plus the upper apex a0 (the lower
    # apex b3 is already a path endpoint).
    assert g.n == 3 * 3 + 1
    assert validate_ell_holed(g, 7)
    assert set(cliques) >= {"a0", "a1", "b1", "b3"}


def test_structural_clique_matches_bruteforce():
    for spec, asg in iter_framework_instances(25, seed=31, max_size=3):
        g, _ = materialize_framework_blowup(spec, asg)
        assert (framework_structural_clique_number(spec, asg)
                == clique_number_bruteforce(g))
        assert structural_clique_number(spec, asg) \
            == clique_number_bruteforce(g)


def test_blowups_are_ell_holed():
    for spec, asg in iter_framework_instances(12, seed=57, m_choices=(0, 1, 2),
                                              n_max=26):
        g, _ = materialize_framework_blowup(spec, asg)
        assert validate_ell_holed(g, spec.ell)


def test_naive_clique_crosscheck_small():
    for spec, asg in iter_framework_instances(5, seed=13, n_max=16):
        g, _ = materialize_framework_blowup(spec, asg)
        assert clique_number_bruteforce(g) == naive_clique_number(g)


def test_random_framework_validates():
    for seed in range(20):
        spec, asg = random_framework(7, 4, 1, 3, seed)
        assert validate_framework(spec)
        assert validate_assignment(spec, asg)


def test_random_framework_rejects_bad_m():
    with pytest.raises(ValueError):
        random_framework(7, 3, 2, 2, 0)


def test_framework_json_roundtrip():
    spec, asg = random_framework(9, 3, 1, 2, 5)
    spec2, asg2 = framework_from_json(framework_to_json(spec, asg))
    assert spec2 == spec
    assert asg2.sizes == asg.sizes
    assert asg2.chain_links == asg.chain_links
    assert asg2.tent_links == asg.tent_links


def test_framework_dot():
    spec, asg = random_framework(7, 3, 0, 2, 1)
    assert framework_blowup_dot(spec, asg).startswith("graph")
