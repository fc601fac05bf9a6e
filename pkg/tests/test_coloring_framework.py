"""Framework blow-up coloring: constructive m=0 case and oracle fallbacks."""

from holedgraphs import (chi_bound, color_framework, exact_chromatic,
                         framework_structural_clique_number,
                         materialize_framework_blowup, verify_proper)
from holedgraphs.coloring import ceil_div, half_period
from conftest import iter_framework_instances


def preconditions_hold(spec, asg):
    """Constructive m=0 case: every branch clique at least the chain
    floor, branch cliques jointly at most omega."""
    if spec.m != 0:
        return False
    omega = framework_structural_clique_number(spec, asg)
    floor = half_period(spec.ell) * ceil_div(omega, spec.ell - 1) + 1
    b_sizes = [asg.size(f"b{i}") for i in range(1, spec.k + 1)]
    return min(b_sizes) >= floor and sum(b_sizes) <= omega


def certify(spec, asg):
    g, _ = materialize_framework_blowup(spec, asg)
    omega = framework_structural_clique_number(spec, asg)
    coloring, tag = color_framework(spec, asg)
    assert verify_proper(g, coloring), tag
    assert coloring.num_colors <= chi_bound(spec.ell, omega), tag
    return g, tag


def test_constructive_m0_fires_and_is_proper():
    constructive = 0
    for spec, asg in iter_framework_instances(40, seed=88, max_size=3,
                                              b_min_size=5):
        _, tag = certify(spec, asg)
        if preconditions_hold(spec, asg):
            assert tag == "constructive_m0"
            constructive += 1
    assert constructive >= 20


def test_small_branch_cliques_fall_back():
    fallback = 0
    for spec, asg in iter_framework_instances(15, seed=19, max_size=2):
        _, tag = certify(spec, asg)
        if not preconditions_hold(spec, asg):
            assert tag in ("fallback_exact", "fallback_greedy")
            fallback += 1
    assert fallback >= 5


def test_positive_m_certified_by_exact_oracle():
    for spec, asg in iter_framework_instances(8, seed=23, m_choices=(1, 2, 3),
                                              n_max=36):
        g, _ = certify(spec, asg)
        chrom, _ = exact_chromatic(g)
        omega = framework_structural_clique_number(spec, asg)
        assert chrom <= chi_bound(spec.ell, omega)
