"""Closed-form coloring of cycle blow-ups."""

import pytest

from holedgraphs import (chi_bound, clique_number_bruteforce,
                         color_cycle_blowup, cycle_color_sequences,
                         cycle_structural_clique_number,
                         materialize_cycle_blowup, verify_proper)
from conftest import clique_cycle_spec, iter_cycle_instances


@pytest.mark.parametrize("ell", [7, 9, 11, 13])
@pytest.mark.parametrize("omega", [1, 2, 3, 4, 5, 8, 13, 20])
def test_sequences_are_valid(ell, omega):
    seqs = cycle_color_sequences(ell, omega)
    chi = chi_bound(ell, omega)
    assert len(seqs) == ell
    for seq in seqs:
        assert len(seq) == omega
        assert len(set(seq)) == omega
        assert all(1 <= c <= chi for c in seq)
    # Consecutive sequences clash only beyond the staircase boundary:
    # positions p and q sharing a color must have p + q > omega (1-based).
    for i in range(ell):
        nxt = seqs[(i + 1) % ell]
        pos = {c: q + 1 for q, c in enumerate(nxt)}
        for p, c in enumerate(seq_i := seqs[i], start=1):
            if c in pos:
                assert p + pos[c] > omega, (i, c, p, pos[c])


def test_plain_cycle_is_three_colored():
    spec = clique_cycle_spec(7, 1)
    coloring = color_cycle_blowup(spec)
    g, _ = materialize_cycle_blowup(spec)
    assert verify_proper(g, coloring)
    assert coloring.num_colors <= 3


def test_uniform_blowups_meet_bound():
    for ell, size in [(7, 2), (7, 3), (9, 2), (11, 2)]:
        spec = clique_cycle_spec(ell, size)
        g, _ = materialize_cycle_blowup(spec)
        omega = cycle_structural_clique_number(spec)
        assert omega == 2 * size
        coloring = color_cycle_blowup(spec)
        assert verify_proper(g, coloring)
        assert coloring.num_colors <= chi_bound(ell, omega)


def test_random_blowups_certified():
    for ell, spec in iter_cycle_instances(60, seed=404, max_size=4):
        g, _ = materialize_cycle_blowup(spec)
        omega = cycle_structural_clique_number(spec)
        assert omega == clique_number_bruteforce(g)
        coloring = color_cycle_blowup(spec)
        assert verify_proper(g, coloring), (ell, spec)
        assert coloring.num_colors <= chi_bound(ell, omega)
