"""Shared helpers for the test suite: naive reference oracles implemented
independently of the package internals, plus seeded instance generators."""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Sequence

from holedgraphs import (CycleBlowupSpec, Graph, materialize_framework_blowup,
                         random_cycle_spec, random_framework)


# ---------------------------------------------------------------------------
# Naive reference oracles (deliberately simple, for cross-checking).

def naive_clique_number(g: Graph) -> int:
    """Largest clique by subset enumeration over vertex combinations,
    growing k until no clique of size k exists."""
    verts = list(range(g.n))
    best = 1 if verts else 0
    k = best + 1
    while k <= g.n:
        found = False
        for combo in itertools.combinations(verts, k):
            if all(g.has_edge(u, v)
                   for u, v in itertools.combinations(combo, 2)):
                found = True
                break
        if not found:
            break
        best = k
        k += 1
    return best


def naive_induced_cycle_lengths(g: Graph, max_len: int) -> set[int]:
    """Lengths of all induced cycles of length 4..max_len, found by DFS over
    simple paths anchored at their minimum vertex."""
    lengths: set[int] = set()

    def extend(path: list[int], on_path: set[int]) -> None:
        if len(path) > max_len:
            return
        first, last = path[0], path[-1]
        for nxt in sorted(g.neighbors(last)):
            if nxt == first and len(path) >= 4:
                # Close only if chordless: every vertex sees exactly its two
                # cycle neighbors inside the path.
                if all(len(g.neighbors(v) & on_path) == 2 for v in path):
                    lengths.add(len(path))
                continue
            if nxt <= first or nxt in on_path:
                continue
            # Keep the path induced: the new vertex may touch only `last`
            # (plus `first`, reserved for a later closing edge; the
            # chordless check at closure rejects premature contacts).
            touched = g.neighbors(nxt) & on_path
            if not (last in touched and touched <= {last, first}):
                continue
            path.append(nxt)
            on_path.add(nxt)
            extend(path, on_path)
            on_path.discard(nxt)
            path.pop()

    for v in range(g.n):
        extend([v], {v})
    return lengths


def naive_is_proper(g: Graph, colors: Sequence[int]) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edges())


# ---------------------------------------------------------------------------
# Instance generators.

def clique_cycle_spec(ell: int, size: int) -> CycleBlowupSpec:
    """Blow-up of the ell-cycle with uniform clique size and complete links
    between consecutive cliques."""
    links = tuple((size,) * size for _ in range(ell))
    return CycleBlowupSpec(ell=ell, sizes=(size,) * ell, links=links)


def iter_cycle_instances(count: int, seed: int, ells=(7, 9, 11),
                         max_size: int = 3) -> Iterator[tuple[int, CycleBlowupSpec]]:
    rng = random.Random(seed)
    for _ in range(count):
        ell = rng.choice(ells)
        yield ell, random_cycle_spec(ell, max_size, rng.randrange(10 ** 9))


K_MAX = {7: 5, 9: 3, 11: 4}


def iter_framework_instances(count: int, seed: int, *, ells=(7, 9, 11),
                             m_choices=(0,), max_size: int = 2,
                             b_min_size: int = 1, n_max: int | None = None):
    """Seeded random framework instances; yields (spec, asg) tuples."""
    rng = random.Random(seed)
    emitted = 0
    attempts = 0
    while emitted < count:
        attempts += 1
        assert attempts < 200 * count, "generator failed to hit its quota"
        ell = rng.choice(ells)
        k = rng.randint(3, K_MAX[ell])
        m = rng.choice([mm for mm in m_choices if mm <= k - 2] or [0])
        spec, asg = random_framework(ell, k, m, max_size,
                                     rng.randrange(10 ** 9),
                                     b_min_size=b_min_size)
        if n_max is not None:
            g, _ = materialize_framework_blowup(spec, asg)
            if g.n > n_max:
                continue
        emitted += 1
        yield spec, asg


def iter_path_candidates(seed: int, *, mode_weights=(0, 0, 0, 0, 1, 2)):
    """Endless stream of seeded path blow-up instances satisfying the
    set-level endpoint hypothesis; yields
    (sizes, omega, chi_prime, start, end, mode) with mode 0 = free
    endpoints, 1 = start fixed, 2 = end fixed."""
    rng = random.Random(seed)
    while True:
        m = rng.randint(1, 8)
        omega = rng.randint(2, 16)
        delta = rng.randint(1, 6)
        chi = omega + delta
        sizes = [rng.randint(1, omega - 1) for _ in range(m + 1)]
        sizes[rng.choice((0, -1))] = rng.randint(1, omega // 2)
        mode = rng.choice(mode_weights)
        for _ in range(50):
            start = rng.sample(range(1, chi + 1), sizes[0])
            end = rng.sample(range(1, chi + 1), sizes[-1])
            cs, ce = set(start), set(end)
            if m % 2:
                ok = len(cs & ce) <= (m - 1) * delta // 2
            else:
                ok = min(len(cs - ce), len(ce - cs)) <= m * delta // 2
            if ok:
                yield sizes, omega, chi, start, end, mode
                break
