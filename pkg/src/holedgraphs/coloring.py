"""Constructive colorings for blow-ups of long-holed structures.

Everything here emits explicit color sequences with colors in 1..chi_bound
and is cross-checked elsewhere against brute-force oracles:

  * chi_bound: the target number of colors, ceil(ell*omega/(ell-1));
  * cyclic_coloring: round-robin injective dispensing over ordered sets;
  * balanced_coloring: two-part color sequences along clique chains that
    stay compatible across staircase junctions (adjacent positions p, q
    only ever satisfy p + q <= omega);
  * color_cycle_blowup: closed-form sequences for cycle blow-ups;
  * color_path_blowup: sequences for path blow-ups under end-color
    constraints, built by canonicalizing colors, running the interior
    construction, and mapping back;
  * color_framework: the constructive m=0 colorer with a certified
    fallback for every other framework blow-up.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import (BudgetExceededError, Coloring, Graph, Report,
                     verify_proper)
from .oracle import DEFAULT_CHROMATIC_BUDGET, exact_chromatic, greedy_fallback
from .structures import CycleBlowupSpec, cycle_structural_clique_number, \
    cycle_vertex_ids
from .frameworks import (BlowupAssignment, FrameworkSpec, apex_chain,
                         framework_structural_clique_number,
                         materialize_framework_blowup, path_vertex_names)


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_ell(ell: int) -> None:
    if ell < 7 or ell % 2 == 0:
        raise ValueError("ell must be odd and >= 7")


def chi_bound(ell: int, omega: int) -> int:
    """Number of colors the constructions guarantee: ceil(ell*omega/(ell-1))."""
    _check_ell(ell)
    if omega < 1:
        raise ValueError("omega must be >= 1")
    return ceil_div(ell * omega, ell - 1)


def half_period(ell: int) -> int:
    """The integer s with ell = 4s+3 or ell = 4s+1; equals floor((ell-1)/4)."""
    _check_ell(ell)
    return (ell - 1) // 4


def min_clique_threshold(ell: int, omega: int) -> int:
    """Smallest end-clique size the constructive colorers rely on:
    min{ceil(omega/(ell-1))*s, omega/2} + 1, with omega/2 kept exact."""
    _check_ell(ell)
    t = half_period(ell) * ceil_div(omega, ell - 1)
    if 2 * t <= omega:
        return t + 1
    return (omega + 3) // 2  # ceil(omega/2 + 1)


# --- round-robin dispensing --------------------------------------------------

def cyclic_color_sets(sizes: Sequence[int],
                      colors: Sequence[int]) -> list[tuple[int, ...]]:
    """Dispense colors round-robin over sets of the given sizes (which must
    be nonincreasing), skipping exhausted sets; returns per-set sequences."""
    if any(sizes[i] < sizes[i + 1] for i in range(len(sizes) - 1)):
        raise ValueError("set sizes must be nonincreasing")
    total = sum(sizes)
    if len(colors) < total:
        raise ValueError(f"need at least {total} colors, got {len(colors)}")
    out: list[list[int]] = [[] for _ in sizes]
    pos = 0
    while pos < total:
        for i, size in enumerate(sizes):
            if len(out[i]) < size:
                out[i].append(colors[pos])
                pos += 1
    return [tuple(seq) for seq in out]


def cyclic_coloring(ordered_sets: Sequence[Sequence[object]],
                    colors: Sequence[int],
                    ) -> tuple[dict[object, int], list[tuple[int, ...]], list[int]]:
    """Injective round-robin coloring of ordered vertex sets.

    Sets are processed largest-first (stable on input order); returns the
    vertex assignment, the per-set color sequences in input order, and the
    processing permutation.
    """
    order = sorted(range(len(ordered_sets)),
                   key=lambda i: (-len(ordered_sets[i]), i))
    seq_sorted = cyclic_color_sets([len(ordered_sets[i]) for i in order], colors)
    seqs: list[tuple[int, ...]] = [()] * len(ordered_sets)
    assignment: dict[object, int] = {}
    for rank, i in enumerate(order):
        seqs[i] = seq_sorted[rank]
        for v, c in zip(ordered_sets[i], seqs[i]):
            assignment[v] = c
    return assignment, seqs, order


# --- balanced chain coloring -------------------------------------------------

@dataclass(frozen=True)
class BalancedColoring:
    """Color sequences along k clique chains hanging off a mutual clique.

    sequences[i][j] is the full color sequence of the clique at distance j
    from end clique i (j = 0 is the end clique itself; interior sequences
    have length omega-1 and only a prefix is used on smaller cliques).
    part1[i][j] is the junction-critical leading block; switch[i] is the
    first even distance whose leading block has collapsed to {1..size_i}.
    """

    ell: int
    omega: int
    chi: int
    mode: str
    b_sizes: tuple[int, ...]
    sequences: tuple[tuple[tuple[int, ...], ...], ...]
    part1: tuple[tuple[tuple[int, ...], ...], ...]
    switch: tuple[int, ...]

    @property
    def depth(self) -> int:
        return (self.ell - 3) // 2


def _scan(pool_desc: bool, chi: int, exclude: set[int], count: int) -> tuple[int, ...]:
    """First `count` colors of the descending (chi..1) or ascending (1..chi)
    scan that avoid `exclude`."""
    rng = range(chi, 0, -1) if pool_desc else range(1, chi + 1)
    out = []
    for c in rng:
        if c not in exclude:
            out.append(c)
            if len(out) == count:
                return tuple(out)
    raise ValueError(f"scan exhausted: needed {count} colors out of {chi}")


def balanced_from_end_sequences(b_seqs: Sequence[Sequence[int]], ell: int,
                                omega: int, mode: str = "custom",
                                ) -> BalancedColoring:
    """Run the chain-sequence engine on explicitly given end-clique
    sequences (all mutually color-disjoint)."""
    _check_ell(ell)
    k = len(b_seqs)
    n = (ell - 3) // 2
    chi = chi_bound(ell, omega)
    r = ceil_div(omega, ell - 1)
    sizes = [len(s) for s in b_seqs]
    if any(size < 1 or size >= omega for size in sizes):
        raise ValueError("end-clique sizes must lie in [1, omega-1]")

    part1: list[list[tuple[int, ...]]] = [[()] * (n + 1) for _ in range(k)]
    for i in range(k):
        part1[i][0] = tuple(b_seqs[i])

    # leading blocks at even distances: a sorted mix of this chain's own
    # leading colors and rotating shares of the other chains' colors
    for j in range(2, n + 1, 2):
        q = (j // 2) * r
        for i in range(k):
            picked: list[int] = []
            if k == 1:
                own = sizes[0]
            else:
                hi = ceil_div(q, k - 1)
                lo = q // (k - 1)
                t = q % (k - 1)
                for d in range(1, k):
                    share = hi if d <= t else lo
                    picked.extend(b_seqs[(i + d) % k][:share])
                own = max(hi, sizes[i] - q)
            picked.extend(b_seqs[i][:own])
            part1[i][j] = tuple(sorted(set(picked))[:sizes[i]])

    switch = []
    for i in range(k):
        full = tuple(range(1, sizes[i] + 1))
        j_sw = next((j for j in range(2, n + 1, 2) if part1[i][j] == full), n + 1)
        switch.append(j_sw)

    # leading blocks at odd distances: descending scan avoiding both even
    # neighbors (the far end of the chain counts as {1..size})
    for j in range(1, n + 1, 2):
        for i in range(k):
            if j >= switch[i]:
                part1[i][j] = tuple(range(chi, chi - (omega - sizes[i]), -1))
                continue
            nxt = part1[i][j + 1] if j < n else tuple(range(1, sizes[i] + 1))
            excl = set(part1[i][j - 1]) | set(nxt)
            part1[i][j] = _scan(True, chi, excl, omega - sizes[i])

    sequences: list[list[tuple[int, ...]]] = [[()] * (n + 1) for _ in range(k)]
    for i in range(k):
        sequences[i][0] = tuple(b_seqs[i])
        for j in range(1, n + 1):
            if j >= switch[i]:
                if j % 2 == 0:
                    sequences[i][j] = tuple(range(1, omega))
                    part1[i][j] = tuple(range(1, sizes[i] + 1))
                else:
                    sequences[i][j] = tuple(range(chi, chi - omega + 1, -1))
            elif j % 2 == 1:
                tail = _scan(True, chi, set(part1[i][j]), sizes[i] - 1)
                sequences[i][j] = part1[i][j] + tail
            else:
                tail = _scan(False, chi, set(part1[i][j]), omega - sizes[i] - 1)
                sequences[i][j] = part1[i][j] + tail

    return BalancedColoring(ell, omega, chi, mode, tuple(sizes),
                            tuple(tuple(row) for row in sequences),
                            tuple(tuple(row) for row in part1),
                            tuple(switch))


def split_threshold_exceeded(ell: int, omega: int, b1: int) -> bool:
    """Whether the largest end clique exceeds 1 + 3(ell-1)/8 * r, which
    forces the two-stage split coloring when ell = 1 mod 4."""
    r = ceil_div(omega, ell - 1)
    return 8 * (b1 - 1) > 3 * (ell - 1) * r


def balanced_coloring(b_sizes: Sequence[int], ell: int, omega: int,
                      mode: str = "auto") -> BalancedColoring:
    """Full balanced coloring: dispense end-clique colors, then run the
    chain-sequence engine.

    b_sizes must be nonincreasing with every entry at least
    half_period(ell)*ceil(omega/(ell-1)) + 1 and total at most omega.
    mode: "plain", "split" (ell = 1 mod 4, k = 3 only), or "auto".
    """
    _check_ell(ell)
    k = len(b_sizes)
    if k < 1:
        raise ValueError("need at least one chain")
    if any(b_sizes[i] < b_sizes[i + 1] for i in range(k - 1)):
        raise ValueError("end-clique sizes must be nonincreasing")
    if sum(b_sizes) > omega:
        raise ValueError("end cliques form a clique larger than omega")
    r = ceil_div(omega, ell - 1)
    floor_size = half_period(ell) * r + 1
    if b_sizes[-1] < floor_size:
        raise ValueError(f"end-clique sizes must be >= {floor_size}")
    chi = chi_bound(ell, omega)

    if ell % 4 == 1 and k == 2 and \
            split_threshold_exceeded(ell, omega, b_sizes[0]):
        # The two-stage split that absorbs a dominant first clique needs
        # two side chains, so for ell = 1 mod 4 this size profile is only
        # supported with k = 3 (with k >= 4 it cannot fit inside omega at
        # all, and k = 1 never needs the split).
        raise ValueError("first end clique too large for two chains when "
                         "ell = 1 mod 4; the scheme needs k = 3 here")
    want_split = ell % 4 == 1 and k == 3 and \
        split_threshold_exceeded(ell, omega, b_sizes[0])
    if mode == "auto":
        mode = "split" if want_split else "plain"
    if mode == "split":
        if k != 3 or ell % 4 != 1:
            raise ValueError("split mode requires ell = 1 mod 4 and k = 3")
        p2 = ceil_div((ell - 1) * r, 8)
        p3 = ((ell - 1) * r) // 8
        if b_sizes[1] < p2 or b_sizes[2] < p3:
            raise ValueError("end cliques too small for the split coloring")
        stage1 = cyclic_color_sets([b_sizes[0], p2, p3], range(1, chi + 1))
        offset = b_sizes[0] + p2 + p3
        _, stage2, _ = cyclic_coloring(
            [range(b_sizes[1] - p2), range(b_sizes[2] - p3)],
            range(offset + 1, chi + 1))
        b_seqs = [stage1[0], stage1[1] + stage2[0], stage1[2] + stage2[1]]
    elif mode == "plain":
        b_seqs = list(cyclic_color_sets(list(b_sizes), range(1, chi + 1)))
    else:
        raise ValueError(f"unknown mode: {mode!r}")
    return balanced_from_end_sequences(b_seqs, ell, omega, mode)


def prop_balanced_check(bc: BalancedColoring) -> Report:
    """Monotonicity of the leading blocks along each chain: moving inward,
    even blocks only gain colors outside the end clique, and odd blocks
    only gain colors inside it."""
    n = bc.depth
    for i in range(len(bc.b_sizes)):
        own = set(bc.part1[i][0])
        evens = [(j, set(bc.part1[i][j]) - own) for j in range(0, n + 1, 2)]
        for (j, a), (j2, b) in zip(evens, evens[1:]):
            if not a <= b:
                return Report("fail", "structure", witness=(i + 1, j, j2),
                              detail="even leading blocks not nested "
                                     "outside the end clique")
        odds = [(j, set(bc.part1[i][j]) & own) for j in range(1, n + 1, 2)]
        for (j, a), (j2, b) in zip(odds, odds[1:]):
            if not a <= b:
                return Report("fail", "structure", witness=(i + 1, j, j2),
                              detail="odd leading blocks not nested "
                                     "inside the end clique")
    return Report("pass", "structure")


def balanced_is_proper(bc: BalancedColoring) -> Report:
    """Direct properness of the sequences on the worst-case geometry: end
    cliques mutually complete, and consecutive chain cliques adjacent at
    exactly the positions p, q with p + q <= omega."""
    seen: set[int] = set()
    for i, seq in enumerate(s[0] for s in bc.sequences):
        for c in seq:
            if c in seen:
                return Report("fail", "properness", witness=(i + 1, c),
                              detail="end-clique color reused")
            seen.add(c)
    for i, chain in enumerate(bc.sequences):
        for j, seq in enumerate(chain):
            if len(set(seq)) != len(seq):
                return Report("fail", "properness", witness=(i + 1, j),
                              detail="repeated color inside a clique")
            if any(c < 1 or c > bc.chi for c in seq):
                return Report("fail", "properness", witness=(i + 1, j),
                              detail="color out of range")
        for j in range(len(chain) - 1):
            left, right = chain[j], chain[j + 1]
            for p in range(1, len(left) + 1):
                for q in range(1, min(len(right), bc.omega - p) + 1):
                    if left[p - 1] == right[q - 1]:
                        return Report("fail", "properness",
                                      witness=(i + 1, j, p, q),
                                      detail=f"junction color clash "
                                             f"{left[p - 1]}")
    return Report("pass", "properness")


# --- cycle blow-up coloring --------------------------------------------------

def cycle_color_sequences(ell: int, omega: int) -> list[tuple[int, ...]]:
    """Per-clique color sequences for any cycle blow-up of clique number
    omega: position p of clique i gets sequence[i][p-1], and adjacent
    positions always satisfy p + q <= omega across consecutive cliques.

    Even omega uses closed-form half-sequences; odd omega splices one
    fresh shared color into the middle of the even omega-1 sequences.
    """
    _check_ell(ell)
    if omega < 1:
        raise ValueError("omega must be >= 1")
    if omega == 1:
        return [(1,)] * ell
    if omega % 2 == 1:
        base = cycle_color_sequences(ell, omega - 1)
        fresh = chi_bound(ell, omega - 1) + 1
        mid = (omega + 1) // 2
        return [seq[:mid - 1] + (fresh,) + seq[mid - 1:] for seq in base]

    r = ceil_div(omega, ell - 1)
    half = omega // 2
    s1 = (half - 1) // r
    j = half - s1 * r  # 1 <= j <= r
    block: dict[int, tuple[int, ...]] = {
        1: tuple(range(1, half + 1)),
        2: tuple(range(half + 1, omega + 1)),
    }
    if s1 >= 1:
        block[3] = tuple(range(r + 1, half + 1)) + \
            tuple(range(omega + 1, omega + r + 1))
    for h in range(2, s1 + 1):
        block[2 * h] = tuple(range(half + 1 + (h - 1) * r, omega + 1)) + \
            tuple(range(1, (h - 1) * r + 1))
        block[2 * h + 1] = tuple(range(h * r + 1, half + 1)) + \
            tuple(range(omega + 1, omega + r + 1)) + \
            tuple(range(half + 1, half + (h - 1) * r + 1))
    even_seq = tuple(range(omega + 1 - j, omega + 1)) + \
        tuple(range(1, half - j + 1))
    odd_seq = tuple(range(omega + r - j + 1, omega + r + 1)) + \
        tuple(range(half + 1, omega - j + 1))
    for i in range(2 * s1 + 2, ell + 1):
        block[i] = even_seq if i % 2 == 0 else odd_seq
    return [block[i] + tuple(reversed(block[i % ell + 1]))
            for i in range(1, ell + 1)]


def color_cycle_blowup(spec: CycleBlowupSpec) -> Coloring:
    """Explicit proper coloring of a cycle blow-up with at most
    chi_bound(ell, omega) colors."""
    omega = cycle_structural_clique_number(spec)
    seqs = cycle_color_sequences(spec.ell, omega)
    ids = cycle_vertex_ids(spec)
    colors: dict[int, int] = {}
    for i, members in enumerate(ids):
        for p, v in enumerate(members):
            colors[v] = seqs[i][p]
    return Coloring(colors)


# --- path blow-up coloring under end constraints -----------------------------

def path_blowup_graph(sizes: Sequence[int], omega: int) -> tuple[Graph, list[list[int]]]:
    """Worst-case path blow-up: consecutive cliques adjacent at exactly the
    positions p, q with p + q <= omega."""
    ids: list[list[int]] = []
    nxt = 0
    for size in sizes:
        ids.append(list(range(nxt, nxt + size)))
        nxt += size
    edges: list[tuple[int, int]] = []
    for members in ids:
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                edges.append((members[a], members[b]))
    for i in range(len(sizes) - 1):
        for p in range(1, sizes[i] + 1):
            for q in range(1, min(sizes[i + 1], omega - p) + 1):
                edges.append((ids[i][p - 1], ids[i + 1][q - 1]))
    return Graph(nxt, edges), ids


def _odd_interior_sequences(sizes: Sequence[int], omega: int, chi: int,
                            x: int, c0: Sequence[int],
                            fixed_start: bool) -> list[tuple[int, ...]]:
    """Canonical-space interior sequences for an odd-length chain.

    Precondition (canonical space): the far end is colored chi, chi-1, ...
    positionwise; c0 is the near end's canonical sequence whose x displaced
    colors are high values and whose remaining values, when the start is
    free, are exactly 1..len(c0)-x.
    Each full interior sequence has length omega; even-distance leading
    blocks have length |c0| and transition from c0 to {1..|c0|} at a rate
    of chi-omega colors per step toward the far end.
    """
    m = len(sizes) - 1
    z0 = len(c0)
    lead: dict[int, tuple[int, ...]] = {m - 1: tuple(range(1, z0 + 1)),
                                        0: tuple(c0)}
    delta = chi - omega
    for step in range(1, (m - 1) // 2 + 1):
        e = m - 1 - 2 * step if fixed_start else 2 * step
        if step * delta < x:
            if fixed_start:
                # prefix of c0 ending at the displaced color of rank
                # step*delta, padded with unused low values
                cut_val = chi + 1 - step * delta
                yset = list(c0[:list(c0).index(cut_val) + 1])
                pool = [v for v in range(1, z0 + 1) if v not in set(yset)]
            else:
                yset = list(range(1, z0 - x + step * delta + 1))
                highs = sorted(set(c0) - set(range(1, z0 - x + 1)))
                pool = [v for v in highs if v not in set(yset)]
            lead[e] = tuple(yset + pool[:z0 - len(yset)])
        else:
            lead[e] = tuple(c0) if fixed_start else tuple(range(1, z0 + 1))
    for o in range(1, m - 1, 2):
        excl = set(lead[o - 1]) | set(lead[o + 1])
        lead[o] = _scan(True, chi, excl, omega - z0)

    out: list[tuple[int, ...]] = [tuple(c0)]
    for i in range(1, m):
        if i == m - 1:
            tail: tuple[int, ...] = tuple(range(z0 + 1, omega + 1))
        elif fixed_start:
            tail = tuple(reversed(lead[i + 1]))
        else:
            tail = tuple(reversed(lead[i - 1]))
        out.append(lead[i] + tail)
    out.append(tuple(range(chi, chi - sizes[m], -1)))
    return out


class PathConstraintError(ValueError):
    """End-color constraints that the path construction cannot realize."""


class _PathClash(RuntimeError):
    """An attempted plan emitted an improper or contract-violating coloring."""


def color_path_blowup(sizes: Sequence[int], omega: int, chi_prime: int,
                      start: Sequence[int], end: Sequence[int],
                      start_fixed: bool = False, end_fixed: bool = False,
                      ) -> list[tuple[int, ...]]:
    """Color a path blow-up with chi_prime colors under end constraints.

    sizes are the clique sizes along the path; adjacency is assumed worst
    case (positions p, q adjacent iff p + q <= omega).  start and end give
    the required end colors: a fixed end must receive exactly those colors
    positionwise, an unfixed end must receive them as a set.  At most one
    end may be fixed.

    Both path orientations are attempted (the fixed-end-last plan first:
    it composes the free-end sequences, whose junction safety is unconditional);
    every attempt is verified and an improper attempt is discarded, never
    repaired.  Raises PathConstraintError when the hypothesis (odd interior
    count: few shared end colors; even: few displaced end colors) fails or
    no orientation is admissible, and RuntimeError when every admissible
    plan emits a collision.
    """
    sizes = list(sizes)
    m = len(sizes) - 1
    if m < 1:
        raise ValueError("need at least two cliques")
    if start_fixed and end_fixed:
        raise PathConstraintError("at most one end may carry a fixed coloring")
    if chi_prime <= omega:
        raise PathConstraintError("chi_prime must exceed omega")
    if len(start) != sizes[0] or len(end) != sizes[m]:
        raise ValueError("end constraint lengths must match the end cliques")
    for seq in (start, end):
        if len(set(seq)) != len(seq) or any(c < 1 or c > chi_prime for c in seq):
            raise ValueError("end colors must be distinct and in range")
    if any(size < 1 for size in sizes):
        raise ValueError("clique sizes must be positive")
    if any(size >= omega for size in sizes):
        raise PathConstraintError("cliques must be smaller than omega")

    plans: list[tuple[tuple[int, int], bool]] = []
    for flipped in (False, True):
        szs = list(reversed(sizes)) if flipped else sizes
        sfx = end_fixed if flipped else start_fixed
        if 2 * szs[0] > omega:
            continue
        plans.append(((0 if sfx else 1, 1 if szs[0] <= szs[-1] else 0),
                      flipped))
    if not plans:
        raise PathConstraintError("some end clique must have size <= omega/2")
    plans.sort(reverse=True)

    clashes: list[str] = []
    constraint_error: Optional[PathConstraintError] = None
    for _, flipped in plans:
        args = (list(reversed(sizes)), end, start, end_fixed, start_fixed) \
            if flipped else (sizes, start, end, start_fixed, end_fixed)
        try:
            result = _attempt_path(args[0], omega, chi_prime, args[1],
                                   args[2], args[3], args[4])
        except PathConstraintError as exc:
            constraint_error = exc
            continue
        except _PathClash as exc:
            clashes.append(str(exc))
            continue
        return list(reversed(result)) if flipped else result
    if clashes:
        raise RuntimeError("path coloring construction failed on every "
                           f"admissible plan: {clashes}")
    raise constraint_error if constraint_error is not None else \
        PathConstraintError("no admissible plan")


def _attempt_path(sizes: list[int], omega: int, chi_prime: int,
                  start: Sequence[int], end: Sequence[int],
                  start_fixed: bool, end_fixed: bool) -> list[tuple[int, ...]]:
    """One oriented construction attempt; see color_path_blowup."""
    m = len(sizes) - 1
    c_start, c_end = set(start), set(end)
    delta = chi_prime - omega
    if m % 2 == 1:
        x = len(c_start & c_end)
        if 2 * x > (m - 1) * delta:
            raise PathConstraintError("too many shared end colors")
    else:
        x = len(c_start - c_end)
        if 2 * x > m * delta:
            raise PathConstraintError("too many displaced end colors")

    # canonical color permutation pi (original -> canonical)
    pi: dict[int, int] = {}
    z0, zm = sizes[0], sizes[m]

    def take(colors, values) -> None:
        for c, v in zip(colors, values):
            if c in pi or v in pi.values():
                raise PathConstraintError("end constraints force a color clash")
            pi[c] = v

    if m % 2 == 1:
        commons = [c for c in start if c in c_end] if start_fixed \
            else sorted(c_start & c_end)
        others = [c for c in start if c not in c_end] if start_fixed \
            else sorted(c_start - c_end)
        if end_fixed:
            take(end, range(chi_prime, chi_prime - zm, -1))
            take(others, range(1, z0 - x + 1))
            canon_commons = sorted(pi[c] for c in commons)
            if canon_commons and canon_commons[0] <= z0 - x:
                raise PathConstraintError("shared end colors sit too low "
                                          "to canonicalize")
        else:
            take(commons, range(chi_prime, chi_prime - x, -1))
            take(others, range(1, z0 - x + 1))
            take(sorted(c_end - c_start),
                 range(chi_prime - x, chi_prime - zm, -1))
            canon_commons = sorted(pi[c] for c in commons)
        if start_fixed:
            c0 = [pi[c] for c in start]
        else:
            c0 = list(range(1, z0 - x + 1)) + canon_commons
        if m == 1:
            canon = [tuple(c0), tuple(range(chi_prime, chi_prime - zm, -1))]
        else:
            full = _odd_interior_sequences(sizes, omega, chi_prime, x, c0,
                                           fixed_start=start_fixed)
            canon = [tuple(seq[:sizes[i]]) for i, seq in enumerate(full)]
    else:
        # reduce to the odd case by one phantom clique beyond the far end
        commons = [c for c in start if c in c_end] if start_fixed \
            else sorted(c_start & c_end)
        displaced = [c for c in start if c not in c_end] if start_fixed \
            else sorted(c_start - c_end)
        if end_fixed:
            take(end, range(1, zm + 1))
            canon_low = sorted(pi[c] for c in commons)
            if canon_low != list(range(1, z0 - x + 1)):
                raise PathConstraintError("fixed far end scatters the shared "
                                          "colors; cannot canonicalize")
        else:
            take(commons, range(1, z0 - x + 1))
            take(sorted(c_end - c_start), range(z0 - x + 1, zm + 1))
        take(displaced, range(chi_prime, chi_prime - x, -1))
        if start_fixed:
            c0 = [pi[c] for c in start]
        else:
            c0 = list(range(1, z0 - x + 1)) + \
                sorted(chi_prime - i for i in range(x))
        phantom = sizes + [omega - sizes[m]]
        full = _odd_interior_sequences(phantom, omega, chi_prime, x, c0,
                                       fixed_start=start_fixed)
        canon = [tuple(seq[:sizes[i]]) for i, seq in enumerate(full[:-1])]
        # the far end sits at the last real index and receives 1..size
        canon[m] = tuple(range(1, zm + 1))

    # complete pi to a bijection on 1..chi_prime and map back
    used_src = set(pi)
    used_dst = set(pi.values())
    spare_src = [c for c in range(1, chi_prime + 1) if c not in used_src]
    spare_dst = [v for v in range(1, chi_prime + 1) if v not in used_dst]
    pi.update(zip(spare_src, spare_dst))
    inv = {v: c for c, v in pi.items()}
    result = [tuple(inv[v] for v in seq) for seq in canon]

    # hard arbiter: the attempt must be proper and honor contracts
    for i in range(m):
        left, right = result[i], result[i + 1]
        for p in range(1, len(left) + 1):
            for q in range(1, min(len(right), omega - p) + 1):
                if left[p - 1] == right[q - 1]:
                    raise _PathClash(
                        f"junction {i} positions ({p},{q}) share color "
                        f"{left[p - 1]}")
    for i, seq in enumerate(result):
        if len(set(seq)) != len(seq):
            raise _PathClash(f"clique {i} repeats a color")
    if start_fixed and result[0] != tuple(start):
        raise _PathClash("fixed start coloring not honored")
    if end_fixed and result[m] != tuple(end):
        raise _PathClash("fixed end coloring not honored")
    if set(result[0]) != c_start or set(result[m]) != c_end:
        raise _PathClash("end color set not realized")
    return result


# --- framework coloring ------------------------------------------------------

def _framework_constructive_m0(spec: FrameworkSpec, asg: BlowupAssignment,
                               g: Graph, cliques: dict[str, list[int]],
                               omega: int) -> Optional[Coloring]:
    """The explicit m=0 colorer; returns None when its preconditions fail."""
    ell, k = spec.ell, spec.k
    chi = chi_bound(ell, omega)
    r = ceil_div(omega, ell - 1)
    s = half_period(ell)
    if ell % 4 == 3:
        k_max = 5 if ell == 7 else 4
    else:
        k_max = 3
    if k > k_max:
        return None

    b_sizes = [asg.size(f"b{i}") for i in range(1, k + 1)]
    order = sorted(range(k), key=lambda i: (-b_sizes[i], i))
    m_sorted = [b_sizes[i] for i in order]
    if m_sorted[-1] < s * r + 1 or sum(m_sorted) > omega:
        return None

    # end-clique color dispensing, possibly in two stages
    if ell % 4 == 3:
        big = ceil_div(s * k * r, k - 1)
        small = ceil_div(s * r, k - 1)
        i_prime = max((i + 1 for i in range(k) if m_sorted[i] >= big),
                      default=0)
        if i_prime == 0:
            b_seqs = list(cyclic_color_sets(m_sorted, range(1, chi + 1)))
        else:
            stage1_sizes = m_sorted[:i_prime] + [small] * (k - i_prime)
            if any(stage1_sizes[t] < stage1_sizes[t + 1] for t in range(k - 1)):
                return None
            stage1 = cyclic_color_sets(stage1_sizes, range(1, chi + 1))
            offset = sum(stage1_sizes)
            rest = [m_sorted[t] - small for t in range(i_prime, k)]
            _, stage2, _ = cyclic_coloring([range(sz) for sz in rest],
                                           range(offset + 1, chi + 1))
            b_seqs = list(stage1[:i_prime]) + \
                [stage1[i_prime + t] + stage2[t] for t in range(k - i_prime)]
    else:
        if k != 3:
            return None
        mode = "split" if split_threshold_exceeded(ell, omega, m_sorted[0]) \
            else "plain"
        try:
            bc = balanced_coloring(m_sorted, ell, omega, mode)
        except ValueError:
            return None
        b_seqs = [bc.sequences[i][0] for i in range(k)]

    try:
        bc = balanced_from_end_sequences(b_seqs, ell, omega)
    except ValueError:
        return None
    if not balanced_is_proper(bc):
        return None

    # paint the chains: clique at distance j from the b-end of sorted
    # chain t takes the prefix of sequence t, j
    colors: dict[int, int] = {}
    n = (ell - 3) // 2
    for t, idx in enumerate(order):
        path = path_vertex_names(ell, idx + 1)  # a_i ... b_i
        for j in range(n + 1):
            name = path[n - j]
            seq = bc.sequences[t][j]
            members = cliques[name]
            if len(members) > len(seq):
                return None
            for p, v in enumerate(members):
                colors[v] = seq[p]

    # greedily color the shared apex chain, scanning from the top of the
    # palette for one residue of ell and from the bottom for the other
    scan = range(chi, 0, -1) if ell % 4 == 3 else range(1, chi + 1)
    for name in apex_chain(spec):
        v = cliques[name][0]
        taken = {colors[u] for u in g.neighbors(v) if u in colors}
        c = next((c for c in scan if c not in taken), None)
        if c is None:
            return None
        colors[v] = c
    coloring = Coloring(colors)
    rep = verify_proper(g, coloring)
    if not rep:
        raise AssertionError(
            f"m=0 framework coloring construction bug: {rep.detail}")
    if coloring.num_colors > chi:
        raise AssertionError("m=0 framework coloring exceeded the bound")
    return coloring


def color_framework(spec: FrameworkSpec, asg: BlowupAssignment,
                    budget: int = DEFAULT_CHROMATIC_BUDGET,
                    ) -> tuple[Coloring, str]:
    """Color a framework blow-up with at most chi_bound colors.

    Uses the explicit construction whenever m=0 and its preconditions
    hold; otherwise falls back to the exact oracle (tag fallback_exact)
    or, past the budget, to greedy (tag fallback_greedy).  The bound is
    always certified; an uncertifiable fallback raises rather than
    passing silently.
    """
    g, cliques = materialize_framework_blowup(spec, asg)
    omega = framework_structural_clique_number(spec, asg)
    chi = chi_bound(spec.ell, omega)

    if spec.m == 0:
        coloring = _framework_constructive_m0(spec, asg, g, cliques, omega)
        if coloring is not None:
            return coloring, "constructive_m0"

    try:
        chrom, coloring = exact_chromatic(g, budget=budget)
        if chrom > chi:
            raise AssertionError(
                f"exact chromatic number {chrom} exceeds the bound {chi}")
        return coloring, "fallback_exact"
    except BudgetExceededError:
        coloring = greedy_fallback(g, "saturation")
        alt = greedy_fallback(g, "degeneracy")
        if alt.num_colors < coloring.num_colors:
            coloring = alt
        if coloring.num_colors > chi:
            raise BudgetExceededError(
                f"greedy fallback used {coloring.num_colors} > bound {chi} "
                "and the exact budget was exhausted; bound unverifiable")
        return coloring, "fallback_greedy"
