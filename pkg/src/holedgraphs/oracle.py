"""Independent exact chromatic-number oracle and greedy fallback colorers.

The branch-and-bound solver selects vertices by saturation degree, seeds
its lower bound with an exact maximum clique, and breaks color symmetry by
never opening more than one new color per branch node.  It is deliberately
independent of the constructive colorers so the two can certify each other.
"""

from __future__ import annotations

from typing import Optional

from .graphs import (BudgetExceededError, Coloring, Graph,
                     clique_number_bruteforce)

DEFAULT_CHROMATIC_BUDGET = 20_000_000


def greedy_fallback(g: Graph, order: str = "degeneracy") -> Coloring:
    """Proper coloring by greedy assignment along a heuristic order.

    order="degeneracy": color along a degeneracy order (smallest-last).
    order="saturation": DSATUR, picking the most saturated vertex next.
    """
    if g.n == 0:
        return Coloring({})
    if order == "degeneracy":
        seq = _degeneracy_order(g)
        colors: dict[int, int] = {}
        for v in seq:
            used = {colors[u] for u in g.neighbors(v) if u in colors}
            c = 1
            while c in used:
                c += 1
            colors[v] = c
        return Coloring(colors)
    if order == "saturation":
        colors = {}
        sat: list[set[int]] = [set() for _ in range(g.n)]
        uncolored = set(range(g.n))
        while uncolored:
            v = max(uncolored,
                    key=lambda u: (len(sat[u]), g.degree(u), -u))
            c = 1
            while c in sat[v]:
                c += 1
            colors[v] = c
            uncolored.remove(v)
            for u in g.neighbors(v):
                sat[u].add(c)
        return Coloring(colors)
    raise ValueError(f"unknown order: {order!r}")


def _degeneracy_order(g: Graph) -> list[int]:
    """Smallest-last order: repeatedly remove a minimum-degree vertex."""
    deg = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    out: list[int] = []
    for _ in range(g.n):
        v = min((u for u in range(g.n) if not removed[u]),
                key=lambda u: (deg[u], u))
        removed[v] = True
        out.append(v)
        for u in g.neighbors(v):
            if not removed[u]:
                deg[u] -= 1
    return list(reversed(out))


def exact_chromatic(g: Graph, upper_hint: Optional[int] = None,
                    budget: int = DEFAULT_CHROMATIC_BUDGET) -> tuple[int, Coloring]:
    """Exact chromatic number with a witness optimal coloring.

    The hint only prunes; the result never depends on it.  Raises
    BudgetExceededError when the node budget runs out.
    """
    n = g.n
    if n == 0:
        return 0, Coloring({})
    if g.num_edges() == 0:
        return 1, Coloring({v: 1 for v in range(n)})

    lower = clique_number_bruteforce(g, budget=budget)
    best = greedy_fallback(g, "saturation")
    alt = greedy_fallback(g, "degeneracy")
    if alt.num_colors < best.num_colors:
        best = alt
    best_k = best.num_colors
    # upper_hint is untrusted: it may not shrink the proven search window,
    # so it is accepted for API compatibility and otherwise ignored
    del upper_hint
    best_assign = dict(best.colors)
    if best_k == lower:
        return best_k, Coloring(best_assign)

    adj = [g.neighbors(v) for v in range(n)]
    colors = [0] * n
    state = {"nodes": 0}

    def solve(num_colored: int, max_used: int) -> None:
        nonlocal best_k, best_assign
        state["nodes"] += 1
        if state["nodes"] > budget:
            raise BudgetExceededError(f"chromatic search exceeded budget {budget}")
        if num_colored == n:
            if max_used < best_k:
                best_k = max_used
                best_assign = {v: colors[v] for v in range(n)}
            return
        if max_used >= best_k:
            return
        # saturation-degree selection with deterministic tie-breaks
        pick = -1
        pick_key = (-1, -1, 0)
        for v in range(n):
            if colors[v]:
                continue
            seen = {colors[u] for u in adj[v] if colors[u]}
            key = (len(seen), len(adj[v]), -v)
            if key > pick_key:
                pick_key = key
                pick = v
        v = pick
        forbidden = {colors[u] for u in adj[v] if colors[u]}
        limit = min(max_used + 1, best_k - 1)
        for c in range(1, limit + 1):
            if c in forbidden:
                continue
            colors[v] = c
            solve(num_colored + 1, max(max_used, c))
            colors[v] = 0
            if best_k <= max(lower, max_used):
                return

    solve(0, 0)
    return best_k, Coloring(best_assign)
