"""Core graph representation, proper-coloring checks, chordless-cycle search,
and an exact brute-force clique solver.

Vertices are dense integers 0..n-1.  Colors are positive integers starting
at 1.  All public values are immutable after construction and every
operation is a pure function, so everything here is safe to share between
threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional

DEFAULT_CYCLE_BUDGET = 5_000_000
DEFAULT_CLIQUE_BUDGET = 5_000_000


class BudgetExceededError(RuntimeError):
    """A bounded exhaustive search ran out of its node budget.

    Raised instead of returning a truncated (and therefore wrong) answer.
    """


class Graph:
    """Immutable simple undirected graph with optional vertex labels."""

    __slots__ = ("n", "_adj", "labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 labels: Optional[Mapping[int, str]] = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        self.labels: dict[int, str] = dict(labels) if labels else {}

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Graph) and self.n == other.n
                and self._adj == other._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"


@dataclass(frozen=True)
class Coloring:
    """Total vertex -> color map; colors are positive integers."""

    colors: Mapping[int, int]

    @property
    def num_colors(self) -> int:
        return max(self.colors.values(), default=0)

    def color_classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v in sorted(self.colors):
            out.setdefault(self.colors[v], []).append(v)
        return out


@dataclass(frozen=True)
class Report:
    """Outcome of a verification: pass/fail plus a re-checkable witness."""

    status: str  # "pass" | "fail"
    kind: str    # "properness" | "holed" | "bound" | "structure"
    witness: object = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def __bool__(self) -> bool:
        return self.ok


def build_graph(n: int, edges: Iterable[tuple[int, int]],
                labels: Optional[Mapping[int, str]] = None) -> Graph:
    """Build an immutable simple graph; duplicate edges are merged."""
    return Graph(n, edges, labels)


def verify_proper(g: Graph, c: Coloring) -> Report:
    """Pass iff no edge of g is monochromatic under c; c must be total."""
    for v in range(g.n):
        if v not in c.colors:
            raise ValueError(f"coloring is partial: vertex {v} uncolored")
        if c.colors[v] < 1:
            raise ValueError(f"vertex {v} has non-positive color {c.colors[v]}")
    for u in range(g.n):
        cu = c.colors[u]
        for v in g.neighbors(u):
            if u < v and cu == c.colors[v]:
                return Report("fail", "properness", witness=(u, v),
                              detail=f"edge ({u},{v}) monochromatic with color {cu}")
    return Report("pass", "properness")


def _iter_chordless_cycles(g: Graph, min_len: int, max_len: int,
                           budget: int) -> Iterator[tuple[int, ...]]:
    """Yield each chordless cycle of length in [min_len, max_len] once.

    Canonical form: the cycle starts at its smallest vertex and the second
    vertex is smaller than the last, so each rotation/reflection class is
    emitted exactly once.  Counts DFS expansions against `budget`.
    """
    adj = g._adj
    state = {"expansions": 0}

    def extend(start: int, path: list[int], on_path: set[int]):
        tail = path[-1]
        for w in sorted(adj[tail]):
            state["expansions"] += 1
            if state["expansions"] > budget:
                raise BudgetExceededError(
                    f"chordless-cycle search exceeded budget {budget}")
            if w <= start or w in on_path:
                continue
            closes = len(path) >= 2 and start in adj[w]
            # any adjacency into the path beyond the tail (and, when closing,
            # the start) is a chord
            chord = any(u in on_path for u in adj[w]
                        if u != tail and not (closes and u == start))
            if chord:
                continue
            if closes:
                if len(path) + 1 >= min_len and path[1] < w:
                    yield tuple(path) + (w,)
                # extending past w would leave the chord w-start
                continue
            if len(path) <= max_len - 2:
                path.append(w)
                on_path.add(w)
                yield from extend(start, path, on_path)
                path.pop()
                on_path.remove(w)

    for start in range(g.n):
        yield from extend(start, [start], {start})


def chordless_cycles(g: Graph, min_len: int = 4, max_len: int = 0,
                     budget: int = DEFAULT_CYCLE_BUDGET) -> list[tuple[int, ...]]:
    """All chordless cycles with length in [min_len, max_len], canonicalized.

    Complete up to max_len; raises BudgetExceededError rather than
    truncating.  min_len must be at least 4 (triangles are never holes).
    """
    if min_len < 4:
        raise ValueError("min_len must be >= 4")
    if max_len < min_len:
        raise ValueError("max_len must be >= min_len")
    return sorted(_iter_chordless_cycles(g, min_len, max_len, budget))


def validate_ell_holed(g: Graph, ell: int, max_len: int = 0,
                       budget: int = DEFAULT_CYCLE_BUDGET) -> Report:
    """Pass iff every chordless cycle of length in [4, max_len] has length ell.

    max_len defaults to 2*ell, enough to expose any near-length violation
    of the single-hole-length property at desk scale.
    """
    if ell < 7 or ell % 2 == 0:
        raise ValueError("ell must be odd and >= 7")
    if max_len == 0:
        max_len = 2 * ell
    if max_len < ell + 1:
        raise ValueError("max_len must be >= ell+1")
    for cyc in _iter_chordless_cycles(g, 4, max_len, budget):
        if len(cyc) != ell:
            return Report("fail", "holed", witness=cyc,
                          detail=f"hole of length {len(cyc)}, expected {ell}")
    return Report("pass", "holed")


def clique_number_bruteforce(g: Graph, budget: int = DEFAULT_CLIQUE_BUDGET) -> int:
    """Exact clique number by bitset branch-and-bound with a coloring bound."""
    n = g.n
    if n == 0:
        return 0
    bits = [0] * n
    for u in range(n):
        for v in g.neighbors(u):
            bits[u] |= 1 << v
    best = 1
    nodes = 0

    def greedy_color_order(cand: int) -> list[tuple[int, int]]:
        # classic Tomita bound: color candidates greedily; a vertex whose
        # color class index is c cannot extend a clique past depth c
        order: list[tuple[int, int]] = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= avail - 1
                order.append((v, color))
                avail &= ~bits[v]
                rest &= ~(1 << v)
        return order

    def expand(size: int, cand: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(f"clique search exceeded budget {budget}")
        order = greedy_color_order(cand)
        for v, bound in reversed(order):
            if size + bound <= best:
                return
            nxt = cand & bits[v]
            if nxt:
                expand(size + 1, nxt)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return best


# --- serialization -----------------------------------------------------------

GRAPH_FORMAT_VERSION = 1


def graph_to_json(g: Graph) -> str:
    payload = {
        "version": GRAPH_FORMAT_VERSION,
        "n": g.n,
        "edges": g.edges(),
        "labels": {str(v): lab for v, lab in sorted(g.labels.items())},
    }
    return json.dumps(payload, separators=(",", ":"))


def graph_from_json(text: str) -> Graph:
    payload = json.loads(text)
    if payload.get("version") != GRAPH_FORMAT_VERSION:
        raise ValueError(f"unsupported graph format version: {payload.get('version')}")
    labels = {int(v): lab for v, lab in payload.get("labels", {}).items()}
    return Graph(payload["n"], [tuple(e) for e in payload["edges"]], labels)


def coloring_to_json(c: Coloring, method: str = "") -> str:
    payload = {
        "version": 1,
        "colors": {str(v): col for v, col in sorted(c.colors.items())},
        "num_colors": c.num_colors,
        "method": method,
    }
    return json.dumps(payload, separators=(",", ":"))


def coloring_from_json(text: str) -> Coloring:
    payload = json.loads(text)
    if payload.get("version") != 1:
        raise ValueError(f"unsupported coloring format version: {payload.get('version')}")
    return Coloring({int(v): col for v, col in payload["colors"].items()})


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lab = g.labels.get(v)
        if lab:
            lines.append(f'  {v} [label="{lab}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
