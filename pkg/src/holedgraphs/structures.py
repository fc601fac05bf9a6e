"""Declarative cycle blow-up specs: validation, materialization, structural
clique number, and seeded random generation.

A blow-up of an odd cycle of length ell replaces each cycle vertex with an
ordered clique W_1..W_ell; consecutive cliques are joined by "staircase"
bipartite graphs in which every vertex is adjacent to an initial segment of
the other side's ordering.  A staircase is encoded one-sidedly as a
nonincreasing degree vector on the `from` clique; the reverse view is
derived and automatically nonincreasing.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph, Report

SPEC_FORMAT_VERSION = 1


@dataclass(frozen=True)
class StaircaseLink:
    """Bipartite staircase: vertex p of `from` sees the first degrees[p]
    vertices of `to` (1-based positions, 0-based vector)."""

    degrees: tuple[int, ...]

    def reverse_degrees(self, to_size: int) -> tuple[int, ...]:
        """Degree vector read from the `to` side; nonincreasing by symmetry."""
        return tuple(sum(1 for d in self.degrees if d >= q)
                     for q in range(1, to_size + 1))


@dataclass(frozen=True)
class CycleBlowupSpec:
    """Sizes of the ell ordered cliques plus the ell staircase links
    W_i -> W_{i+1} (indices mod ell; links[i] runs from clique i to i+1)."""

    ell: int
    sizes: tuple[int, ...]
    links: tuple[tuple[int, ...], ...]

    def link(self, i: int) -> StaircaseLink:
        return StaircaseLink(self.links[i])


def validate_cycle_spec(spec: CycleBlowupSpec) -> Report:
    """Check the structural invariants of a cycle blow-up spec."""
    if spec.ell < 7 or spec.ell % 2 == 0:
        return Report("fail", "structure", witness=spec.ell,
                      detail="cycle length must be odd and >= 7")
    if len(spec.sizes) != spec.ell or len(spec.links) != spec.ell:
        return Report("fail", "structure",
                      witness=(len(spec.sizes), len(spec.links)),
                      detail="need exactly ell clique sizes and ell links")
    for i, size in enumerate(spec.sizes):
        if size < 1:
            return Report("fail", "structure", witness=i,
                          detail=f"clique {i + 1} is null")
    for i, degs in enumerate(spec.links):
        nxt = spec.sizes[(i + 1) % spec.ell]
        if len(degs) != spec.sizes[i]:
            return Report("fail", "structure", witness=i,
                          detail=f"link {i + 1} degree vector length mismatch")
        for p, d in enumerate(degs):
            if not 0 <= d <= nxt:
                return Report("fail", "structure", witness=(i, p),
                              detail=f"link {i + 1} degree {d} out of range")
            if p > 0 and degs[p] > degs[p - 1]:
                return Report("fail", "structure", witness=(i, p),
                              detail=f"link {i + 1} degree vector increases at {p}")
    return Report("pass", "structure")


def cycle_vertex_ids(spec: CycleBlowupSpec) -> list[list[int]]:
    """Global vertex ids, clique by clique, positions in clique order."""
    ids: list[list[int]] = []
    nxt = 0
    for size in spec.sizes:
        ids.append(list(range(nxt, nxt + size)))
        nxt += size
    return ids


def materialize_cycle_blowup(spec: CycleBlowupSpec) -> tuple[Graph, list[list[int]]]:
    """Build the graph: cliques complete inside, staircases between
    consecutive cliques, nothing else.  Labels record (clique, position)."""
    rep = validate_cycle_spec(spec)
    if not rep:
        raise ValueError(f"invalid cycle spec: {rep.detail}")
    ids = cycle_vertex_ids(spec)
    edges: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    for i, members in enumerate(ids):
        for p, v in enumerate(members):
            labels[v] = f"W_{i + 1}[{p + 1}]"
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                edges.append((members[a], members[b]))
    for i, degs in enumerate(spec.links):
        nxt = ids[(i + 1) % spec.ell]
        for p, d in enumerate(degs):
            for q in range(d):
                edges.append((ids[i][p], nxt[q]))
    n = sum(spec.sizes)
    return Graph(n, edges, labels), ids


def staircase_max_clique(from_size: int, to_size: int,
                         degrees: Sequence[int]) -> int:
    """Largest clique spanning a staircase link: a from-prefix of length p
    together with the to-prefix its last vertex sees."""
    best = max(from_size, to_size)
    for p, d in enumerate(degrees, start=1):
        best = max(best, p + d)
    return best


def cycle_structural_clique_number(spec: CycleBlowupSpec) -> int:
    """Clique number derived from the spec alone (no graph search)."""
    best = max(spec.sizes)
    for i, degs in enumerate(spec.links):
        nxt = spec.sizes[(i + 1) % spec.ell]
        best = max(best, staircase_max_clique(spec.sizes[i], nxt, degs))
    return best


def random_cycle_spec(ell: int, max_size: int, seed: int) -> CycleBlowupSpec:
    """Seed-deterministic random spec; every link keeps its leading degree
    positive so the materialization stays ell-holed."""
    if ell < 7 or ell % 2 == 0:
        raise ValueError("ell must be odd and >= 7")
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    rng = random.Random(seed)
    sizes = tuple(rng.randint(1, max_size) for _ in range(ell))
    links = []
    for i in range(ell):
        nxt = sizes[(i + 1) % ell]
        degs = [rng.randint(1, nxt)]
        for _ in range(sizes[i] - 1):
            degs.append(rng.randint(0, degs[-1]))
        links.append(tuple(degs))
    return CycleBlowupSpec(ell, sizes, tuple(links))


def cycle_spec_to_json(spec: CycleBlowupSpec) -> str:
    return json.dumps({
        "version": SPEC_FORMAT_VERSION,
        "kind": "cycle",
        "ell": spec.ell,
        "sizes": list(spec.sizes),
        "links": [list(l) for l in spec.links],
    }, separators=(",", ":"))


def cycle_spec_from_json(text: str) -> CycleBlowupSpec:
    payload = json.loads(text)
    if payload.get("version") != SPEC_FORMAT_VERSION:
        raise ValueError(f"unsupported spec version: {payload.get('version')}")
    if payload.get("kind") != "cycle":
        raise ValueError(f"not a cycle spec: kind={payload.get('kind')}")
    return CycleBlowupSpec(payload["ell"], tuple(payload["sizes"]),
                           tuple(tuple(l) for l in payload["links"]))


def cycle_blowup_dot(spec: CycleBlowupSpec) -> str:
    """DOT export with each clique as a cluster."""
    g, ids = materialize_cycle_blowup(spec)
    lines = ["graph blowup {"]
    for i, members in enumerate(ids):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="W_{i + 1}";')
        for v in members:
            lines.append(f"    {v};")
        lines.append("  }")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
