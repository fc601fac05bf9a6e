"""Framework specs and their blow-ups: validation, materialization,
structural clique number, and seeded random generation.

A framework consists of two arborescences T (apex a_0, growing over the
vertices a_0..a_k) and S (apex b_k, over b_1..b_k) built from "tents",
plus k vertex-disjoint paths P_i of length (ell-3)/2 joining a_i to b_i.
A blow-up replaces each path vertex t by an ordered clique W_t (all other
framework vertices stay singletons) and joins cliques along the framework:

  * cliques whose framework vertices are connected by a directed path on
    the same side are complete to each other, except that a tent leaf's
    clique meets the tent's interior chain in a two-sided staircase;
  * consecutive path cliques are joined by staircases in which every
    vertex on both sides has positive degree;
  * everything else is anticomplete, so the framework stays induced.

Tents are stored as stars or caterpillars (apex, optional interior chain,
base interval of leaves); this is a deliberate subset of the admissible
tent shapes and is what the generator emits.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .graphs import Graph, Report
from .structures import staircase_max_clique

SPEC_FORMAT_VERSION = 1


def a_name(i: int) -> str:
    return f"a{i}"


def b_name(i: int) -> str:
    return f"b{i}"


def path_interior_names(ell: int, i: int) -> list[str]:
    """Interior vertices of the path P_i ((ell-3)/2 edges)."""
    return [f"p{i}_{j}" for j in range(1, (ell - 3) // 2)]


def path_vertex_names(ell: int, i: int) -> list[str]:
    """The path P_i from a_i to b_i, endpoints included."""
    return [a_name(i)] + path_interior_names(ell, i) + [b_name(i)]


@dataclass(frozen=True)
class Tent:
    """Star or caterpillar subtree: apex, optional interior chain, and a
    base of consecutive leaves all hanging from the end of the chain."""

    apex: str
    base: tuple[str, ...]
    interior: tuple[str, ...] = ()


@dataclass(frozen=True)
class FrameworkSpec:
    ell: int
    k: int
    m: int
    upper_tents: tuple[Tent, ...]
    lower_tents: tuple[Tent, ...] = ()


@dataclass
class BlowupAssignment:
    """Clique sizes and link orderings for blowing up a framework.

    sizes: clique size per path vertex (a_i, b_i, interiors); absent = 1.
    chain_links: per consecutive path pair (left, right), read from a_i
      toward b_i, the nonincreasing degree vector over the left clique;
      every vertex on both sides must have positive degree.
    tent_links: per tent leaf, the nonincreasing degree vector over the
      tent's interior chain (entry h: the chain vertex at depth h+1 below
      the apex sees that long a prefix of the leaf's clique).
    """

    sizes: dict[str, int] = field(default_factory=dict)
    chain_links: dict[tuple[str, str], tuple[int, ...]] = field(default_factory=dict)
    tent_links: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def size(self, t: str) -> int:
        return self.sizes.get(t, 1)


def _index_of(name: str, prefix: str) -> Optional[int]:
    if name.startswith(prefix) and name[len(prefix):].isdigit():
        return int(name[len(prefix):])
    return None


def upper_edges(spec: FrameworkSpec) -> list[tuple[str, str]]:
    """Directed edges of the arborescence T (apex a_0)."""
    edges = [(a_name(i - 1), a_name(i)) for i in range(1, spec.m + 1)]
    for tent in spec.upper_tents:
        chain = [tent.apex, *tent.interior]
        edges.extend(zip(chain, chain[1:]))
        edges.extend((chain[-1], leaf) for leaf in tent.base)
    return edges


def lower_edges(spec: FrameworkSpec) -> list[tuple[str, str]]:
    """Directed edges of the arborescence S (apex b_k)."""
    edges = [(b_name(i + 1), b_name(i)) for i in range(spec.m + 1, spec.k)]
    for tent in spec.lower_tents:
        chain = [tent.apex, *tent.interior]
        edges.extend(zip(chain, chain[1:]))
        edges.extend((chain[-1], leaf) for leaf in tent.base)
    return edges


def _ancestor_pairs(edges: Sequence[tuple[str, str]],
                    root: str) -> set[tuple[str, str]]:
    """(ancestor, descendant) pairs of an arborescence, ancestors strict."""
    children: dict[str, list[str]] = {}
    for parent, child in edges:
        children.setdefault(parent, []).append(child)
    pairs: set[tuple[str, str]] = set()
    stack: list[tuple[str, list[str]]] = [(root, [])]
    while stack:
        node, ancestors = stack.pop()
        for anc in ancestors:
            pairs.add((anc, node))
        for child in children.get(node, []):
            stack.append((child, ancestors + [node]))
    return pairs


def validate_framework(spec: FrameworkSpec) -> Report:
    """Check every structural invariant of a framework spec."""

    def fail(detail: str, witness: object = None) -> Report:
        return Report("fail", "structure", witness=witness, detail=detail)

    if spec.ell < 7 or spec.ell % 2 == 0:
        return fail("ell must be odd and >= 7", spec.ell)
    if spec.k < 3:
        return fail("k must be >= 3", spec.k)
    if not 0 <= spec.m <= spec.k - 2:
        return fail("m must satisfy 0 <= m <= k-2", spec.m)
    if spec.m == 0 and spec.lower_tents:
        return fail("m=0 forbids lower tents")

    upper_leaf_names = [a_name(i) for i in range(spec.m + 1, spec.k + 1)]
    lower_leaf_names = [b_name(i) for i in range(1, spec.m + 1)]

    def check_side(tents: Sequence[Tent], side: str,
                   apex_range: list[str], leaf_names: list[str]) -> Optional[Report]:
        covered: list[str] = []
        interiors: list[str] = []
        for tent in tents:
            if tent.apex not in apex_range:
                return fail(f"{side} tent apex {tent.apex} out of range", tent)
            if not tent.base:
                return fail(f"{side} tent with empty base", tent)
            for leaf in tent.base:
                if leaf not in leaf_names:
                    return fail(f"{side} tent base vertex {leaf} out of range", tent)
            idxs = [leaf_names.index(leaf) for leaf in tent.base]
            if idxs != list(range(min(idxs), max(idxs) + 1)):
                return fail(f"{side} tent base is not a consecutive interval", tent)
            covered.extend(tent.base)
            interiors.extend(tent.interior)
        if len(set(covered)) != len(covered):
            return fail(f"{side} tent bases overlap")
        if set(covered) != set(leaf_names):
            missing = sorted(set(leaf_names) - set(covered))
            return fail(f"{side} tent bases do not cover {missing}", missing)
        if len(set(interiors)) != len(interiors):
            return fail(f"{side} tent interiors reused")
        reserved = {a_name(i) for i in range(spec.k + 1)} | \
                   {b_name(i) for i in range(1, spec.k + 1)}
        if set(interiors) & reserved:
            return fail(f"{side} tent interior name clashes with spine names")
        return None

    upper_apex_range = [a_name(i) for i in range(spec.m + 1)]
    lower_apex_range = [b_name(i) for i in range(spec.m + 1, spec.k + 1)]
    bad = check_side(spec.upper_tents, "upper", upper_apex_range, upper_leaf_names)
    if bad:
        return bad
    bad = check_side(spec.lower_tents, "lower", lower_apex_range, lower_leaf_names)
    if bad:
        return bad
    if not any(t.apex == a_name(0) for t in spec.upper_tents):
        return fail("no upper tent with apex a0")
    if spec.m >= 1 and not spec.lower_tents:
        return fail("m >= 1 requires lower tents")

    upper_int = {v for t in spec.upper_tents for v in t.interior}
    lower_int = {v for t in spec.lower_tents for v in t.interior}
    if upper_int & lower_int:
        return fail("tent interior names shared between sides")

    # spiral interleaving
    total = len(spec.upper_tents) + len(spec.lower_tents)
    upper_apexes = {t.apex for t in spec.upper_tents}
    lower_apexes = {t.apex for t in spec.lower_tents}

    def base_lo(t: Tent) -> int:
        return min(_index_of(v, t.base[0][0]) for v in t.base)  # type: ignore[type-var]

    def base_hi(t: Tent) -> int:
        return max(_index_of(v, t.base[0][0]) for v in t.base)  # type: ignore[type-var]

    innermost_upper = min(spec.upper_tents, key=base_lo) if spec.upper_tents else None
    innermost_lower = max(spec.lower_tents, key=base_hi) if spec.lower_tents else None
    for tent in spec.upper_tents:
        if total % 2 == 1 and tent is innermost_upper:
            continue
        i = base_lo(tent)
        if b_name(i) not in lower_apexes:
            return fail(f"spiral broken: b{i} is not a lower apex "
                        f"(leftmost base of upper tent at a{i})", tent)
    for tent in spec.lower_tents:
        if total % 2 == 0 and tent is innermost_lower:
            continue
        j = base_hi(tent)
        if a_name(j) not in upper_apexes:
            return fail(f"spiral broken: a{j} is not an upper apex "
                        f"(rightmost base of lower tent at b{j})", tent)

    # arborescence shape: unique parents
    for edges, root, side in ((upper_edges(spec), a_name(0), "upper"),
                              (lower_edges(spec), b_name(spec.k), "lower")):
        parents: dict[str, str] = {}
        for p, c in edges:
            if c in parents:
                return fail(f"{side} arborescence gives {c} two parents")
            parents[c] = p
        if root in parents:
            return fail(f"{side} root {root} has a parent")

    # exactly one directed path per index pair
    t_pairs = _ancestor_pairs(upper_edges(spec), a_name(0))
    s_pairs = _ancestor_pairs(lower_edges(spec), b_name(spec.k))
    for i in range(1, spec.k + 1):
        for j in range(i + 1, spec.k + 1):
            t_rel = (a_name(i), a_name(j)) in t_pairs or (a_name(j), a_name(i)) in t_pairs
            s_rel = (b_name(i), b_name(j)) in s_pairs or (b_name(j), b_name(i)) in s_pairs
            if t_rel == s_rel:
                which = "both" if t_rel else "neither"
                return fail(f"index pair ({i},{j}) has {which} directed paths",
                            (i, j))
    return Report("pass", "structure")


def validate_assignment(spec: FrameworkSpec, asg: BlowupAssignment) -> Report:
    """Check the blow-up data against the spec."""

    def fail(detail: str, witness: object = None) -> Report:
        return Report("fail", "structure", witness=witness, detail=detail)

    blown = {v for i in range(1, spec.k + 1) for v in path_vertex_names(spec.ell, i)}
    for t, size in asg.sizes.items():
        if t not in blown:
            return fail(f"size given for non-path vertex {t}", t)
        if size < 1:
            return fail(f"clique {t} is null", t)
    for i in range(1, spec.k + 1):
        path = path_vertex_names(spec.ell, i)
        for left, right in zip(path, path[1:]):
            degs = asg.chain_links.get((left, right))
            if degs is None:
                return fail(f"missing chain link ({left},{right})")
            if len(degs) != asg.size(left):
                return fail(f"chain link ({left},{right}) has wrong length")
            if degs[0] != asg.size(right):
                return fail(f"chain link ({left},{right}) leaves a {right} "
                            "vertex with zero degree")
            for p, d in enumerate(degs):
                if d < 1 or d > asg.size(right):
                    return fail(f"chain link ({left},{right}) degree {d} "
                                f"out of range at {p}")
                if p > 0 and degs[p] > degs[p - 1]:
                    return fail(f"chain link ({left},{right}) increases at {p}")
    for tent in (*spec.upper_tents, *spec.lower_tents):
        for leaf in tent.base:
            degs = asg.tent_links.get(leaf, ())
            if len(degs) != len(tent.interior):
                return fail(f"tent link for {leaf} has wrong length "
                            f"(expected {len(tent.interior)})")
            for h, d in enumerate(degs):
                if d < 1 or d > asg.size(leaf):
                    return fail(f"tent link for {leaf} degree {d} out of range")
                if h > 0 and degs[h] > degs[h - 1]:
                    return fail(f"tent link for {leaf} increases at {h}")
    extraneous = set(asg.tent_links) - {leaf for tent in
                                        (*spec.upper_tents, *spec.lower_tents)
                                        for leaf in tent.base}
    if extraneous:
        return fail(f"tent links for non-leaves {sorted(extraneous)}")
    return Report("pass", "structure")


def d_vertex_order(spec: FrameworkSpec) -> list[str]:
    """Deterministic order of framework (spine) vertices."""
    order = [a_name(i) for i in range(spec.k + 1)]
    for tent in spec.upper_tents:
        order.extend(tent.interior)
    order.extend(b_name(i) for i in range(1, spec.k + 1))
    for tent in spec.lower_tents:
        order.extend(tent.interior)
    for i in range(1, spec.k + 1):
        order.extend(path_interior_names(spec.ell, i))
    return order


def materialize_framework_blowup(
        spec: FrameworkSpec,
        asg: Optional[BlowupAssignment] = None,
) -> tuple[Graph, dict[str, list[int]]]:
    """Build the blow-up graph and the clique map (name -> ordered ids)."""
    rep = validate_framework(spec)
    if not rep:
        raise ValueError(f"invalid framework: {rep.detail}")
    if asg is None:
        asg = default_assignment(spec)
    rep = validate_assignment(spec, asg)
    if not rep:
        raise ValueError(f"invalid assignment: {rep.detail}")

    order = d_vertex_order(spec)
    cliques: dict[str, list[int]] = {}
    nxt = 0
    for t in order:
        cliques[t] = [nxt]
        nxt += 1
    for t in order:
        for _ in range(asg.size(t) - 1):
            cliques[t].append(nxt)
            nxt += 1
    n = nxt

    edges: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    for t, members in cliques.items():
        for p, v in enumerate(members):
            labels[v] = f"W_{t}[{p + 1}]"
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                edges.append((members[a], members[b]))

    def complete(t1: str, t2: str) -> None:
        for u in cliques[t1]:
            for v in cliques[t2]:
                edges.append((u, v))

    # arborescence sides: transitive closure, with leaf-vs-interior staircases
    for tents, tree_edges, root in (
            (spec.upper_tents, upper_edges(spec), a_name(0)),
            (spec.lower_tents, lower_edges(spec), b_name(spec.k))):
        interior_depth: dict[str, tuple[str, int]] = {}
        leaf_tent: dict[str, Tent] = {}
        for tent in tents:
            for h, z in enumerate(tent.interior, start=1):
                interior_depth[z] = (tent.apex, h)
            for leaf in tent.base:
                leaf_tent[leaf] = tent
        for anc, desc in _ancestor_pairs(tree_edges, root):
            if desc in leaf_tent and anc in interior_depth:
                # staircase between the leaf clique and the interior chain
                h = interior_depth[anc][1]
                d = asg.tent_links.get(desc, ())[h - 1]
                z = cliques[anc][0]
                for v in cliques[desc][:d]:
                    edges.append((z, v))
            else:
                complete(anc, desc)

    # path staircases
    for i in range(1, spec.k + 1):
        path = path_vertex_names(spec.ell, i)
        for left, right in zip(path, path[1:]):
            degs = asg.chain_links[(left, right)]
            for p, d in enumerate(degs):
                for v in cliques[right][:d]:
                    edges.append((cliques[left][p], v))

    return Graph(n, edges, labels), cliques


def default_assignment(spec: FrameworkSpec) -> BlowupAssignment:
    """All cliques size 1, all links the forced single edge."""
    asg = BlowupAssignment()
    for i in range(1, spec.k + 1):
        path = path_vertex_names(spec.ell, i)
        for left, right in zip(path, path[1:]):
            asg.chain_links[(left, right)] = (1,)
    for tent in (*spec.upper_tents, *spec.lower_tents):
        for leaf in tent.base:
            if tent.interior:
                asg.tent_links[leaf] = tuple(1 for _ in tent.interior)
    return asg


def apex_chain(spec: FrameworkSpec) -> list[str]:
    """The intersection of all directed root paths of T, in depth order.

    This is a_0 alone unless T is a single caterpillar tent rooted at a_0,
    in which case the shared interior chain joins it.
    """
    chain = [a_name(0)]
    if spec.m == 0 and len(spec.upper_tents) == 1:
        chain.extend(spec.upper_tents[0].interior)
    return chain


def framework_structural_clique_number(spec: FrameworkSpec,
                                       asg: Optional[BlowupAssignment] = None) -> int:
    """Clique number of the blow-up, computed from the structure alone.

    Maximum cliques live either inside a single staircase link, or along a
    directed root path on one side: the complete join of the path's blown
    spine cliques plus the best prefix of a tent's interior chain and its
    leaf clique.
    """
    if asg is None:
        asg = default_assignment(spec)
    best = max(asg.size(t) for t in d_vertex_order(spec))

    for i in range(1, spec.k + 1):
        path = path_vertex_names(spec.ell, i)
        for left, right in zip(path, path[1:]):
            best = max(best, staircase_max_clique(
                asg.size(left), asg.size(right), asg.chain_links[(left, right)]))

    def tent_best(tent: Tent, complete_part: int) -> int:
        out = complete_part
        for leaf in tent.base:
            leaf_part = asg.size(leaf)
            degs = asg.tent_links.get(leaf, ())
            for h, d in enumerate(degs, start=1):
                leaf_part = max(leaf_part, h + d)
            out = max(out, complete_part + leaf_part)
        return out

    # upper side: a_0 plus the blown spine prefix up to the tent's apex
    for tent in spec.upper_tents:
        j = _index_of(tent.apex, "a")
        complete_part = 1 + sum(asg.size(a_name(h)) for h in range(1, j + 1))
        best = max(best, tent_best(tent, complete_part))
    if spec.m >= 1:
        best = max(best, 1 + sum(asg.size(a_name(h)) for h in range(1, spec.m + 1)))

    # lower side: the blown spine suffix from b_k down to the tent's apex
    for tent in spec.lower_tents:
        t0 = _index_of(tent.apex, "b")
        complete_part = sum(asg.size(b_name(h)) for h in range(t0, spec.k + 1))
        best = max(best, tent_best(tent, complete_part))
    best = max(best, sum(asg.size(b_name(h))
                         for h in range(spec.m + 1, spec.k + 1)))
    return best


def random_framework(ell: int, k: int, m: int, max_size: int, seed: int, *,
                     b_min_size: int = 1,
                     a_max_size: Optional[int] = None,
                     interior_max_size: Optional[int] = None,
                     ) -> tuple[FrameworkSpec, BlowupAssignment]:
    """Seed-deterministic random framework blow-up; always validates.

    The tent layout follows the alternating spiral: upper tents consume
    leaf intervals right to left, lower tents consume base intervals left
    to right, and each new apex is dictated by the previous tent.
    """
    if ell < 7 or ell % 2 == 0:
        raise ValueError("ell must be odd and >= 7")
    if k < 3 or not 0 <= m <= k - 2:
        raise ValueError("need k >= 3 and 0 <= m <= k-2")
    rng = random.Random(seed)

    def partition(total: int, parts: int) -> list[int]:
        cuts = sorted(rng.sample(range(1, total), parts - 1)) if parts > 1 else []
        bounds = [0, *cuts, total]
        return [bounds[i + 1] - bounds[i] for i in range(parts)]

    upper_tents: list[Tent] = []
    lower_tents: list[Tent] = []
    uid = 0

    def fresh_interior(side: str) -> tuple[str, ...]:
        nonlocal uid
        length = rng.randint(0, 2)
        names = tuple(f"{side}{uid}_{h}" for h in range(1, length + 1))
        uid += 1
        return names

    if m == 0:
        base = tuple(a_name(i) for i in range(1, k + 1))
        upper_tents.append(Tent(a_name(0), base, fresh_interior("u")))
    else:
        num_leaves = k - m
        q = rng.randint(1, m)                      # lower tents
        p = q + rng.choice((0, 1))                 # upper tents: q or q+1
        p = max(1, min(p, num_leaves))
        q = min(q, p)                              # keep p in {q, q+1}
        if p == q == 0:
            p = 1
        upper_sizes = partition(num_leaves, p)
        lower_sizes = partition(m, q)
        hi = k
        lo = 1
        apex = a_name(0)
        for t in range(p):
            size = upper_sizes[t]
            base = tuple(a_name(i) for i in range(hi - size + 1, hi + 1))
            upper_tents.append(Tent(apex, base, fresh_interior("u")))
            leftmost = hi - size + 1
            hi -= size
            if t < q:
                lsize = lower_sizes[t]
                lbase = tuple(b_name(i) for i in range(lo, lo + lsize))
                lower_tents.append(Tent(b_name(leftmost), lbase,
                                        fresh_interior("l")))
                apex = a_name(lo + lsize - 1)
                lo += lsize
    spec = FrameworkSpec(ell, k, m,
                         tuple(upper_tents), tuple(lower_tents))
    rep = validate_framework(spec)
    if not rep:
        raise AssertionError(f"generator produced invalid framework: {rep.detail}")

    a_max = a_max_size if a_max_size is not None else max_size
    int_max = interior_max_size if interior_max_size is not None else max_size
    asg = BlowupAssignment()
    for i in range(1, k + 1):
        asg.sizes[a_name(i)] = rng.randint(1, max(1, a_max))
        asg.sizes[b_name(i)] = rng.randint(b_min_size,
                                           max(max_size, b_min_size))
        for v in path_interior_names(ell, i):
            asg.sizes[v] = rng.randint(1, max(1, int_max))
        path = path_vertex_names(ell, i)
        for left, right in zip(path, path[1:]):
            degs = [asg.sizes.get(right, 1)]
            for _ in range(asg.sizes.get(left, 1) - 1):
                degs.append(rng.randint(1, degs[-1]))
            asg.chain_links[(left, right)] = tuple(degs)
    for tent in (*spec.upper_tents, *spec.lower_tents):
        for leaf in tent.base:
            if tent.interior:
                degs = [rng.randint(1, asg.size(leaf))]
                for _ in tent.interior[1:]:
                    degs.append(rng.randint(1, degs[-1]))
                asg.tent_links[leaf] = tuple(degs)
    rep = validate_assignment(spec, asg)
    if not rep:
        raise AssertionError(f"generator produced invalid assignment: {rep.detail}")
    return spec, asg


# --- serialization -----------------------------------------------------------

def framework_to_json(spec: FrameworkSpec, asg: BlowupAssignment) -> str:
    return json.dumps({
        "version": SPEC_FORMAT_VERSION,
        "kind": "framework",
        "ell": spec.ell,
        "k": spec.k,
        "m": spec.m,
        "upper_tents": [{"apex": t.apex, "base": list(t.base),
                         "interior": list(t.interior)} for t in spec.upper_tents],
        "lower_tents": [{"apex": t.apex, "base": list(t.base),
                         "interior": list(t.interior)} for t in spec.lower_tents],
        "sizes": dict(sorted(asg.sizes.items())),
        "chain_links": [[list(kv[0]), list(kv[1])]
                        for kv in sorted(asg.chain_links.items())],
        "tent_links": {leaf: list(d) for leaf, d in sorted(asg.tent_links.items())},
    }, separators=(",", ":"))


def framework_from_json(text: str) -> tuple[FrameworkSpec, BlowupAssignment]:
    payload = json.loads(text)
    if payload.get("version") != SPEC_FORMAT_VERSION:
        raise ValueError(f"unsupported spec version: {payload.get('version')}")
    if payload.get("kind") != "framework":
        raise ValueError(f"not a framework spec: kind={payload.get('kind')}")

    def tents(items: list[dict]) -> tuple[Tent, ...]:
        return tuple(Tent(t["apex"], tuple(t["base"]), tuple(t["interior"]))
                     for t in items)

    spec = FrameworkSpec(payload["ell"], payload["k"], payload["m"],
                         tents(payload["upper_tents"]),
                         tents(payload["lower_tents"]))
    asg = BlowupAssignment(
        sizes=dict(payload["sizes"]),
        chain_links={(pair[0], pair[1]): tuple(degs)
                     for pair, degs in payload["chain_links"]},
        tent_links={leaf: tuple(d) for leaf, d in payload["tent_links"].items()},
    )
    return spec, asg


def framework_blowup_dot(spec: FrameworkSpec, asg: BlowupAssignment) -> str:
    """DOT export with each blown clique as a cluster."""
    g, cliques = materialize_framework_blowup(spec, asg)
    lines = ["graph blowup {"]
    for idx, (t, members) in enumerate(cliques.items()):
        if len(members) > 1:
            lines.append(f"  subgraph cluster_{idx} {{")
            lines.append(f'    label="W_{t}";')
            for v in members:
                lines.append(f"    {v};")
            lines.append("  }")
        else:
            lines.append(f'  {members[0]} [label="{t}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
