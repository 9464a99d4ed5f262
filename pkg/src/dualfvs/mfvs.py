"""Multi-feedback vertex set: hit every monochromatic cycle of an h-colored graph.

One compact representation is chosen per color; a solution must meet every set
of every chosen representation. That hitting problem is encoded as domination:
copy-vertices stand for graph vertices, set-vertices for representation sets,
and an apex pair ``v*``-``u*`` (``v*`` joined to every copy) absorbs the
domination of the copies. The auxiliary graph has a dominating set of size
``k + 1`` exactly when ``k`` copies dominate all set-vertices.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Hashable, Iterable, Mapping, Sequence

from .compact import CompactRepresentation, enumerate_fvs_compact_reps
from .graph import EdgeColoredGraph, is_minimal_solution, is_solution

log = logging.getLogger(__name__)

V_STAR = ("apex", "v*")
U_STAR = ("apex", "u*")


def copy_node(v: int) -> tuple[str, int]:
    return ("copy", v)


def set_node(i: int) -> tuple[str, int]:
    return ("set", i)


@dataclass(frozen=True)
class DominationGraph:
    copies: tuple[int, ...]
    set_members: tuple[frozenset[int], ...]
    set_colors: tuple[int, ...]
    h: int

    @cached_property
    def adjacency(self) -> dict[Hashable, set[Hashable]]:
        adj: dict[Hashable, set[Hashable]] = {V_STAR: {U_STAR}, U_STAR: {V_STAR}}
        for v in self.copies:
            adj[copy_node(v)] = {V_STAR}
            adj[V_STAR].add(copy_node(v))
        for i, members in enumerate(self.set_members):
            adj[set_node(i)] = set()
            for v in members:
                adj[set_node(i)].add(copy_node(v))
                adj[copy_node(v)].add(set_node(i))
        return adj

    def set_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(i for kind, i in self.adjacency[copy_node(v)] if kind == "set")

    def check(self) -> None:
        adj = self.adjacency
        left = {V_STAR} | {set_node(i) for i in range(len(self.set_members))}
        for x, nbrs in adj.items():
            for y in nbrs:
                assert (x in left) != (y in left), f"edge {x}-{y} breaks bipartiteness"
        for v in self.copies:
            assert len(adj[copy_node(v)]) <= self.h + 1, f"copy of {v} has degree above h + 1"
            colors = [self.set_colors[i] for i in self.set_neighbors(v)]
            assert len(colors) == len(set(colors)), f"copy of {v} meets two sets of one rep"
        for i in range(len(self.set_members)):
            assert adj[set_node(i)], f"set-vertex {i} has no copy neighbor"
        assert degeneracy(adj) <= self.h + 1


def degeneracy(adjacency: Mapping[Hashable, Iterable[Hashable]]) -> int:
    """Largest minimum degree met while repeatedly deleting a minimum-degree vertex."""
    adj = {v: set(nbrs) for v, nbrs in adjacency.items()}
    best = 0
    while adj:
        v = min(adj, key=lambda x: (len(adj[x]), repr(x)))
        best = max(best, len(adj[v]))
        for w in adj.pop(v):
            if w != v:
                adj[w].discard(v)
    return best


def build_domination_graph(g: EdgeColoredGraph, reps: Sequence[CompactRepresentation]) -> DominationGraph:
    """Auxiliary domination graph for one representation per color (``reps[i]`` for color ``i + 1``)."""
    members, colors = [], []
    for c, rep in enumerate(reps, start=1):
        for s in rep:
            if not s <= g.vertices:
                raise ValueError(f"rep set {sorted(s)} mentions unknown vertices")
            members.append(frozenset(s))
            colors.append(c)
    h = max(g.h, len(reps))
    dg = DominationGraph(tuple(sorted(g.vertices)), tuple(members), tuple(colors), h)
    dg.check()
    return dg


def dominating_set_at_most(graph: DominationGraph | Mapping[Hashable, Iterable[Hashable]], limit: int):
    """A dominating set of at most ``limit`` vertices, or ``None``.

    Exact branching: some member of the closed neighborhood of a least-degree
    undominated vertex must be picked.
    """
    adj = graph.adjacency if isinstance(graph, DominationGraph) else graph
    closed = {v: frozenset({v, *nbrs}) for v, nbrs in adj.items()}
    order = {v: i for i, v in enumerate(sorted(adj, key=repr))}
    reach = max((len(c) for c in closed.values()), default=0)

    def search(chosen: list, undominated: frozenset, left: int):
        if not undominated:
            return chosen
        if left == 0 or left * reach < len(undominated):
            return None
        u = min(undominated, key=lambda x: (len(closed[x]), order[x]))
        for w in sorted(closed[u], key=lambda x: (-len(closed[x] & undominated), order[x])):
            found = search(chosen + [w], undominated - closed[w], left - 1)
            if found is not None:
                return found
        return None

    result = search([], frozenset(adj), limit)
    return None if result is None else frozenset(result)


def is_dominating(adjacency: Mapping[Hashable, Iterable[Hashable]], chosen: Iterable[Hashable]) -> bool:
    covered = set()
    for v in chosen:
        covered.add(v)
        covered.update(adjacency[v])
    return covered >= set(adjacency)


def extract_mfvs_from_dominating(dg: DominationGraph, dominating: Iterable[Hashable]) -> frozenset[int]:
    """Graph vertices whose copies dominate every set-vertex, read off a dominating set."""
    dom = set(dominating)
    if not is_dominating(dg.adjacency, dom):
        raise ValueError("given vertex set does not dominate the auxiliary graph")
    if U_STAR in dom:
        dom.discard(U_STAR)
        dom.add(V_STAR)
    picked = set()
    for node in dom:
        kind, key = node
        if kind == "copy":
            picked.add(key)
        elif kind == "set":
            picked.add(min(dg.set_members[key]))
    result = frozenset(picked)
    for s in dg.set_members:
        assert result & s, "extracted set misses a representation set"
    return result


def _rep_tuples(g: EdgeColoredGraph, k: int):
    per_color = [enumerate_fvs_compact_reps(g, k, c) for c in range(1, g.h + 1)]
    return product(*per_color)


def solve_mfvs(g: EdgeColoredGraph, k: int) -> frozenset[int] | None:
    """A vertex set of size at most ``k`` meeting every monochromatic cycle, or ``None``."""
    if k < 0:
        return None
    for reps in _rep_tuples(g, k):
        dg = build_domination_graph(g, reps)
        dom = dominating_set_at_most(dg, k + 1)
        if dom is None:
            continue
        sol = extract_mfvs_from_dominating(dg, dom)
        assert len(sol) <= k and is_solution(g, sol)
        return sol
    return None


def copy_classes(dg: DominationGraph) -> dict[frozenset[int], tuple[int, ...]]:
    """Group copy-vertices by their set-vertex neighborhood, dropping those with none."""
    classes: dict[frozenset[int], list[int]] = {}
    for v in dg.copies:
        nbhd = dg.set_neighbors(v)
        if nbhd:
            classes.setdefault(nbhd, []).append(v)
    return {key: tuple(vs) for key, vs in classes.items()}


def minimal_class_covers(dg: DominationGraph, k: int) -> list[tuple[frozenset[int], ...]]:
    """Inclusion-minimal choices of at most ``k`` copy classes dominating all set-vertices."""
    classes = sorted(copy_classes(dg), key=sorted)
    target = frozenset(range(len(dg.set_members)))
    found: list[tuple[frozenset[int], ...]] = []
    for size in range(min(k, len(classes)) + 1):
        for combo in combinations(classes, size):
            if any(set(f) <= set(combo) for f in found):
                continue
            if frozenset().union(*combo) == target:
                found.append(combo)
    return found


def enumerate_minimal_mfvs(g: EdgeColoredGraph, k: int) -> list[frozenset[int]]:
    """All inclusion-minimal vertex sets of size at most ``k`` meeting every monochromatic cycle."""
    if k < 0:
        return []
    found: set[frozenset[int]] = set()
    rejected = 0
    for reps in _rep_tuples(g, k):
        dg = build_domination_graph(g, reps)
        classes = copy_classes(dg)
        for cover in minimal_class_covers(dg, k):
            for pick in product(*(classes[key] for key in cover)):
                cand = frozenset(pick)
                if cand in found:
                    continue
                if is_minimal_solution(g, cand):
                    found.add(cand)
                else:
                    rejected += 1
    if rejected:
        log.debug("class-cover expansion produced %d non-minimal sets", rejected)
    return sorted(found, key=lambda s: (len(s), sorted(s)))
