"""Minimal feedback vertex sets of one color class, grouped into compact representations.

A compact representation is a sequence of pairwise disjoint vertex sets; it
stands for every set that picks exactly one vertex from each member set.
Vertices on a common chain of degree-2 vertices lie on exactly the same cycles,
so a chain can be treated as one vertex and expanded back at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator

from .graph import EdgeColoredGraph


@dataclass(frozen=True)
class CompactRepresentation:
    sets: tuple[frozenset[int], ...] = ()

    def __post_init__(self) -> None:
        sets = tuple(sorted((frozenset(s) for s in self.sets), key=lambda s: sorted(s)))
        seen: set[int] = set()
        for s in sets:
            if not s:
                raise ValueError("compact representation sets must be nonempty")
            if s & seen:
                raise ValueError(f"compact representation sets overlap: {sets}")
            seen |= s
        object.__setattr__(self, "sets", sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.sets)

    def solutions(self) -> Iterator[frozenset[int]]:
        for pick in product(*(sorted(s) for s in self.sets)):
            yield frozenset(pick)

    def count(self) -> int:
        total = 1
        for s in self.sets:
            total *= len(s)
        return total

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(s)) for s in self.sets)


def represented_solutions(rep: CompactRepresentation | Iterable[Iterable[int]]) -> set[frozenset[int]]:
    if not isinstance(rep, CompactRepresentation):
        rep = CompactRepresentation(tuple(frozenset(s) for s in rep))
    return set(rep.solutions())


def _single_color(g: EdgeColoredGraph, color: int) -> EdgeColoredGraph:
    return g if g.h == 1 and color == 1 else g.color_class(color)


def enumerate_minimal_fvs(g: EdgeColoredGraph, k: int, color: int = 1) -> list[frozenset[int]]:
    """Exact inclusion-minimal feedback vertex sets of size <= k of one color class."""
    g = _single_color(g, color)
    found: list[frozenset[int]] = []
    verts = sorted(g.vertices)
    for size in range(min(k, len(verts)) + 1):
        for combo in combinations(verts, size):
            cand = frozenset(combo)
            if any(f <= cand for f in found):
                continue
            if g.delete_vertices(cand).is_acyclic(1):
                found.append(cand)
    for f in found:
        assert g.delete_vertices(f).is_acyclic(1)
        assert all(not g.delete_vertices(f - {v}).is_acyclic(1) for v in f)
    return found


def compress_chains(g: EdgeColoredGraph) -> tuple[EdgeColoredGraph, dict[int, frozenset[int]]]:
    """Strip degree-0/1 vertices and merge each degree-2 chain into one vertex.

    ``g`` must be single-colored. Returns the reduced multigraph and, for each
    surviving vertex, the original vertices it stands for.
    """
    assert g.h == 1
    pending = [v for v in g.vertices if g.degree(v, 1) <= 1]
    while pending:
        v = pending.pop()
        if v not in g.vertices or g.degree(v, 1) > 1:
            continue
        nbrs = g.neighbors(v, 1)
        g = g.delete_vertices({v})
        pending.extend(w for w in nbrs if w != v)

    represents = {v: frozenset({v}) for v in g.vertices}
    two = {v for v in g.vertices if g.degree(v, 1) == 2 and not g.has_self_loop(v)}
    seen: set[int] = set()
    for start in sorted(two):
        if start in seen:
            continue
        chain, stack = [], [start]
        seen.add(start)
        while stack:
            x = stack.pop()
            chain.append(x)
            for y in g.neighbors(x, 1):
                if y in two and y not in seen:
                    seen.add(y)
                    stack.append(y)
        keep = min(chain)
        for x in chain:
            if x != keep:
                g = g.dissolve(x)
        represents[keep] = frozenset(chain)
        for x in chain:
            if x != keep:
                del represents[x]
    return g, represents


def enumerate_fvs_compact_reps(g: EdgeColoredGraph, k: int, color: int = 1) -> list[CompactRepresentation]:
    """Compact representations covering every minimal FVS of size <= k of one color class.

    Sound (every represented set is a minimal FVS of size <= k) and complete
    (every such FVS is represented by at least one returned rep); no duplicates.
    """
    g = _single_color(g, color)
    reduced, represents = compress_chains(g)
    reps: dict[tuple, CompactRepresentation] = {}
    for sol in enumerate_minimal_fvs(reduced, k):
        rep = CompactRepresentation(tuple(represents[v] for v in sol))
        reps.setdefault(rep.key(), rep)
    return [reps[key] for key in sorted(reps)]
