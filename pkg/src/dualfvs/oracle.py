"""Brute-force reference answers. Slow on purpose; used as ground truth in tests."""

from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable, Mapping

from .graph import EdgeColoredGraph

MAX_ORACLE_VERTICES = 16
MAX_ORACLE_BUDGET = 6
MAX_COVER_EDGES = 20
MAX_DOMINATION_VERTICES = 14


class OracleCapExceeded(ValueError):
    pass


def _forest_by_counting(vertices: set[int], edges: list[tuple[int, int]]) -> bool:
    # a multigraph is a forest iff |E| = |V| - #components and it has no loop
    if any(u == v for u, v in edges):
        return False
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen: set[int] = set()
    components = 0
    for s in vertices:
        if s in seen:
            continue
        components += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return len(edges) == len(vertices) - components


def hits_all_monochromatic_cycles(g: EdgeColoredGraph, solution: Iterable[int]) -> bool:
    removed = set(solution)
    keep = set(g.vertices) - removed
    for c in range(1, g.h + 1):
        edges = [(u, v) for u, v, col in g.edges if col == c and u in keep and v in keep]
        if not _forest_by_counting(keep, edges):
            return False
    return True


def oracle_minimal_mfvs_family(g: EdgeColoredGraph, k: int) -> list[frozenset[int]]:
    """All inclusion-minimal vertex sets of size <= k hitting every monochromatic cycle.

    Subsets are scanned by ascending size; a subset containing an earlier
    solution is skipped, so whatever survives the validity test is minimal.
    """
    if g.n > MAX_ORACLE_VERTICES or k > MAX_ORACLE_BUDGET:
        raise OracleCapExceeded(
            f"oracle capped at n <= {MAX_ORACLE_VERTICES}, k <= {MAX_ORACLE_BUDGET} (got n={g.n}, k={k})"
        )
    found: list[frozenset[int]] = []
    verts = sorted(g.vertices)
    for size in range(0, min(k, len(verts)) + 1):
        for combo in combinations(verts, size):
            cand = frozenset(combo)
            if any(f <= cand for f in found):
                continue
            if hits_all_monochromatic_cycles(g, cand):
                found.append(cand)
    return found


def oracle_min_edge_cover(
    vertices: Iterable[Hashable], edges: Iterable[tuple[Hashable, Hashable]]
) -> list[tuple[Hashable, Hashable]]:
    """A minimum set of edges touching every non-isolated vertex."""
    edges = list(dict.fromkeys(tuple(e) for e in edges))
    if len(edges) > MAX_COVER_EDGES:
        raise OracleCapExceeded(f"edge cover oracle capped at {MAX_COVER_EDGES} edges, got {len(edges)}")
    targets = {x for e in edges for x in e}
    for size in range(len(edges) + 1):
        for combo in combinations(edges, size):
            if {x for e in combo for x in e} == targets:
                return list(combo)
    raise AssertionError("unreachable: all edges always cover")


def oracle_min_dominating_set(adjacency: Mapping[Hashable, Iterable[Hashable]]) -> frozenset:
    """A minimum dominating set of an undirected graph given as an adjacency mapping."""
    nodes = list(adjacency)
    if len(nodes) > MAX_DOMINATION_VERTICES:
        raise OracleCapExceeded(
            f"domination oracle capped at {MAX_DOMINATION_VERTICES} vertices, got {len(nodes)}"
        )
    closed = {v: {v, *adjacency[v]} for v in nodes}
    everything = set(nodes)
    for size in range(len(nodes) + 1):
        for combo in combinations(nodes, size):
            covered = set()
            for v in combo:
                covered |= closed[v]
            if covered >= everything:
                return frozenset(combo)
    raise AssertionError("unreachable: the full vertex set dominates")
