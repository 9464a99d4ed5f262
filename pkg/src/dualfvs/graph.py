"""Edge-colored undirected multigraphs.

Vertices are positive integer labels that never get renumbered, so a vertex id
seen in a reduced or branched graph always names the same vertex of the input.
Self-loops and parallel edges are allowed; both count as monochromatic cycles.
Color 1 is blue and color 2 is red in the bicolored case.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

BLUE = 1
RED = 2


class Edge(NamedTuple):
    u: int
    v: int
    color: int


class Cycle(NamedTuple):
    """A monochromatic cycle: vertices in order plus the edge indices joining them.

    ``edges[i]`` joins ``vertices[i]`` and ``vertices[(i + 1) % len(vertices)]``.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    color: int


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while x != root:
            parent[x], x = root, parent.get(x, x)
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


@dataclass(frozen=True)
class EdgeColoredGraph:
    """Immutable undirected multigraph with ``h`` edge colors.

    Edges are stored normalized (``u <= v``) and sorted, so two graphs with the
    same vertex set and the same edge multiset compare equal.
    """

    vertices: frozenset[int]
    edges: tuple[Edge, ...] = ()
    h: int = 2

    def __post_init__(self) -> None:
        if self.h < 1:
            raise ValueError(f"color count must be >= 1, got {self.h}")
        verts = frozenset(self.vertices)
        for v in verts:
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"vertex ids must be positive integers, got {v!r}")
        norm = []
        for e in self.edges:
            u, v, c = e
            if u not in verts or v not in verts:
                raise ValueError(f"edge {tuple(e)} has an endpoint that is not a vertex")
            if not 1 <= c <= self.h:
                raise ValueError(f"edge {tuple(e)} has color outside 1..{self.h}")
            norm.append(Edge(min(u, v), max(u, v), c))
        norm.sort()
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(
        cls, edges: Iterable[tuple[int, int, int]], h: int = 2, vertices: Iterable[int] = ()
    ) -> EdgeColoredGraph:
        """Build a graph whose vertex set is ``vertices`` plus every edge endpoint."""
        edges = [Edge(*e) for e in edges]
        verts = set(vertices)
        for u, v, _ in edges:
            verts.update((u, v))
        return cls(frozenset(verts), tuple(edges), h)

    # -- adjacency -----------------------------------------------------------

    @cached_property
    def _incidence(self) -> dict[int, list[list[tuple[int, int]]]]:
        # vertex -> per color list of (neighbor, edge index); a self-loop appears twice
        inc = {v: [[] for _ in range(self.h)] for v in self.vertices}
        for i, (u, v, c) in enumerate(self.edges):
            inc[u][c - 1].append((v, i))
            inc[v][c - 1].append((u, i))
        return inc

    def _check_vertex(self, v: int) -> None:
        if v not in self.vertices:
            raise KeyError(f"unknown vertex {v}")

    def _check_color(self, c: int) -> None:
        if not 1 <= c <= self.h:
            raise ValueError(f"color {c} outside 1..{self.h}")

    def incident(self, v: int, c: int) -> list[tuple[int, int]]:
        """``(neighbor, edge index)`` pairs of color-``c`` edges at ``v``."""
        self._check_vertex(v)
        self._check_color(c)
        return list(self._incidence[v][c - 1])

    def neighbors(self, v: int, c: int) -> list[int]:
        """Color-``c`` neighbors of ``v`` with multiplicity (a self-loop lists ``v`` twice)."""
        return [w for w, _ in self.incident(v, c)]

    def degree(self, v: int, c: int) -> int:
        self._check_vertex(v)
        self._check_color(c)
        return len(self._incidence[v][c - 1])

    def color_degree(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(len(lst) for lst in self._incidence[v])

    def has_self_loop(self, v: int) -> bool:
        self._check_vertex(v)
        return any(w == v for lst in self._incidence[v] for w, _ in lst)

    def color_class(self, c: int) -> EdgeColoredGraph:
        """The color-``c`` subgraph as a single-color graph on all vertices."""
        self._check_color(c)
        return EdgeColoredGraph(
            self.vertices, tuple(Edge(u, v, 1) for u, v, col in self.edges if col == c), 1
        )

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    # -- cycles --------------------------------------------------------------

    def is_acyclic(self, c: int) -> bool:
        self._check_color(c)
        uf = _UnionFind()
        for u, v, col in self.edges:
            if col == c and not uf.union(u, v):
                return False
        return True

    def is_fully_acyclic(self) -> bool:
        return all(self.is_acyclic(c) for c in range(1, self.h + 1))

    def find_monochromatic_cycle(self, c: int) -> Cycle | None:
        self._check_color(c)
        uf = _UnionFind()
        forest: dict[int, list[tuple[int, int]]] = {}
        for i, (u, v, col) in enumerate(self.edges):
            if col != c:
                continue
            if uf.union(u, v):
                forest.setdefault(u, []).append((v, i))
                forest.setdefault(v, []).append((u, i))
                continue
            if u == v:
                return Cycle((u,), (i,), c)
            path, path_edges = _forest_path(forest, u, v)
            cycle = Cycle(tuple(path), tuple(path_edges) + (i,), c)
            self._check_cycle(cycle)
            return cycle
        return None

    def _check_cycle(self, cycle: Cycle) -> None:
        verts, eids, c = cycle
        if len(verts) != len(eids) or len(set(eids)) != len(eids) or len(set(verts)) != len(verts):
            raise AssertionError(f"malformed cycle {cycle}")
        for i, eid in enumerate(eids):
            a, b = verts[i], verts[(i + 1) % len(verts)]
            e = self.edges[eid]
            if e.color != c or {e.u, e.v} != {a, b}:
                raise AssertionError(f"cycle {cycle} is not supported by edge {e}")

    # -- derived graphs ------------------------------------------------------

    def delete_vertices(self, removed: Iterable[int]) -> EdgeColoredGraph:
        removed = frozenset(removed)
        if not removed & self.vertices:
            return self
        keep = self.vertices - removed
        edges = tuple(e for e in self.edges if e.u in keep and e.v in keep)
        return EdgeColoredGraph(keep, edges, self.h)

    def without_edges(self, indices: Iterable[int]) -> EdgeColoredGraph:
        drop = set(indices)
        edges = tuple(e for i, e in enumerate(self.edges) if i not in drop)
        return EdgeColoredGraph(self.vertices, edges, self.h)

    def dissolve(self, v: int) -> EdgeColoredGraph:
        """Remove ``v`` and join its two neighbors in every color where it has degree 2.

        ``v`` must have degree 0 or 2 in each color, degree 2 in at least one,
        and no self-loop.
        """
        self._check_vertex(v)
        if self.has_self_loop(v):
            raise ValueError(f"cannot dissolve vertex {v}: it carries a self-loop")
        degs = self.color_degree(v)
        if any(d not in (0, 2) for d in degs) or not any(degs):
            raise ValueError(f"cannot dissolve vertex {v} with color degrees {degs}")
        new_edges = []
        for c in range(1, self.h + 1):
            nbrs = self.neighbors(v, c)
            if nbrs:
                new_edges.append(Edge(nbrs[0], nbrs[1], c))
        rest = tuple(e for e in self.edges if v not in (e.u, e.v))
        return EdgeColoredGraph(self.vertices - {v}, rest + tuple(new_edges), self.h)

    def dissolve_degree2(self, v: int, c: int) -> EdgeColoredGraph:
        """Dissolve ``v``, which must have color-``c`` degree 2 and no other edges."""
        self._check_color(c)
        degs = self.color_degree(v)
        if degs[c - 1] != 2 or sum(degs) != 2:
            raise ValueError(f"vertex {v} has color degrees {degs}, expected 2 in color {c} only")
        return self.dissolve(v)


def _forest_path(forest: dict[int, list[tuple[int, int]]], src: int, dst: int) -> tuple[list[int], list[int]]:
    prev: dict[int, tuple[int, int] | None] = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            break
        for y, eid in forest.get(x, ()):
            if y not in prev:
                prev[y] = (x, eid)
                queue.append(y)
    verts, eids = [dst], []
    while prev[verts[-1]] is not None:
        x, eid = prev[verts[-1]]
        verts.append(x)
        eids.append(eid)
    verts.reverse()
    eids.reverse()
    return verts, eids


def color_degree(g: EdgeColoredGraph, v: int) -> tuple[int, ...]:
    return g.color_degree(v)


def is_acyclic(g: EdgeColoredGraph, c: int) -> bool:
    return g.is_acyclic(c)


def find_monochromatic_cycle(g: EdgeColoredGraph, c: int) -> Cycle | None:
    return g.find_monochromatic_cycle(c)


def delete_vertices(g: EdgeColoredGraph, removed: Iterable[int]) -> EdgeColoredGraph:
    return g.delete_vertices(removed)


def dissolve_degree2(g: EdgeColoredGraph, v: int, c: int) -> EdgeColoredGraph:
    return g.dissolve_degree2(v, c)


def is_solution(g: EdgeColoredGraph, solution: Iterable[int]) -> bool:
    """True when deleting ``solution`` leaves every color class acyclic."""
    return g.delete_vertices(solution).is_fully_acyclic()


def is_minimal_solution(g: EdgeColoredGraph, solution: Iterable[int]) -> bool:
    sol = frozenset(solution)
    if not is_solution(g, sol):
        return False
    return not any(is_solution(g, sol - {v}) for v in sol)


@dataclass(frozen=True)
class Digraph:
    vertices: frozenset[int]
    arcs: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        verts = frozenset(self.vertices)
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if u not in verts or v not in verts:
                raise ValueError(f"arc ({u}, {v}) has an endpoint that is not a vertex")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arcs", arcs)


def digraph_to_alternating(d: Digraph) -> tuple[EdgeColoredGraph, dict[tuple[int, int], int]]:
    """Replace every arc ``u -> v`` by a blue edge ``u-x`` and a red edge ``x-v``.

    Midpoints get fresh ids above the largest vertex id, assigned in sorted arc
    order. Returns the bicolored graph and the arc -> midpoint mapping.
    """
    nxt = max(d.vertices, default=0) + 1
    midpoints = {}
    edges = []
    for u, v in sorted(d.arcs):
        x = nxt
        nxt += 1
        midpoints[(u, v)] = x
        edges.append(Edge(u, x, BLUE))
        edges.append(Edge(x, v, RED))
    g = EdgeColoredGraph(d.vertices | frozenset(midpoints.values()), tuple(edges), 2)
    return g, midpoints
