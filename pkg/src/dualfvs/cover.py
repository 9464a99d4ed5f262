"""Cover graphs between a blue and a red compact representation.

Each set of either representation becomes a set-vertex; a blue and a red
set-vertex are joined when their sets intersect, and the edge remembers the
intersection plus its smallest member as witness. Because the sets inside one
representation are disjoint, a vertex hits at most one blue and one red set,
so a smallest vertex set hitting every set is a minimum edge cover of the
non-isolated set-vertices plus one member per isolated set-vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .compact import CompactRepresentation

BLUE_SIDE = "blue"
RED_SIDE = "red"


class SetVertex(NamedTuple):
    side: str
    index: int
    members: frozenset[int]


class CoverEdge(NamedTuple):
    a: int  # blue set-vertex id
    b: int  # red set-vertex id
    witness: int
    shared: frozenset[int]


class CoverElement(NamedTuple):
    """A set-vertex (``kind == "vertex"``) or an edge (``kind == "edge"``) of a cover graph."""

    kind: str
    index: int


@dataclass(frozen=True)
class CoverGraph:
    set_vertices: tuple[SetVertex, ...]
    edges: tuple[CoverEdge, ...]

    def __post_init__(self) -> None:
        seen = set()
        for e in self.edges:
            a, b = self.set_vertices[e.a], self.set_vertices[e.b]
            assert a.side == BLUE_SIDE and b.side == RED_SIDE, "cover edges must join blue to red"
            assert (e.a, e.b) not in seen, "parallel cover edges must be merged"
            assert e.witness in a.members and e.witness in b.members
            seen.add((e.a, e.b))

    def incident(self) -> dict[int, list[int]]:
        inc: dict[int, list[int]] = {i: [] for i in range(len(self.set_vertices))}
        for j, e in enumerate(self.edges):
            inc[e.a].append(j)
            inc[e.b].append(j)
        return inc

    def isolated(self) -> list[int]:
        return [i for i, lst in self.incident().items() if not lst]

    def non_isolated(self) -> list[int]:
        return [i for i, lst in self.incident().items() if lst]

    def elements(self) -> list[CoverElement]:
        return [CoverElement("vertex", i) for i in range(len(self.set_vertices))] + [
            CoverElement("edge", j) for j in range(len(self.edges))
        ]

    def covered_by(self, element: CoverElement) -> frozenset[int]:
        if element.kind == "vertex":
            return frozenset({element.index})
        e = self.edges[element.index]
        return frozenset({e.a, e.b})

    def choices(self, element: CoverElement) -> frozenset[int]:
        """Original vertices that realize ``element`` in a hitting set."""
        if element.kind == "vertex":
            return self.set_vertices[element.index].members
        return self.edges[element.index].shared


def build_cover_graph(blue: CompactRepresentation, red: CompactRepresentation) -> CoverGraph:
    verts = [SetVertex(BLUE_SIDE, i, s) for i, s in enumerate(blue)]
    offset = len(verts)
    verts += [SetVertex(RED_SIDE, j, s) for j, s in enumerate(red)]
    edges = []
    for i, sb in enumerate(blue):
        for j, sr in enumerate(red):
            shared = sb & sr
            if shared:
                edges.append(CoverEdge(i, offset + j, min(shared), shared))
    return CoverGraph(tuple(verts), tuple(edges))


def max_matching(h: CoverGraph) -> list[int]:
    """Maximum matching (edge indices) by repeated augmenting-path search."""
    inc = h.incident()
    match: dict[int, int] = {}  # set-vertex -> matched edge index

    def other(j: int, x: int) -> int:
        e = h.edges[j]
        return e.b if x == e.a else e.a

    def augment(x: int, visited: set[int]) -> bool:
        for j in inc[x]:
            y = other(j, x)
            if y in visited:
                continue
            visited.add(y)
            if y not in match or augment(other(match[y], y), visited):
                match[x] = j
                match[y] = j
                return True
        return False

    blues = [i for i, sv in enumerate(h.set_vertices) if sv.side == BLUE_SIDE]
    for x in blues:
        if x not in match:
            augment(x, set())
    matching = sorted({match[x] for x in blues if x in match})
    assert not _augmenting_path_exists(h, matching), "matching is not maximum"
    return matching


def _augmenting_path_exists(h: CoverGraph, matching: list[int]) -> bool:
    # alternating BFS from every free blue vertex; reaching a free red vertex means augmentable
    inc = h.incident()
    mate: dict[int, int] = {}
    for j in matching:
        e = h.edges[j]
        mate[e.a], mate[e.b] = e.b, e.a
    frontier = [i for i, sv in enumerate(h.set_vertices) if sv.side == BLUE_SIDE and i not in mate]
    seen = set(frontier)
    while frontier:
        nxt = []
        for x in frontier:
            for j in inc[x]:
                y = h.edges[j].b
                if y in seen:
                    continue
                seen.add(y)
                if y not in mate:
                    return True
                z = mate[y]
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return False


def min_edge_cover(h: CoverGraph) -> list[int]:
    """Minimum set of edges touching every non-isolated set-vertex.

    Take a maximum matching, then add the lowest-index incident edge of every
    vertex it leaves uncovered.
    """
    inc = h.incident()
    cover = list(max_matching(h))
    covered = {x for j in cover for x in (h.edges[j].a, h.edges[j].b)}
    for x, lst in inc.items():
        if lst and x not in covered:
            j = lst[0]
            cover.append(j)
            covered.update((h.edges[j].a, h.edges[j].b))
    return sorted(cover)


def min_hitting_from_reps(blue: CompactRepresentation, red: CompactRepresentation) -> frozenset[int]:
    """Smallest vertex set meeting every set of both representations."""
    h = build_cover_graph(blue, red)
    chosen = {h.edges[j].witness for j in min_edge_cover(h)}
    chosen.update(min(h.set_vertices[i].members) for i in h.isolated())
    result = frozenset(chosen)
    for s in (*blue, *red):
        assert result & s
    return result


def enumerate_minimal_covers(h: CoverGraph, budget: int) -> list[frozenset[CoverElement]]:
    """Inclusion-minimal sets of at most ``budget`` elements covering every set-vertex."""
    elements = h.elements()
    target = frozenset(range(len(h.set_vertices)))
    reach = {el: h.covered_by(el) for el in elements}
    found: list[frozenset[CoverElement]] = []
    for size in range(min(budget, len(elements)) + 1):
        for combo in combinations(elements, size):
            cand = frozenset(combo)
            if any(f <= cand for f in found):
                continue
            covered = frozenset().union(*(reach[el] for el in combo))
            if covered == target:
                found.append(cand)
    return found
