"""Reduction rules for enumerating dual feedback vertex sets that avoid a reference set.

An instance carries a *reference set* of vertices that may not be deleted
(plus vertices *excluded* by branching, which behave the same way), the groups
of vertices already *forced* into every solution, and for each surviving free
vertex the original vertices it *represents*. Every rule keeps the following
true: the minimal solutions of the input avoiding the reference set are exactly
the sets obtained by taking a minimal solution ``T`` of the reduced graph over
free vertices, swapping each ``t`` in ``T`` for any member of ``represents[t]``,
and adding one member of every forced group.

Basic rules, to a fixpoint:

* a free vertex without edges is dropped;
* an edge whose endpoint has degree 1 in its color is dropped;
* a free vertex with two same-color edges into one same-color component of the
  undeletable part is forced (this covers a parallel pair into one undeletable
  vertex);
* a free vertex with a self-loop is forced;
* a monochromatic cycle inside the undeletable part makes the instance infeasible.

Path rules: free vertices whose degrees are all 0 or 2 and which sit on the same
maximal path in every color where they have degree 2 lie on exactly the same
cycles, so all but one of them are dissolved. In the bicolored case this merges
the degree-(2,0) vertices of one blue path, the degree-(0,2) vertices of one
red path, and the common vertices of one blue and one red path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping

from .graph import EdgeColoredGraph, _UnionFind


class Infeasible(Exception):
    """No solution avoids the undeletable vertices of this instance."""


@dataclass(frozen=True)
class ReducedInstance:
    graph: EdgeColoredGraph
    reference_set: frozenset[int] = frozenset()
    # each group contributes exactly one (arbitrary) member to every solution
    forced: tuple[frozenset[int], ...] = ()
    represents: Mapping[int, frozenset[int]] = field(default_factory=dict)
    excluded: frozenset[int] = frozenset()

    @classmethod
    def start(
        cls, g: EdgeColoredGraph, reference_set: Iterable[int] = (), excluded: Iterable[int] = ()
    ) -> ReducedInstance:
        ref = frozenset(reference_set)
        exc = frozenset(excluded)
        if not ref <= g.vertices or not exc <= g.vertices:
            raise ValueError("reference and excluded vertices must belong to the graph")
        if ref & exc:
            raise ValueError("reference and excluded sets overlap")
        return cls(g, ref, (), {}, exc)

    @property
    def fixed(self) -> frozenset[int]:
        """Live vertices that may not be deleted."""
        return self.reference_set | self.excluded

    @property
    def free(self) -> frozenset[int]:
        return self.graph.vertices - self.fixed

    @property
    def forced_vertices(self) -> frozenset[int]:
        return frozenset().union(*self.forced)

    def rep(self, v: int) -> frozenset[int]:
        return self.represents.get(v, frozenset({v}))

    def expand(self, solution: Iterable[int]) -> set[frozenset[int]]:
        """Original-vertex solutions corresponding to a solution of the reduced graph."""
        groups = [sorted(grp) for grp in self.forced]
        groups.extend(sorted(self.rep(v)) for v in sorted(solution))
        return {frozenset(pick) for pick in product(*groups)}

    def check(self) -> None:
        """Assert the bookkeeping invariants."""
        fixed = self.fixed
        assert fixed <= self.graph.vertices, "undeletable vertices must stay live"
        seen = set(self.reference_set) | set(self.excluded)
        for grp in [*self.forced, *(self.rep(v) for v in self.free)]:
            assert grp and not grp & seen, f"group {set(grp)} overlaps earlier groups"
            seen |= grp
        assert not set(self.represents) & fixed
        assert set(self.represents) <= self.graph.vertices

    def replace(self, **changes) -> ReducedInstance:
        data = dict(
            graph=self.graph,
            reference_set=self.reference_set,
            forced=self.forced,
            represents=self.represents,
            excluded=self.excluded,
        )
        data.update(changes)
        return ReducedInstance(**data)


@dataclass(frozen=True)
class MonochromaticPath:
    vertices: tuple[int, ...]
    color: int
    cyclic: bool = False


@dataclass(frozen=True)
class VertexClassification:
    high: tuple[frozenset[int], ...]
    low: frozenset[int]
    path_counts: tuple[int, ...]

    @property
    def high_blue(self) -> frozenset[int]:
        return self.high[0]

    @property
    def high_red(self) -> frozenset[int]:
        return self.high[1]

    @property
    def m_b(self) -> int:
        return self.path_counts[0]

    @property
    def m_r(self) -> int:
        return self.path_counts[1]

    @property
    def high_any(self) -> frozenset[int]:
        return frozenset().union(*self.high)


def _forcing_candidates(g: EdgeColoredGraph, fixed: frozenset[int]) -> set[int]:
    forced = set()
    for c in range(1, g.h + 1):
        uf = _UnionFind()
        for u, v, col in g.edges:
            if col == c and u in fixed and v in fixed and not uf.union(u, v):
                raise Infeasible(f"undeletable vertices span a color-{c} cycle through {u}, {v}")
        for v in g.vertices - fixed:
            hits: set[int] = set()
            for w in g.neighbors(v, c):
                if w == v:
                    forced.add(v)
                    break
                if w in fixed:
                    root = uf.find(w)
                    if root in hits:
                        forced.add(v)
                        break
                    hits.add(root)
    return forced


def apply_basic_rules(inst: ReducedInstance) -> ReducedInstance:
    """Apply the degree-0, degree-1 and forcing rules until none applies.

    Raises :class:`Infeasible` when the undeletable vertices contain a
    monochromatic cycle.
    """
    g = inst.graph
    fixed = inst.fixed
    forced = list(inst.forced)
    represents = dict(inst.represents)
    while True:
        dangling = {
            eid
            for v in g.vertices
            for c in range(1, g.h + 1)
            if g.degree(v, c) == 1
            for _, eid in g.incident(v, c)
        }
        if dangling:
            g = g.without_edges(dangling)
            continue
        isolated = {v for v in g.vertices - fixed if not any(g.color_degree(v))}
        if isolated:
            g = g.delete_vertices(isolated)
            for v in isolated:
                represents.pop(v, None)
            continue
        hit = _forcing_candidates(g, fixed)
        if hit:
            for v in sorted(hit):
                forced.append(represents.pop(v, frozenset({v})))
            g = g.delete_vertices(hit)
            continue
        break
    return inst.replace(graph=g, forced=tuple(forced), represents=represents)


def maximal_monochromatic_paths(inst: ReducedInstance, c: int) -> list[MonochromaticPath]:
    """Maximal runs of free vertices with color-``c`` degree exactly 2.

    A run closing on itself without touching an undeletable or higher-degree
    vertex is returned with ``cyclic=True``. Runs are listed by smallest member.
    """
    g = inst.graph
    run_vertices = {
        v for v in inst.free if g.degree(v, c) == 2 and v not in g.neighbors(v, c)
    }
    paths = []
    seen: set[int] = set()
    for start in sorted(run_vertices):
        if start in seen:
            continue
        comp, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x, c):
                if y in run_vertices and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        ends = [x for x in comp if sum(y in comp for y in g.neighbors(x, c)) < 2]
        cyclic = not ends
        first = min(ends) if ends else min(comp)
        order, used_edges = [first], set()
        while True:
            x = order[-1]
            step = next(
                ((y, eid) for y, eid in g.incident(x, c)
                 if y in comp and eid not in used_edges and y not in order),
                None,
            )
            if step is None:
                break
            used_edges.add(step[1])
            order.append(step[0])
        assert len(order) == len(comp), f"run {comp} is not a simple path or cycle"
        paths.append(MonochromaticPath(tuple(order), c, cyclic))
    return paths


def classify_vertices(inst: ReducedInstance) -> VertexClassification:
    g = inst.graph
    free = inst.free
    high = tuple(frozenset(v for v in free if g.degree(v, c) > 2) for c in range(1, g.h + 1))
    low = free - frozenset().union(*high)
    counts = tuple(len(maximal_monochromatic_paths(inst, c)) for c in range(1, g.h + 1))
    return VertexClassification(high, low, counts)


def _mergeable_group(inst: ReducedInstance) -> list[int] | None:
    g = inst.graph
    path_of: list[dict[int, int]] = []
    for c in range(1, g.h + 1):
        path_of.append({v: i for i, p in enumerate(maximal_monochromatic_paths(inst, c)) for v in p.vertices})
    groups: dict[tuple, list[int]] = {}
    for v in sorted(inst.free):
        degs = g.color_degree(v)
        if any(d not in (0, 2) for d in degs) or not any(degs):
            continue
        sig = tuple(path_of[c].get(v) if degs[c] == 2 else None for c in range(g.h))
        if None in (path_of[c].get(v) for c in range(g.h) if degs[c] == 2):
            continue
        groups.setdefault(sig, []).append(v)
    for sig in sorted(groups, key=lambda s: tuple((-1 if x is None else x) for x in s)):
        if len(groups[sig]) >= 2:
            return groups[sig]
    return None


def apply_path_rules(inst: ReducedInstance) -> ReducedInstance:
    """Merge interchangeable low-degree vertices, re-running the basic rules after each merge."""
    inst = apply_basic_rules(inst)
    while True:
        group = _mergeable_group(inst)
        if group is None:
            return inst
        keep = min(group)
        g = inst.graph
        represents = dict(inst.represents)
        merged = frozenset().union(*(inst.rep(v) for v in group))
        for v in group:
            if v != keep:
                g = g.dissolve(v)
                represents.pop(v, None)
        represents[keep] = merged
        inst = apply_basic_rules(inst.replace(graph=g, represents=represents))


def reduce_instance(
    g: EdgeColoredGraph, reference_set: Iterable[int] = (), excluded: Iterable[int] = ()
) -> ReducedInstance:
    """Full pipeline: basic rules and path rules to a common fixpoint."""
    return apply_path_rules(ReducedInstance.start(g, reference_set, excluded))


def low_degree_bound_holds(inst: ReducedInstance) -> bool:
    """Bicolored low-vertex bound ``|V_<=2| <= (m_b + 1) * (m_r + 1)``."""
    cls = classify_vertices(inst)
    bound = 1
    for m in cls.path_counts:
        bound *= m + 1
    return len(cls.low) <= bound


def format_reduced(inst: ReducedInstance) -> str:
    from .formats import encode_instance

    parts = []
    for grp in inst.forced:
        parts.append(str(next(iter(grp))) if len(grp) == 1 else "{" + ",".join(map(str, sorted(grp))) + "}")
    lines = [encode_instance(inst.graph).rstrip("\n")]
    lines.append("reference: " + " ".join(map(str, sorted(inst.reference_set))))
    lines.append("forced: " + " ".join(parts))
    for v in sorted(inst.free):
        lines.append(f"rep {v} : " + " ".join(map(str, sorted(inst.rep(v)))))
    return "\n".join(lines) + "\n"
