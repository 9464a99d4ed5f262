"""Factor-2 feedback vertex set approximation for one color class.

Local-ratio scheme on unit weights: after stripping degree <= 1 vertices,
either pay down a semidisjoint cycle (all but at most one vertex of degree 2)
uniformly, or pay every vertex in proportion to ``degree - 1``. Vertices whose
weight hits zero join the solution; a final reverse pass drops every vertex
that is not needed.
"""

from __future__ import annotations

from fractions import Fraction

from .graph import EdgeColoredGraph


def _strip_low_degree(g: EdgeColoredGraph) -> EdgeColoredGraph:
    pending = [v for v in g.vertices if g.degree(v, 1) <= 1]
    while pending:
        v = pending.pop()
        if v in g.vertices and g.degree(v, 1) <= 1:
            nbrs = g.neighbors(v, 1)
            g = g.delete_vertices({v})
            pending.extend(nbrs)
    return g


def semidisjoint_cycle(g: EdgeColoredGraph) -> list[int] | None:
    """Vertices of a cycle with at most one vertex of degree above 2, if any.

    Assumes every vertex has degree >= 2.
    """
    for v in sorted(g.vertices):
        if v in g.neighbors(v, 1):
            return [v]
    two = {v for v in g.vertices if g.degree(v, 1) == 2}
    seen: set[int] = set()
    for start in sorted(two):
        if start in seen:
            continue
        run, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x, 1):
                if y in two and y not in run:
                    run.add(y)
                    stack.append(y)
        seen |= run
        outside = [y for x in run for y in g.neighbors(x, 1) if y not in run]
        if not outside:
            return sorted(run)
        if len(set(outside)) == 1:
            return sorted(run) + [outside[0]]
    return None


def fvs_2approx(g: EdgeColoredGraph, color: int = 1) -> frozenset[int]:
    base = g if g.h == 1 and color == 1 else g.color_class(color)
    weight = {v: Fraction(1) for v in base.vertices}
    picked: list[int] = []
    cur = base
    while True:
        cur = _strip_low_degree(cur)
        if not cur.vertices:
            break
        cycle = semidisjoint_cycle(cur)
        if cycle is not None:
            gamma = min(weight[v] for v in cycle)
            for v in cycle:
                weight[v] -= gamma
        else:
            gamma = min(weight[v] / (cur.degree(v, 1) - 1) for v in cur.vertices)
            for v in cur.vertices:
                weight[v] -= gamma * (cur.degree(v, 1) - 1)
        zero = sorted(v for v in cur.vertices if weight[v] == 0)
        picked.extend(zero)
        cur = cur.delete_vertices(zero)

    solution = set(picked)
    for v in reversed(picked):
        if base.delete_vertices(solution - {v}).is_acyclic(1):
            solution.discard(v)
    assert base.delete_vertices(solution).is_acyclic(1)
    return frozenset(solution)
