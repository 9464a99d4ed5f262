"""Dual feedback vertex set: decision solver and minimal-solution enumeration.

Three routes are provided:

* :func:`solve_dfvs` pairs a blue and a red compact representation and finds a
  smallest set hitting both through a minimum edge cover;
* :func:`enumerate_dfvs_algoA` lists the minimal covers of every cover graph;
* :func:`enumerate_minimal_dfvs` compresses against a 2-approximate solution
  and enumerates solutions disjoint from it with :func:`enumerate_disjoint_dfvs`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable

from .approx import fvs_2approx
from .compact import enumerate_fvs_compact_reps
from .cover import build_cover_graph, enumerate_minimal_covers, min_hitting_from_reps
from .graph import BLUE, RED, EdgeColoredGraph, is_minimal_solution, is_solution
from .reductions import Infeasible, ReducedInstance, apply_path_rules, classify_vertices, reduce_instance

log = logging.getLogger(__name__)

HIGH_DEGREE_FACTOR = 28
PATH_COUNT_FACTOR = 16


def _require_bicolored(g: EdgeColoredGraph) -> None:
    if g.h != 2:
        raise ValueError(f"expected an edge-bicolored graph (h = 2), got h = {g.h}")


def _sorted_family(family: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    return sorted(set(family), key=lambda s: (len(s), sorted(s)))


def solve_dfvs(g: EdgeColoredGraph, k: int) -> frozenset[int] | None:
    """A dual feedback vertex set of size at most ``k``, or ``None`` if none exists."""
    _require_bicolored(g)
    if k < 0:
        return None
    blue_reps = enumerate_fvs_compact_reps(g, k, BLUE)
    red_reps = enumerate_fvs_compact_reps(g, k, RED)
    for cb in blue_reps:
        for cr in red_reps:
            hitting = min_hitting_from_reps(cb, cr)
            if len(hitting) <= k:
                assert is_solution(g, hitting)
                return hitting
    return None


def enumerate_dfvs_algoA(g: EdgeColoredGraph, k: int) -> list[frozenset[int]]:
    """All inclusion-minimal dual feedback vertex sets of size at most ``k``, via cover graphs."""
    _require_bicolored(g)
    if k < 0:
        return []
    found: set[frozenset[int]] = set()
    rejected = 0
    blue_reps = enumerate_fvs_compact_reps(g, k, BLUE)
    red_reps = enumerate_fvs_compact_reps(g, k, RED)
    for cb in blue_reps:
        for cr in red_reps:
            h = build_cover_graph(cb, cr)
            for cover in enumerate_minimal_covers(h, k):
                choice_sets = [sorted(h.choices(el)) for el in sorted(cover)]
                for pick in product(*choice_sets):
                    cand = frozenset(pick)
                    if cand in found:
                        continue
                    if len(cand) <= k and is_minimal_solution(g, cand):
                        found.add(cand)
                    else:
                        rejected += 1
    if rejected:
        log.debug("cover expansion produced %d non-minimal or oversized transversals", rejected)
    return _sorted_family(found)


@dataclass
class BranchRecord:
    """Size statistics of one branch of the disjoint enumeration."""

    reference_size: int
    high_count: int
    path_counts: tuple[int, ...]
    solutions: int

    def within_bounds(self) -> bool:
        s = self.reference_size
        return self.high_count <= HIGH_DEGREE_FACTOR * s and all(
            m <= PATH_COUNT_FACTOR * s for m in self.path_counts
        )


def _minimal_free_solutions(inst: ReducedInstance, budget: int) -> list[tuple[int, ...]]:
    free = sorted(inst.free)
    found: list[tuple[int, ...]] = []
    for size in range(min(budget, len(free)) + 1):
        for combo in combinations(free, size):
            if any(set(f) <= set(combo) for f in found):
                continue
            if inst.graph.delete_vertices(combo).is_fully_acyclic():
                found.append(combo)
    return found


def enumerate_disjoint_dfvs(
    g: EdgeColoredGraph,
    reference: Iterable[int],
    budget: int,
    trace: list[BranchRecord] | None = None,
) -> list[frozenset[int]]:
    """Inclusion-minimal dual feedback vertex sets disjoint from ``reference`` with size <= ``budget``.

    ``reference`` must itself be a dual feedback vertex set of ``g``. Per-branch
    statistics are appended to ``trace`` when given.
    """
    _require_bicolored(g)
    ref = frozenset(reference)
    if not ref <= g.vertices:
        raise ValueError("reference set contains unknown vertices")
    if not is_solution(g, ref):
        raise ValueError("reference set is not a dual feedback vertex set")
    if budget < 0:
        return []
    try:
        base = reduce_instance(g, ref)
    except Infeasible:
        return []
    high = sorted(classify_vertices(base).high_any)
    room = budget - len(base.forced)
    found: set[frozenset[int]] = set()
    for size in range(min(room, len(high)) + 1 if room >= 0 else 0):
        for guess in combinations(high, size):
            branch = base.replace(
                graph=base.graph.delete_vertices(guess),
                forced=base.forced + tuple(base.rep(v) for v in guess),
                represents={v: r for v, r in base.represents.items() if v not in guess},
                excluded=base.excluded | (frozenset(high) - frozenset(guess)),
            )
            try:
                branch = apply_path_rules(branch)
            except Infeasible:
                continue
            left = budget - len(branch.forced)
            if left < 0:
                continue
            produced = 0
            for sol in _minimal_free_solutions(branch, left):
                for cand in branch.expand(sol):
                    produced += 1
                    found.add(cand)
            record = BranchRecord(len(ref), len(high), classify_vertices(branch).path_counts, produced)
            if produced and not record.within_bounds():
                log.warning("branch exceeds the high-degree/path-count bounds: %s", record)
            if trace is not None:
                trace.append(record)
    kept = [
        s for s in found if len(s) <= budget and not s & ref and is_minimal_solution(g, s)
    ]
    if len(kept) != len(found):
        log.debug("disjoint enumeration filtered %d candidates", len(found) - len(kept))
    return _sorted_family(kept)


def enumerate_minimal_dfvs(
    g: EdgeColoredGraph, k: int, trace: list[BranchRecord] | None = None
) -> list[frozenset[int]]:
    """All inclusion-minimal dual feedback vertex sets of size at most ``k``, by compression.

    A 2-approximate blue FVS united with a 2-approximate red FVS gives a
    solution ``X``; each minimal solution is its overlap ``Y`` with ``X`` plus a
    minimal solution of ``g - Y`` avoiding ``X - Y``.
    """
    _require_bicolored(g)
    if k < 0:
        return []
    scaffold = sorted(fvs_2approx(g, BLUE) | fvs_2approx(g, RED))
    found: set[frozenset[int]] = set()
    for size in range(min(k, len(scaffold)) + 1):
        for guess in combinations(scaffold, size):
            y = frozenset(guess)
            rest = g.delete_vertices(y)
            for part in enumerate_disjoint_dfvs(rest, frozenset(scaffold) - y, k - size, trace):
                cand = part | y
                if is_minimal_solution(g, cand):
                    found.add(cand)
    return _sorted_family(found)
