import random

import pytest

from conftest import graph
from dualfvs.compact import CompactRepresentation, enumerate_fvs_compact_reps
from dualfvs.dfvs import enumerate_minimal_dfvs, solve_dfvs
from dualfvs.generate import GeneratorConfig, generate_instance
from dualfvs.graph import is_solution
from dualfvs.mfvs import (
    U_STAR,
    V_STAR,
    build_domination_graph,
    copy_classes,
    copy_node,
    degeneracy,
    dominating_set_at_most,
    enumerate_minimal_mfvs,
    extract_mfvs_from_dominating,
    is_dominating,
    set_node,
    solve_mfvs,
)
from dualfvs.oracle import oracle_min_dominating_set, oracle_minimal_mfvs_family


def rep(*sets):
    return CompactRepresentation(tuple(frozenset(s) for s in sets))


@pytest.fixture
def small_dg():
    g = graph([], vertices=[1, 2, 3])
    return build_domination_graph(g, [rep({1}, {2}), rep({1, 3})])


def test_domination_graph_structure(small_dg):
    adj = small_dg.adjacency
    assert len(small_dg.set_members) == 3
    membership = {(c, s) for c in (copy_node(1), copy_node(2), copy_node(3)) for s in adj[c] if s[0] == "set"}
    assert membership == {
        (copy_node(1), set_node(0)), (copy_node(2), set_node(1)),
        (copy_node(1), set_node(2)), (copy_node(3), set_node(2)),
    }
    assert adj[V_STAR] == {U_STAR, copy_node(1), copy_node(2), copy_node(3)}
    assert degeneracy(adj) <= 3


def test_empty_reps_dominated_by_apex():
    dg = build_domination_graph(graph([], vertices=[1, 2, 3]), [rep(), rep()])
    assert dominating_set_at_most(dg, 1) == frozenset({V_STAR})
    assert extract_mfvs_from_dominating(dg, {V_STAR}) == frozenset()


def test_single_color_rep():
    dg = build_domination_graph(graph([], vertices=[1, 2, 3], h=1), [rep({1, 2, 3})])
    assert len(dg.adjacency[set_node(0)]) == 3


def test_extract_examples(small_dg):
    assert extract_mfvs_from_dominating(small_dg, {V_STAR, copy_node(1), copy_node(2)}) == frozenset({1, 2})
    out = extract_mfvs_from_dominating(small_dg, {U_STAR, copy_node(2), set_node(2), set_node(0)})
    assert out & {1, 3} and 2 in out
    with pytest.raises(ValueError):
        extract_mfvs_from_dominating(small_dg, {V_STAR})


def test_dominating_examples():
    star = {0: {1, 2, 3, 4}, 1: {0}, 2: {0}, 3: {0}, 4: {0}}
    assert dominating_set_at_most(star, 1) == frozenset({0})
    p4 = {0: {1}, 1: {0, 2}, 2: {1, 3}, 3: {2}}
    assert dominating_set_at_most(p4, 1) is None
    pair = dominating_set_at_most(p4, 2)
    assert len(pair) == 2 and is_dominating(p4, pair)


def test_dominating_matches_oracle():
    rng = random.Random(11)
    for _ in range(120):
        n = rng.randint(1, 12)
        adj = {i: set() for i in range(n)}
        for a in range(n):
            for b in range(a + 1, n):
                if rng.random() < 0.25:
                    adj[a].add(b)
                    adj[b].add(a)
        best = len(oracle_min_dominating_set(adj))
        assert dominating_set_at_most(adj, best - 1) is None if best else True
        found = dominating_set_at_most(adj, best)
        assert found is not None and len(found) <= best and is_dominating(adj, found)


def test_solve_and_enumerate_examples(three_triangles, two_triangles):
    assert solve_mfvs(three_triangles, 1) == frozenset({1})
    assert enumerate_minimal_mfvs(three_triangles, 1) == [frozenset({1})]
    acyclic = graph([(1, 2, 1), (2, 3, 2), (3, 4, 3)], h=3)
    assert solve_mfvs(acyclic, 0) == frozenset()
    assert enumerate_minimal_mfvs(acyclic, 2) == [frozenset()]
    assert enumerate_minimal_mfvs(two_triangles, 2) == enumerate_minimal_dfvs(two_triangles, 2)


def _instance(seed):
    rng = random.Random(seed)
    h = rng.choice([1, 2, 3])
    g = generate_instance(GeneratorConfig(rng.randint(3, 10), h, rng.choice([0.15, 0.3]), seed, True))
    return g, rng.randint(0, 3)


@pytest.mark.parametrize("block", range(4))
def test_mfvs_matches_oracle(block):
    for seed in range(block * 30, block * 30 + 30):
        g, k = _instance(seed)
        oracle = set(oracle_minimal_mfvs_family(g, k))
        assert set(enumerate_minimal_mfvs(g, k)) == oracle
        sol = solve_mfvs(g, k)
        assert (sol is None) == (not oracle)
        if sol is not None:
            assert len(sol) <= k and is_solution(g, sol)
        if g.h == 2:
            assert (solve_dfvs(g, k) is None) == (sol is None)


def test_domination_invariants_and_class_swaps():
    for seed in range(40):
        g, k = _instance(seed)
        per_color = [enumerate_fvs_compact_reps(g, k, c) for c in range(1, g.h + 1)]
        if not all(per_color):
            continue
        dg = build_domination_graph(g, [reps[0] for reps in per_color])
        dg.check()
        for members in copy_classes(dg).values():
            if len(members) < 2:
                continue
            a, b = members[:2]
            # same set-vertex neighborhood: swapping keeps every set-vertex dominated
            for sol in enumerate_minimal_mfvs(g, k):
                if a in sol and b not in sol and all(sol & s for s in dg.set_members):
                    swapped = (sol - {a}) | {b}
                    assert all(swapped & s for s in dg.set_members)
