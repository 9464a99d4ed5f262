import random

import pytest

from conftest import graph
from dualfvs.approx import fvs_2approx, semidisjoint_cycle
from dualfvs.dfvs import (
    BranchRecord,
    enumerate_dfvs_algoA,
    enumerate_disjoint_dfvs,
    enumerate_minimal_dfvs,
    solve_dfvs,
)
from dualfvs.generate import GeneratorConfig, generate_instance
from dualfvs.graph import is_solution
from dualfvs.oracle import oracle_minimal_mfvs_family

TWO_TRIANGLE_K2 = {frozenset(s) for s in ({3}, {1, 4}, {1, 5}, {2, 4}, {2, 5})}


def min_size(g, cap=6):
    for k in range(cap + 1):
        fam = oracle_minimal_mfvs_family(g, k)
        if fam:
            return min(len(s) for s in fam)
    return None


def test_solve_examples(two_triangles):
    assert solve_dfvs(two_triangles, 1) == frozenset({3})
    assert solve_dfvs(two_triangles, 0) is None
    assert solve_dfvs(graph([(1, 2, 1), (2, 3, 2)]), 0) == frozenset()


def test_solve_requires_two_colors(three_triangles):
    with pytest.raises(ValueError):
        solve_dfvs(three_triangles, 1)


def test_algo_a_examples(two_triangles):
    assert enumerate_dfvs_algoA(two_triangles, 1) == [frozenset({3})]
    assert set(enumerate_dfvs_algoA(two_triangles, 2)) == TWO_TRIANGLE_K2
    assert enumerate_dfvs_algoA(graph([(1, 2, 1), (2, 3, 2)]), 2) == [frozenset()]


def test_compression_examples(two_triangles):
    assert set(enumerate_minimal_dfvs(two_triangles, 2)) == TWO_TRIANGLE_K2
    assert enumerate_minimal_dfvs(two_triangles, 0) == []
    blue_only = graph([(1, 2, 1), (2, 3, 1), (1, 3, 1)])
    assert set(enumerate_minimal_dfvs(blue_only, 1)) == {frozenset({1}), frozenset({2}), frozenset({3})}


def test_disjoint_examples(two_triangles):
    assert enumerate_disjoint_dfvs(two_triangles, {1, 4}, 1) == [frozenset({3})]
    assert enumerate_disjoint_dfvs(graph([(1, 2, 1)]), set(), 0) == [frozenset()]
    assert enumerate_disjoint_dfvs(two_triangles, {3}, 0) == []


def test_disjoint_rejects_non_solution(two_triangles):
    with pytest.raises(ValueError):
        enumerate_disjoint_dfvs(two_triangles, {1}, 2)


def test_approx_examples():
    tri = graph([(1, 2, 1), (2, 3, 1), (1, 3, 1)], h=1)
    assert 1 <= len(fvs_2approx(tri)) <= 2
    assert fvs_2approx(graph([(1, 2, 1), (2, 3, 1)], h=1)) == frozenset()
    two = graph([(1, 2, 1), (2, 3, 1), (1, 3, 1), (4, 5, 1), (5, 6, 1), (4, 6, 1)], h=1)
    assert len(fvs_2approx(two)) <= 4


def test_semidisjoint_cycle_detection():
    # K4 has no vertex of degree 2
    k4 = graph([(a, b, 1) for a in range(1, 5) for b in range(a + 1, 5)], h=1)
    assert semidisjoint_cycle(k4) is None
    # a triangle hanging off K4 vertex 1 through 5-6
    g = graph([*((a, b, 1) for a in range(1, 5) for b in range(a + 1, 5)), (1, 5, 1), (5, 6, 1), (6, 1, 1)], h=1)
    assert sorted(semidisjoint_cycle(g)) == [1, 5, 6]


@pytest.mark.parametrize("seed", range(120))
def test_approx_factor(seed):
    rng = random.Random(seed)
    g = generate_instance(GeneratorConfig(rng.randint(2, 11), 1, rng.choice([0.2, 0.3]), seed, True))
    sol = fvs_2approx(g)
    assert g.delete_vertices(sol).is_acyclic(1)
    opt = min_size(g)
    if opt is not None:
        assert len(sol) <= 2 * opt


def _instance(seed):
    rng = random.Random(seed)
    n = rng.randint(4, 10)
    g = generate_instance(GeneratorConfig(n, 2, rng.choice([0.15, 0.3]), seed, True))
    return g, rng.randint(0, 3)


@pytest.mark.parametrize("block", range(4))
def test_enumerators_match_oracle(block):
    for seed in range(block * 30, block * 30 + 30):
        g, k = _instance(seed)
        oracle = set(oracle_minimal_mfvs_family(g, k))
        a = enumerate_dfvs_algoA(g, k)
        b = enumerate_minimal_dfvs(g, k)
        assert set(a) == set(b) == oracle
        for fam in (a, b):
            assert not any(x < y for x in fam for y in fam)
        sol = solve_dfvs(g, k)
        assert (sol is None) == (not oracle)
        if sol is not None:
            assert len(sol) <= k and is_solution(g, sol)


@pytest.mark.parametrize("seed", range(60))
def test_disjoint_matches_oracle(seed):
    rng = random.Random(seed + 900)
    g, _ = _instance(seed + 900)
    verts = sorted(g.vertices)
    while True:
        ref = frozenset(rng.sample(verts, rng.randint(0, len(verts))))
        if is_solution(g, ref):
            break
    budget = rng.randint(0, 3)
    trace: list[BranchRecord] = []
    got = enumerate_disjoint_dfvs(g, ref, budget, trace)
    assert set(got) == {s for s in oracle_minimal_mfvs_family(g, budget) if not s & ref}
    for rec in trace:
        if rec.solutions:
            assert rec.within_bounds()


def test_branch_record_bounds():
    assert not BranchRecord(reference_size=0, high_count=1, path_counts=(0, 0), solutions=1).within_bounds()
    assert BranchRecord(1, 28, (16, 16), 3).within_bounds()
    assert not BranchRecord(1, 28, (17, 0), 3).within_bounds()
