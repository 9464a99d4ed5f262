"""Seeded random instances.

The random stream is SplitMix64 (Steele, Lea and Flood): a 64-bit counter
advanced by 0x9E3779B97F4A7C15 and passed through two xor-shift-multiply
rounds. A draw ``x`` becomes the double ``(x >> 11) * 2**-53`` in [0, 1). Edge
decisions are made for pairs ``u < v`` in lexicographic order and, inside a
pair, for colors 1..h in order; non-simple instances also draw one self-loop
decision per vertex and color, taken at the pair ``(u, u)`` just before ``(u, u + 1)``.
These rules are enough to reproduce an instance from its seed in any language.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Digraph, Edge, EdgeColoredGraph

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise ValueError("n must be positive")
        return int(self.random() * n)

    def sample(self, population: list, size: int) -> list:
        pool = list(population)
        out = []
        for _ in range(size):
            out.append(pool.pop(self.below(len(pool))))
        return out


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    h: int = 2
    p: float = 0.3
    seed: int = 0
    simple: bool = True

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if self.h < 1:
            raise ValueError("h must be >= 1")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("p must lie in [0, 1]")


def generate_instance(cfg: GeneratorConfig) -> EdgeColoredGraph:
    rng = SplitMix64(cfg.seed)
    edges = []
    for u in range(1, cfg.n + 1):
        partners = range(u if not cfg.simple else u + 1, cfg.n + 1)
        for v in partners:
            for c in range(1, cfg.h + 1):
                if rng.random() < cfg.p:
                    edges.append(Edge(u, v, c))
    return EdgeColoredGraph(frozenset(range(1, cfg.n + 1)), tuple(edges), cfg.h)


def generate_digraph(n: int, p: float, seed: int) -> Digraph:
    """Each ordered pair ``(u, v)``, ``u != v``, becomes an arc with probability ``p``."""
    rng = SplitMix64(seed)
    arcs = set()
    for u, v in combinations(range(1, n + 1), 2):
        if rng.random() < p:
            arcs.add((u, v))
        if rng.random() < p:
            arcs.add((v, u))
    return Digraph(frozenset(range(1, n + 1)), frozenset(arcs))
