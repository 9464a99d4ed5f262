"""Check a proposed solution against a colored graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Cycle, EdgeColoredGraph, is_solution


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    acyclic: tuple[bool, ...]
    witness: Cycle | None = None
    minimal: bool | None = None
    redundant: int | None = None

    @property
    def ok(self) -> bool:
        return self.valid and self.minimal is not False

    def describe(self) -> str:
        lines = []
        for c, flag in enumerate(self.acyclic, start=1):
            lines.append(f"color {c}: {'acyclic' if flag else 'cyclic'}")
        if self.witness is not None:
            verts = " ".join(map(str, self.witness.vertices))
            lines.append(f"witness color {self.witness.color} cycle: {verts}")
        if self.minimal is not None:
            if self.minimal:
                lines.append("minimal: yes")
            else:
                lines.append(f"minimal: no (still valid without {self.redundant})")
        lines.append("PASS" if self.ok else "FAIL")
        return "\n".join(lines) + "\n"


def verify_solution(g: EdgeColoredGraph, solution: Iterable[int], mode: str = "valid") -> VerificationReport:
    if mode not in ("valid", "minimal"):
        raise ValueError(f"unknown verification mode {mode!r}")
    sol = frozenset(solution)
    unknown = sol - g.vertices
    if unknown:
        raise KeyError(f"unknown vertex ids in solution: {sorted(unknown)}")
    rest = g.delete_vertices(sol)
    acyclic = tuple(rest.is_acyclic(c) for c in range(1, g.h + 1))
    witness = None
    for c, flag in enumerate(acyclic, start=1):
        if not flag:
            witness = rest.find_monochromatic_cycle(c)
            break
    valid = all(acyclic)
    if mode == "valid":
        return VerificationReport(valid, acyclic, witness)
    redundant = next((v for v in sorted(sol) if is_solution(g, sol - {v})), None) if valid else None
    return VerificationReport(valid, acyclic, witness, valid and redundant is None, redundant)
