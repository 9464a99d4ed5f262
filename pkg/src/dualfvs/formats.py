"""Line-oriented text formats for graphs, digraphs, reps and solution families.

Colored graph::

    c optional comment
    p ecg <n> <m> <h>
    v <id>            (optional; when present these are the only vertices)
    e <u> <v> <color>

``n`` is the largest vertex id; without ``v`` lines the vertex set is 1..n.
Digraphs use ``p dig <n> <m>`` and ``a <u> <v>`` lines.
"""

from __future__ import annotations

from typing import Iterable

from .graph import Digraph, Edge, EdgeColoredGraph


class FormatError(ValueError):
    def __init__(self, message: str, lineno: int | None = None) -> None:
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno is not None else message)


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield lineno, line.split()


def _ints(fields: list[str], count: int, lineno: int) -> list[int]:
    if len(fields) != count:
        raise FormatError(f"expected {count} integers, got {' '.join(fields)!r}", lineno)
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise FormatError(f"non-integer field in {' '.join(fields)!r}", lineno) from None


def decode_instance(text: str) -> EdgeColoredGraph:
    header = None
    explicit: list[int] = []
    edges: list[Edge] = []
    last = 0
    for lineno, fields in _records(text):
        kind = fields[0]
        last = lineno
        if kind == "p":
            if header is not None:
                raise FormatError("duplicate header", lineno)
            if len(fields) < 2 or fields[1] != "ecg":
                raise FormatError("header must read 'p ecg <n> <m> <h>'", lineno)
            n, m, h = _ints(fields[2:], 3, lineno)
            if n < 0 or m < 0 or h < 1:
                raise FormatError(f"invalid header values n={n} m={m} h={h}", lineno)
            header = (n, m, h)
        elif header is None:
            raise FormatError(f"{kind!r} line before header", lineno)
        elif kind == "v":
            (v,) = _ints(fields[1:], 1, lineno)
            if not 1 <= v <= header[0]:
                raise FormatError(f"vertex {v} outside 1..{header[0]}", lineno)
            explicit.append(v)
        elif kind == "e":
            u, v, c = _ints(fields[1:], 3, lineno)
            n, _, h = header
            for x in (u, v):
                if not 1 <= x <= n:
                    raise FormatError(f"dangling endpoint {x} (n = {n})", lineno)
            if not 1 <= c <= h:
                raise FormatError(f"color {c} outside 1..{h}", lineno)
            if explicit and (u not in explicit or v not in explicit):
                raise FormatError(f"endpoint of edge {u} {v} is not a listed vertex", lineno)
            edges.append(Edge(u, v, c))
        else:
            raise FormatError(f"unknown line type {kind!r}", lineno)
    if header is None:
        raise FormatError("missing 'p ecg' header")
    n, m, h = header
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}", last)
    vertices = frozenset(explicit) if explicit else frozenset(range(1, n + 1))
    return EdgeColoredGraph(vertices, tuple(edges), h)


def encode_instance(g: EdgeColoredGraph) -> str:
    n = max(g.vertices, default=0)
    lines = [f"p ecg {n} {g.m} {g.h}"]
    if g.vertices != frozenset(range(1, n + 1)):
        lines.extend(f"v {v}" for v in sorted(g.vertices))
    lines.extend(f"e {u} {v} {c}" for u, v, c in g.edges)
    return "\n".join(lines) + "\n"


def decode_digraph(text: str) -> Digraph:
    header = None
    arcs: list[tuple[int, int]] = []
    last = 0
    for lineno, fields in _records(text):
        last = lineno
        if fields[0] == "p":
            if header is not None:
                raise FormatError("duplicate header", lineno)
            if len(fields) < 2 or fields[1] != "dig":
                raise FormatError("header must read 'p dig <n> <m>'", lineno)
            header = _ints(fields[2:], 2, lineno)
        elif header is None:
            raise FormatError(f"{fields[0]!r} line before header", lineno)
        elif fields[0] == "a":
            u, v = _ints(fields[1:], 2, lineno)
            for x in (u, v):
                if not 1 <= x <= header[0]:
                    raise FormatError(f"dangling endpoint {x} (n = {header[0]})", lineno)
            arcs.append((u, v))
        else:
            raise FormatError(f"unknown line type {fields[0]!r}", lineno)
    if header is None:
        raise FormatError("missing 'p dig' header")
    if len(arcs) != header[1]:
        raise FormatError(f"header announces {header[1]} arcs, found {len(arcs)}", last)
    return Digraph(frozenset(range(1, header[0] + 1)), frozenset(arcs))


def encode_digraph(d: Digraph) -> str:
    arcs = sorted(d.arcs)
    lines = [f"p dig {max(d.vertices, default=0)} {len(arcs)}"]
    lines.extend(f"a {u} {v}" for u, v in arcs)
    return "\n".join(lines) + "\n"


def format_family(family: Iterable[Iterable[int]]) -> str:
    """One solution per line, ids ascending, lines sorted; ``EMPTYSET`` for the empty set."""
    rows = sorted(tuple(sorted(s)) for s in family)
    return "".join((" ".join(map(str, r)) if r else "EMPTYSET") + "\n" for r in rows)


def parse_family(text: str) -> list[frozenset[int]]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        out.append(frozenset() if line == "EMPTYSET" else frozenset(int(x) for x in line.split()))
    return out


def format_rep(rep: Iterable[Iterable[int]]) -> str:
    return " ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in rep)


def parse_rep(line: str) -> tuple[frozenset[int], ...]:
    sets = []
    for chunk in line.split():
        if not (chunk.startswith("{") and chunk.endswith("}")):
            raise FormatError(f"malformed rep set {chunk!r}")
        sets.append(frozenset(int(x) for x in chunk[1:-1].split(",") if x))
    return tuple(sets)
