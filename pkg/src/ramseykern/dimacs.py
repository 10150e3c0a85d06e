"""DIMACS edge format (1-indexed ``p edge n m`` / ``e u v``)."""

from __future__ import annotations

import os
from typing import Iterable

from .graph import Graph


class DimacsError(ValueError):
    pass


def parse_dimacs(text: str) -> Graph:
    n = None
    declared_m = None
    seen = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise DimacsError(f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DimacsError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer size in problem line") from None
            if n < 0 or declared_m < 0:
                raise DimacsError(f"line {lineno}: negative size in problem line")
        elif parts[0] == "e":
            if n is None:
                raise DimacsError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise DimacsError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer endpoint") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"line {lineno}: endpoint out of range 1..{n}")
            if u == v:
                raise DimacsError(f"line {lineno}: self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DimacsError(f"line {lineno}: duplicate edge {key[0]} {key[1]}")
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise DimacsError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise DimacsError("missing problem line")
    if len(edges) != declared_m:
        raise DimacsError(f"problem line declares {declared_m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def format_dimacs(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.m}")
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_dimacs(path: str | os.PathLike) -> Graph:
    with open(path) as f:
        return parse_dimacs(f.read())


def write_dimacs(g: Graph, path: str | os.PathLike, comments: Iterable[str] = ()) -> None:
    with open(path, "w") as f:
        f.write(format_dimacs(g, comments))
