"""JSON instance bundles and sidecars.

Bundle layout (vertices 1-indexed, like DIMACS)::

    {"k": 3,
     "instances": [{"graph": "g1.dimacs", "clique_witness": [1, 2], "indep_witness": [1, 3]},
                   {"graph": {"n": 5, "edges": [[1, 2], [2, 3]]}, ...},
                   {"graph": [[1, 2], [2, 3]], "n": 4, ...}]}

A graph is a DIMACS path (relative to the bundle file), an ``{"n", "edges"}``
object, or a bare edge list whose order is ``n`` if given, else the largest
endpoint.
"""

from __future__ import annotations

import json
import os
from typing import Any, Sequence

from .constructions import Instance
from .dimacs import read_dimacs
from .graph import Graph


def _graph_from_json(spec: Any, base_dir: str, n: int | None = None) -> Graph:
    if isinstance(spec, str):
        return read_dimacs(os.path.join(base_dir, spec))
    if isinstance(spec, dict):
        n, spec = spec["n"], spec["edges"]
    edges = [(int(u) - 1, int(v) - 1) for u, v in spec]
    if n is None:
        n = max((max(e) + 1 for e in edges), default=0)
    return Graph.from_edges(n, edges)


def _zero_based(ws):
    return None if ws is None else tuple(int(v) - 1 for v in ws)


def load_bundle(path: str | os.PathLike) -> list[Instance]:
    with open(path) as f:
        data = json.load(f)
    return bundle_from_dict(data, os.path.dirname(os.path.abspath(path)))


def bundle_from_dict(data: dict, base_dir: str = ".") -> list[Instance]:
    k = int(data["k"])
    out = []
    for i, entry in enumerate(data["instances"]):
        g = _graph_from_json(entry["graph"], base_dir, entry.get("n"))
        out.append(Instance(g, int(entry.get("k", k)),
                            _zero_based(entry.get("clique_witness")),
                            _zero_based(entry.get("indep_witness"))))
    return out


def bundle_to_dict(instances: Sequence[Instance]) -> dict:
    if not instances:
        raise ValueError("empty bundle")
    entries = []
    for inst in instances:
        e = {"graph": {"n": inst.g.n, "edges": [[u + 1, v + 1] for u, v in inst.g.edges()]}}
        if inst.has_witnesses:
            e["clique_witness"] = [v + 1 for v in inst.clique_witness]
            e["indep_witness"] = [v + 1 for v in inst.indep_witness]
        entries.append(e)
    return {"k": instances[0].k, "instances": entries}
