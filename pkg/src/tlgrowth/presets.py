"""Named graph families and the exponential-growth figure graphs.

Vertex numbering follows the drawn diagrams; where a diagram's labels skip an
index the vertices are numbered consecutively instead (the generators must
be p1..pn).
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .coxeter import INF, CoxGraph, GraphError

# family -> (minimum rank, rank meaning)
FAMILIES = {
    "A": (1, "vertices"),
    "B": (2, "vertices"),
    "D": (4, "vertices"),
    "E": (6, "vertices"),
    "F": (4, "vertices"),
    "H": (2, "vertices"),
    "l2": (3, "edge label p"),
    "l3": (3, "edge label s"),
    "tilde-A": (3, "vertices (cycle length)"),
    "tilde-A1": (None, "fixed"),
    "tilde-B": (4, "vertices"),
    "tilde-C": (2, "n (n+1 vertices)"),
    "tilde-D": (4, "n (n+1 vertices)"),
    "tilde-E6": (None, "fixed"),
    "tilde-E7": (None, "fixed"),
    "tilde-F": (6, "vertices"),
    "tilde-G2": (None, "fixed"),
    "star": (2, "vertices (centre is vertex 2)"),
    "fig": (None, "figure tag 4.1 .. 4.22"),
}


def _path(n: int, labels: dict | None = None) -> list:
    labels = labels or {}
    return [(i, i + 1, labels.get(i, 3)) for i in range(1, n)]


def _need(family: str, rank) -> int:
    lo, _ = FAMILIES[family]
    if rank is None:
        raise GraphError(f"{family} needs a rank (>= {lo})")
    rank = int(rank)
    if rank < lo:
        raise GraphError(f"{family}_n requires n >= {lo}, got {rank}")
    return rank


def preset(family: str, rank=None) -> CoxGraph:
    """Build a named graph, e.g. ``preset("B", 4)`` or ``preset("fig", "4.6")``."""
    fam = family
    if fam not in FAMILIES:
        raise GraphError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
    if fam == "fig":
        return figure(str(rank))
    if fam in ("tilde-A1", "tilde-E6", "tilde-E7", "tilde-G2"):
        if rank is not None:
            raise GraphError(f"{fam} takes no rank")
        n, edges = {
            "tilde-A1": (2, [(1, 2, INF)]),
            "tilde-E6": (7, _path(5) + [(3, 6, 3), (6, 7, 3)]),
            "tilde-E7": (8, _path(7) + [(4, 8, 3)]),
            "tilde-G2": (2, [(1, 2, 6)]),
        }[fam]
        return CoxGraph.build(n, edges, name=fam)
    n = _need(fam, rank)
    if fam == "A":
        g = (n, _path(n))
    elif fam == "B":
        g = (n, _path(n, {1: 4}))
    elif fam == "D":
        g = (n, [(1, 3, 3), (2, 3, 3)] + [(i, i + 1, 3) for i in range(3, n)])
    elif fam == "E":
        g = (n, _path(n - 1) + [(3, n, 3)])
    elif fam == "F":
        g = (n, _path(n, {2: 4}))
    elif fam == "H":
        g = (n, _path(n, {1: 5}))
    elif fam == "l2":
        g = (2, [(1, 2, n)])
    elif fam == "l3":
        g = (3, [(1, 2, n), (2, 3, 3)])
    elif fam == "tilde-A":
        g = (n, _path(n) + [(1, n, 3)])
    elif fam == "tilde-B":
        g = (n, [(1, 3, 3), (2, 3, 3)] + [(i, i + 1, 4 if i == n - 1 else 3) for i in range(3, n)])
    elif fam == "tilde-C":
        g = (n + 1, _path(n + 1, {1: 4, n: 4}))
    elif fam == "tilde-D":
        g = (n + 1, [(1, 3, 3), (2, 3, 3)] + [(i, i + 1, 3) for i in range(3, n - 1)]
             + [(n - 1, n, 3), (n - 1, n + 1, 3)])
    elif fam == "tilde-F":
        g = (n, _path(n, {3: 4}))
    elif fam == "star":
        g = (n, [(min(2, k), max(2, k), 3) for k in range(1, n + 1) if k != 2])
    else:  # pragma: no cover
        raise GraphError(fam)
    name = f"{fam}{n}" if fam not in ("l2", "l3") else f"{fam}({n})"
    return CoxGraph.build(g[0], g[1], name=name)


def parse_preset(spec: str) -> CoxGraph:
    """``"B 4"``, ``"B4"``, ``"tilde-A 3"``, ``"l2(7)"``, ``"fig 4.6"``."""
    s = spec.strip().replace("(", " ").replace(")", " ")
    parts = s.split()
    if len(parts) == 1:
        head = parts[0]
        if head in FAMILIES:
            return preset(head)
        for fam in sorted(FAMILIES, key=len, reverse=True):
            if head.startswith(fam) and fam not in ("tilde-A1", "tilde-E6", "tilde-E7", "tilde-G2"):
                rest = head[len(fam):]
                if rest:
                    return preset(fam, rest)
        return preset(head)
    if len(parts) == 2:
        return preset(parts[0], parts[1])
    raise GraphError(f"cannot parse preset {spec!r}")


# -- figure graphs and their witness words -------------------------------------------

@lru_cache(maxsize=1)
def figure_table() -> dict:
    data = resources.files("tlgrowth").joinpath("data/figures.json").read_text(encoding="utf-8")
    doc = json.loads(data)
    if doc.get("version") != 1:
        raise GraphError("unsupported figures.json version")
    return {fig["tag"]: fig for fig in doc["figures"]}


def figure(tag: str) -> CoxGraph:
    table = figure_table()
    if tag not in table:
        raise GraphError(f"unknown figure tag {tag!r}; known: {', '.join(table)}")
    fig = table[tag]
    edges = [(i, j, INF if m == "inf" else m) for i, j, m in fig["edges"]]
    return CoxGraph.build(fig["vertices"], edges, name=f"fig{tag}")


def figure_tags() -> list[str]:
    return sorted(figure_table(), key=lambda t: tuple(int(x) for x in t.split(".")))


def list_presets() -> list[str]:
    lines = []
    for fam, (lo, meaning) in FAMILIES.items():
        if fam == "fig":
            lines.append(f"fig TAG   tags {', '.join(figure_tags())}")
        elif lo is None:
            lines.append(f"{fam}")
        else:
            lines.append(f"{fam} N   N >= {lo} ({meaning})")
    return lines
