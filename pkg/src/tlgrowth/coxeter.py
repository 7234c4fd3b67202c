"""Edge-labelled Coxeter graphs, named presets and the defining relations."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .coeffs import T, T1, T2, ParamScalar, scalar
from .freealg import NCPoly, Word, word

INF = math.inf


class GraphError(ValueError):
    pass


def _check_label(m) -> int | float:
    if m == INF or m == "inf":
        return INF
    if isinstance(m, bool) or not isinstance(m, int):
        raise GraphError(f"edge label must be an integer >= 3 or 'inf', got {m!r}")
    if m < 3:
        raise GraphError(f"edge label must be >= 3, got {m}")
    return m


@dataclass(frozen=True)
class CoxGraph:
    """Simple graph on vertices 1..n; ``edges`` maps (i, j) with i < j to a label.

    A missing edge means the two generators commute (m = 2).
    """

    n: int
    edges: tuple  # sorted tuple of (i, j, m)
    name: str = ""

    @classmethod
    def build(cls, n: int, edges: Iterable, name: str = "") -> "CoxGraph":
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        seen = {}
        for e in edges:
            if len(e) == 2:
                i, j, m = e[0], e[1], 3
            else:
                i, j, m = e
            if not (1 <= i <= n and 1 <= j <= n):
                raise GraphError(f"edge ({i}, {j}) has a vertex outside 1..{n}")
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen[key] = _check_label(m)
        return cls(n, tuple(sorted((i, j, m) for (i, j), m in seen.items())), name)

    def label(self, i: int, j: int):
        """Edge label, or 2 when i and j are not joined."""
        a, b = min(i, j), max(i, j)
        for x, y, m in self.edges:
            if (x, y) == (a, b):
                return m
        return 2

    def edge_map(self) -> dict:
        return {(i, j): m for i, j, m in self.edges}

    def neighbors(self, v: int) -> list[int]:
        out = []
        for i, j, _ in self.edges:
            if i == v:
                out.append(j)
            elif j == v:
                out.append(i)
        return sorted(out)

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def is_connected(self) -> bool:
        seen = {1}
        stack = [1]
        adj = {v: self.neighbors(v) for v in range(1, self.n + 1)}
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    def has_big_labels(self) -> bool:
        return any(m != INF and m >= 6 for _, _, m in self.edges)

    def key(self) -> str:
        """Stable textual key, e.g. ``4:1-2/4,2-3,3-4``."""
        parts = []
        for i, j, m in self.edges:
            lab = "" if m == 3 else "/inf" if m == INF else f"/{m}"
            parts.append(f"{i}-{j}{lab}")
        return f"{self.n}:" + ",".join(parts)

    def with_name(self, name: str) -> "CoxGraph":
        return CoxGraph(self.n, self.edges, name)

    def __str__(self):
        return self.name or self.key()

    # -- file format ------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "version": 1,
            "vertices": self.n,
            "edges": [[i, j, "inf" if m == INF else m] for i, j, m in self.edges],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def loads_graph(text: str) -> CoxGraph:
    """Parse the graph file format; errors carry line/column or edge position."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise GraphError("graph file must hold a JSON object")
    if doc.get("version") != 1:
        raise GraphError(f"unsupported graph file version {doc.get('version')!r}")
    n = doc.get("vertices")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise GraphError(f"'vertices' must be a positive integer, got {n!r}")
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise GraphError("'edges' must be a list")
    parsed = []
    seen = set()
    for pos, e in enumerate(edges):
        if not isinstance(e, list) or len(e) != 3:
            raise GraphError(f"edges[{pos}]: expected [i, j, m]")
        i, j, m = e
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in (i, j)):
            raise GraphError(f"edges[{pos}]: vertex indices must be integers")
        if i == j:
            raise GraphError(f"edges[{pos}]: loop at vertex {i}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphError(f"edges[{pos}]: vertex outside 1..{n}")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise GraphError(f"edges[{pos}]: duplicate edge {list(key)}")
        seen.add(key)
        try:
            m = _check_label(m)
        except GraphError as exc:
            raise GraphError(f"edges[{pos}]: {exc}") from None
        parsed.append((i, j, m))
    return CoxGraph.build(n, parsed, name=doc.get("name", ""))


def load_graph(path) -> CoxGraph:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return loads_graph(text)
    except GraphError as exc:
        raise GraphError(f"{path}: {exc}") from None


# -- relations ---------------------------------------------------------------------

def alternating(i: int, j: int, m: int) -> Word:
    return bytes(i if k % 2 == 0 else j for k in range(m))


@dataclass(frozen=True)
class Params:
    """Values substituted for t, t1, t2 in the relations (symbolic by default)."""

    t: ParamScalar = T
    t1: ParamScalar = T1
    t2: ParamScalar = T2

    @classmethod
    def specialized(cls, assignment: Mapping[str, object], allow_zero: bool = False) -> "Params":
        vals = {k: scalar(v) for k, v in assignment.items()}
        for k in vals:
            if k not in ("t", "t1", "t2"):
                raise KeyError(f"unknown parameter {k!r}")
            if not allow_zero and not vals[k]:
                raise ValueError(f"{k}=0 is a degenerate specialisation; pass allow_zero to force it")
        return cls(vals.get("t", T), vals.get("t1", T1), vals.get("t2", T2))

    def is_symbolic(self) -> bool:
        return (self.t, self.t1, self.t2) == (T, T1, T2)


SYMBOLIC = Params()


def braid_relation(i: int, j: int, m, params: Params = SYMBOLIC) -> NCPoly | None:
    """The relation whose leading word is the alternating word i j i ... of length m."""
    if m == INF:
        return None
    lead = alternating(i, j, m)
    if m == 5:
        lower = {alternating(i, j, 3): params.t1, word(i): -params.t2}
    else:
        # m = 3: t*p_i, m = 4: t*p_i p_j, m >= 6: t*Alt(i, j, m - 2)
        lower = {alternating(i, j, m - 2): params.t}
    terms = {lead: ParamScalar(1)}
    for w, c in lower.items():
        terms[w] = -c
    return NCPoly(terms)


def relations(g: CoxGraph, params: Params = SYMBOLIC) -> list[NCPoly]:
    """Defining relations: idempotents, commutations for non-edges, braid relations."""
    rels = []
    for k in range(1, g.n + 1):
        rels.append(NCPoly({word(k, k): 1, word(k): -1}))
    labels = g.edge_map()
    for i in range(1, g.n + 1):
        for j in range(i + 1, g.n + 1):
            m = labels.get((i, j))
            if m is None:
                rels.append(NCPoly({word(i, j): 1, word(j, i): -1}))
                continue
            for a, b in ((i, j), (j, i)):
                r = braid_relation(a, b, m, params)
                if r is not None:
                    rels.append(r)
    return rels


# -- surgeries ---------------------------------------------------------------------

def add_leaf(g: CoxGraph, attach_at: int, m=3) -> CoxGraph:
    if not 1 <= attach_at <= g.n:
        raise GraphError(f"vertex {attach_at} not in 1..{g.n}")
    return CoxGraph.build(g.n + 1, list(g.edges) + [(attach_at, g.n + 1, m)])


def add_edge(g: CoxGraph, i: int, j: int, m=3) -> CoxGraph:
    if i == j:
        raise GraphError(f"loop at vertex {i}")
    if not (1 <= i <= g.n and 1 <= j <= g.n):
        raise GraphError(f"vertex outside 1..{g.n}")
    if (min(i, j), max(i, j)) in g.edge_map():
        raise GraphError(f"edge ({i}, {j}) already present")
    return CoxGraph.build(g.n, list(g.edges) + [(i, j, m)])


def split_vertex(g: CoxGraph, v: int, part1: Iterable[int], part2: Iterable[int]) -> CoxGraph:
    """Replace v by an edge {v, n+1}; neighbours in part1 stay on v, part2 move to n+1.

    Edge labels travel with the moved edges; the new edge is labelled 3.
    """
    if not 1 <= v <= g.n:
        raise GraphError(f"vertex {v} not in 1..{g.n}")
    p1, p2 = set(part1), set(part2)
    nbrs = set(g.neighbors(v))
    if p1 & p2 or (p1 | p2) != nbrs:
        raise GraphError(f"({sorted(p1)}, {sorted(p2)}) is not a partition of the neighbours {sorted(nbrs)} of {v}")
    new = g.n + 1
    edges = []
    for i, j, m in g.edges:
        if v in (i, j):
            u = j if i == v else i
            edges.append((u, new if u in p2 else v, m))
        else:
            edges.append((i, j, m))
    edges.append((v, new, 3))
    return CoxGraph.build(new, edges)


def relabel(g: CoxGraph, perm: Mapping[int, int]) -> CoxGraph:
    return CoxGraph.build(g.n, [(perm[i], perm[j], m) for i, j, m in g.edges], g.name)
