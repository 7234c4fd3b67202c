"""Normal-word automata, graded counts, growth graphs and growth classes.

Everything here depends only on the set of leading words.  The automaton is
the usual Aho-Corasick construction over the forbidden words with all
"a forbidden word has just ended" states merged into one dead state.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _kernels
from .freealg import Word, format_word

INFINITE = "infinite"


class GrowthError(ValueError):
    pass


# -- growth classes -------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteDimensional:
    dim: int
    kind = "finite"

    def describe(self) -> str:
        return f"finite-dimensional, dim {self.dim}"


@dataclass(frozen=True)
class PolynomialGrowth:
    degree: int
    kind = "polynomial"

    def describe(self) -> str:
        tail = " (linear)" if self.degree == 1 else ""
        return f"polynomial degree {self.degree}{tail}"


@dataclass(frozen=True)
class Exponential:
    kind = "exponential"

    def describe(self) -> str:
        return "exponential"


@dataclass(frozen=True)
class Inconclusive:
    cap: int
    kind = "inconclusive"

    def describe(self) -> str:
        return f"inconclusive (degree cap {self.cap} reached)"


GrowthClass = FiniteDimensional | PolynomialGrowth | Exponential | Inconclusive

# order used by the surgery monotonicity checks
GROWTH_RANK = {"finite": 0, "polynomial": 1, "exponential": 2}


def class_to_json(c: GrowthClass) -> dict:
    out = {"kind": c.kind}
    if isinstance(c, FiniteDimensional):
        out["dim"] = c.dim
    elif isinstance(c, PolynomialGrowth):
        out["degree"] = c.degree
    elif isinstance(c, Inconclusive):
        out["cap"] = c.cap
    return out


# -- automaton ------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class NormalWordAutomaton:
    """Deterministic automaton of normal words.

    ``trans[s, a-1]`` is the state after reading letter ``a`` in state ``s``;
    ``-1`` is the dead state.  State ``s`` corresponds to the word
    ``prefixes[s]``, the longest suffix of the input that is a proper prefix
    of a forbidden word.
    """

    trans: np.ndarray
    prefixes: tuple
    n_generators: int
    start: int = 0

    @property
    def n_states(self) -> int:
        return self.trans.shape[0]

    def run(self, w: Word) -> int:
        s = self.start
        for a in w:
            if not 1 <= a <= self.n_generators:
                raise GrowthError(f"letter {a} outside 1..{self.n_generators}")
            s = int(self.trans[s, a - 1])
            if s < 0:
                return -1
        return s

    def accepts(self, w: Word) -> bool:
        return self.run(w) >= 0

    def live_mask(self) -> np.ndarray:
        """Reachable states from which arbitrarily long normal words continue."""
        reach = _kernels.reachable(self.trans, self.start)
        comp = _kernels.scc(self.trans, reach)
        cyclic = _cyclic_components(self.trans, comp)
        # a state is live iff it can reach a cyclic state
        live = np.zeros(self.n_states, dtype=bool)
        for s in range(self.n_states):
            if comp[s] >= 0 and cyclic[comp[s]]:
                live[s] = True
        rev: list[list[int]] = [[] for _ in range(self.n_states)]
        src, let = np.nonzero(self.trans >= 0)
        for s, a in zip(src.tolist(), let.tolist()):
            rev[int(self.trans[s, a])].append(s)
        queue = deque(np.nonzero(live)[0].tolist())
        while queue:
            v = queue.popleft()
            for u in rev[v]:
                if reach[u] and not live[u]:
                    live[u] = True
                    queue.append(u)
        return live


def build_automaton(leading: Iterable[Word], n_generators: int) -> NormalWordAutomaton:
    """Aho-Corasick automaton accepting exactly the words avoiding ``leading``."""
    forb = set(leading)
    if not forb:
        raise GrowthError("the leading-word set is empty")
    if b"" in forb:
        raise GrowthError("the empty word cannot be forbidden")
    for w in forb:
        if max(w) > n_generators or min(w) < 1:
            raise GrowthError(f"word {format_word(w)} uses a letter outside 1..{n_generators}")

    # trie
    children: list[dict] = [{}]
    prefixes: list[Word] = [b""]
    terminal = [False]
    for w in sorted(forb):
        s = 0
        for a in w:
            nxt = children[s].get(a)
            if nxt is None:
                nxt = len(prefixes)
                children[s][a] = nxt
                children.append({})
                prefixes.append(prefixes[s] + bytes((a,)))
                terminal.append(False)
            s = nxt
        terminal[s] = True

    size = len(prefixes)
    goto = np.full((size, n_generators), -2, dtype=np.int64)
    fail = [0] * size
    dead = terminal[:]
    queue = deque()
    for a in range(1, n_generators + 1):
        c = children[0].get(a)
        if c is None:
            goto[0, a - 1] = 0
        else:
            goto[0, a - 1] = c
            queue.append(c)
    while queue:
        s = queue.popleft()
        dead[s] = dead[s] or dead[fail[s]]
        for a in range(1, n_generators + 1):
            c = children[s].get(a)
            if c is None:
                goto[s, a - 1] = goto[fail[s], a - 1]
            else:
                fail[c] = int(goto[fail[s], a - 1])
                goto[s, a - 1] = c
                queue.append(c)

    # renumber the surviving states, BFS order from the root
    keep = [s for s in range(size) if not dead[s]]
    new_id = {s: i for i, s in enumerate(keep)}
    trans = np.full((len(keep), n_generators), -1, dtype=np.int32)
    for s in keep:
        row = new_id[s]
        for a in range(n_generators):
            t = int(goto[s, a])
            if not dead[t]:
                trans[row, a] = new_id[t]
    return NormalWordAutomaton(trans, tuple(prefixes[s] for s in keep), n_generators)


# -- counting -------------------------------------------------------------------------

def graded_counts(auto: NormalWordAutomaton, max_degree: int) -> list[int]:
    """Number of normal words of each length 0..max_degree (exact integers)."""
    if max_degree < 0:
        raise GrowthError("max_degree must be >= 0")
    return _kernels.graded_counts(auto.trans, auto.start, max_degree)


def _cyclic_components(trans: np.ndarray, comp: np.ndarray) -> np.ndarray:
    """cyclic[c] is True when component c contains at least one edge."""
    ncomp = int(comp.max()) + 1 if comp.size and comp.max() >= 0 else 0
    cyclic = np.zeros(ncomp, dtype=bool)
    src, let = np.nonzero(trans >= 0)
    dst = trans[src, let]
    for s, t in zip(src.tolist(), dst.tolist()):
        c = comp[s]
        if c >= 0 and c == comp[t]:
            cyclic[c] = True
    return cyclic


def total_dimension(auto: NormalWordAutomaton):
    """Total number of normal words, or ``INFINITE``."""
    live = auto.live_mask()
    if live.any():
        return INFINITE
    # acyclic: every normal word has length < number of states
    return sum(graded_counts(auto, auto.n_states))


def classify(auto: NormalWordAutomaton) -> GrowthClass:
    """Growth class read off the cycle structure of the live part."""
    live = auto.live_mask()
    if not live.any():
        return FiniteDimensional(sum(graded_counts(auto, auto.n_states)))
    trans = auto.trans
    comp = _kernels.scc(trans, live)
    ncomp = int(comp.max()) + 1
    size = np.bincount(comp[comp >= 0], minlength=ncomp)
    internal = np.zeros(ncomp, dtype=np.int64)
    dag: list[set] = [set() for _ in range(ncomp)]
    src, let = np.nonzero(trans >= 0)
    dst = trans[src, let]
    for s, t in zip(src.tolist(), dst.tolist()):
        if not (live[s] and live[t]):
            continue
        cs, ct = comp[s], comp[t]
        if cs == ct:
            internal[cs] += 1
        else:
            dag[cs].add(ct)
    # a strongly connected piece that is more than one simple cycle
    if np.any(internal > size):
        return Exponential()
    cyclic = internal > 0
    # Tarjan numbers components in reverse topological order: successors first
    best = np.zeros(ncomp, dtype=np.int64)
    for c in range(ncomp):
        tail = max((best[d] for d in dag[c]), default=0)
        best[c] = tail + (1 if cyclic[c] else 0)
    return PolynomialGrowth(int(best.max()))


# -- growth graph ---------------------------------------------------------------------

@dataclass(frozen=True)
class GrowthGraph:
    """Graph on normal words of length ``ell - 1``."""

    ell: int
    vertices: tuple
    edges: tuple  # pairs of vertex indices

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for u, v in self.edges:
            adj[u].append(v)
        return adj

    def path_counts(self, max_edges: int) -> list[int]:
        """Number of directed paths with k edges, k = 0..max_edges."""
        vec = [1] * len(self.vertices)
        adj = self.adjacency()
        out = []
        for _ in range(max_edges + 1):
            out.append(sum(vec))
            nxt = [0] * len(vec)
            for u, c in enumerate(vec):
                if c:
                    for v in adj[u]:
                        nxt[v] += c
            vec = nxt
        return out

    def cycles(self) -> list[list[int]]:
        """Vertex sets of the non-trivial strongly connected components."""
        n = len(self.vertices)
        trans = np.full((max(n, 1), max(max((len(a) for a in self.adjacency()), default=1), 1)), -1, dtype=np.int32)
        for u, adj in enumerate(self.adjacency()):
            for k, v in enumerate(adj):
                trans[u, k] = v
        if n == 0:
            return []
        comp = _kernels.scc(trans, np.ones(n, dtype=bool))
        cyclic = _cyclic_components(trans, comp)
        groups: dict[int, list[int]] = {}
        for v in range(n):
            if cyclic[comp[v]]:
                groups.setdefault(int(comp[v]), []).append(v)
        return sorted(groups.values())

    def export(self) -> str:
        """One edge per line, ``u -> v`` with vertices as comma-separated indices."""
        names = [format_word(w) for w in self.vertices]
        lines = sorted(f"{names[u]} -> {names[v]}" for u, v in self.edges)
        return "".join(line + "\n" for line in lines)


def normal_words_of_length(auto: NormalWordAutomaton, length: int, limit: int | None = None) -> list[Word]:
    """All normal words of the given length, in lexicographic order."""
    out: list[Word] = []
    trans = auto.trans
    n = auto.n_generators
    stack = [(auto.start, b"")]
    while stack:
        s, w = stack.pop()
        if len(w) == length:
            out.append(w)
            if limit is not None and len(out) > limit:
                raise GrowthError(f"more than {limit} normal words of length {length}")
            continue
        for a in range(n, 0, -1):
            t = int(trans[s, a - 1])
            if t >= 0:
                stack.append((t, w + bytes((a,))))
    return out


def growth_graph(leading: Iterable[Word], n_generators: int, limit: int | None = 200_000) -> GrowthGraph:
    forb = frozenset(leading)
    if not forb:
        raise GrowthError("the leading-word set is empty")
    ell = max(len(w) for w in forb)
    auto = build_automaton(forb, n_generators)
    verts = normal_words_of_length(auto, ell - 1, limit)
    pos = {w: i for i, w in enumerate(verts)}
    edges = []
    for i, u in enumerate(verts):
        for y in range(1, n_generators + 1):
            # with ell = 1 the only vertex is the empty word and edges are loops
            v = (u + bytes((y,)))[1:] if ell > 1 else b""
            j = pos.get(v)
            # u and v are normal, so only a forbidden word spanning u.y matters
            if j is not None and u + bytes((y,)) not in forb:
                edges.append((i, j))
    return GrowthGraph(ell, tuple(verts), tuple(edges))


def counts_csv(counts: list[int]) -> str:
    return "degree,count\n" + "".join(f"{k},{c}\n" for k, c in enumerate(counts))
