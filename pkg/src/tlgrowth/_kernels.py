"""Hot loops over automaton transition tables.

Each kernel exists twice: a numba ``@njit`` version and a pure numpy/Python
fallback.  ``TLGROWTH_NUMBA=0`` (or numba being absent) selects the fallback;
``set_backend`` switches at runtime, which the benchmark and tests use to run
both paths on identical inputs.

Transition tables are ``int32`` arrays of shape (states, letters) with ``-1``
for the dead state.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

# counts above this are handed over to exact Python integers
_OVERFLOW_GUARD = np.int64(1) << np.int64(60)


def _env_wants_numba() -> bool:
    return os.environ.get("TLGROWTH_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")


_use_numba = HAVE_NUMBA and _env_wants_numba()


def backend() -> str:
    return "numba" if _use_numba else "numpy"


def set_backend(name: str) -> None:
    global _use_numba
    if name == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba is not installed")
        _use_numba = True
    elif name == "numpy":
        _use_numba = False
    else:
        raise ValueError(f"unknown backend {name!r}")


# -- graded counting ---------------------------------------------------------------

def _count_int64_py(trans, start, max_degree, out):
    """Fill ``out[k]`` with the number of live paths of length k from ``start``.

    Stops early on overflow risk or when every count has died out; returns
    (degrees filled, state vector at that degree).
    """
    n_states, n_letters = trans.shape
    vec = np.zeros(n_states, dtype=np.int64)
    vec[start] = 1
    k = 0
    while k <= max_degree:
        total = np.int64(0)
        big = False
        for s in range(n_states):
            total += vec[s]
            if vec[s] > _OVERFLOW_GUARD:
                big = True
        if big or total > _OVERFLOW_GUARD:
            return k, vec
        out[k] = total
        if total == 0:
            return max_degree + 1, vec
        nxt = np.zeros(n_states, dtype=np.int64)
        for s in range(n_states):
            c = vec[s]
            if c == 0:
                continue
            for a in range(n_letters):
                t = trans[s, a]
                if t >= 0:
                    nxt[t] += c
        vec = nxt
        k += 1
    return k, vec


def _step_numpy(src, dst, vec, n_states):
    """One transfer-matrix step using scatter-add (works for int64 and object)."""
    nxt = np.zeros(n_states, dtype=vec.dtype)
    if vec.dtype == object:
        nxt[:] = 0
    np.add.at(nxt, dst, vec[src])
    return nxt


def _count_int64_numpy(trans, start, max_degree, out):
    n_states = trans.shape[0]
    src, let = np.nonzero(trans >= 0)
    dst = trans[src, let]
    vec = np.zeros(n_states, dtype=np.int64)
    vec[start] = 1
    k = 0
    while k <= max_degree:
        total = int(vec.sum())
        if total > int(_OVERFLOW_GUARD) or (vec > _OVERFLOW_GUARD).any():
            return k, vec
        out[k] = total
        if total == 0:
            return max_degree + 1, vec
        vec = _step_numpy(src, dst, vec, n_states)
        k += 1
    return k, vec


if HAVE_NUMBA:
    _count_int64_jit = njit(cache=False, nogil=True)(_count_int64_py)


def graded_counts(trans: np.ndarray, start: int, max_degree: int) -> list[int]:
    """Exact counts of live paths of each length 0..max_degree."""
    out = np.zeros(max_degree + 1, dtype=np.int64)
    trans = np.ascontiguousarray(trans, dtype=np.int32)
    if _use_numba:
        reached, vec = _count_int64_jit(trans, start, max_degree, out)
    else:
        reached, vec = _count_int64_numpy(trans, start, max_degree, out)
    result = [int(x) for x in out[: min(reached, max_degree + 1)]]
    if reached > max_degree:
        return result + [0] * (max_degree + 1 - len(result))
    # exact continuation with Python integers
    src, let = np.nonzero(trans >= 0)
    dst = trans[src, let]
    big = np.array([int(x) for x in vec], dtype=object)
    n_states = trans.shape[0]
    for _ in range(reached, max_degree + 1):
        result.append(int(sum(big)))
        big = _step_numpy(src, dst, big, n_states)
    return result


# -- strongly connected components -------------------------------------------------

def _scc_py(trans, active):
    """Iterative Tarjan over states with ``active[s]``; returns component ids (-1 = inactive)."""
    n_states, n_letters = trans.shape
    index = np.full(n_states, -1, dtype=np.int64)
    low = np.zeros(n_states, dtype=np.int64)
    comp = np.full(n_states, -1, dtype=np.int64)
    onstack = np.zeros(n_states, dtype=np.bool_)
    stack = np.zeros(n_states, dtype=np.int64)
    sp = 0
    call_v = np.zeros(n_states, dtype=np.int64)
    call_a = np.zeros(n_states, dtype=np.int64)
    counter = 0
    ncomp = 0
    for root in range(n_states):
        if not active[root] or index[root] >= 0:
            continue
        depth = 0
        call_v[0] = root
        call_a[0] = 0
        index[root] = counter
        low[root] = counter
        counter += 1
        stack[sp] = root
        sp += 1
        onstack[root] = True
        while depth >= 0:
            v = call_v[depth]
            a = call_a[depth]
            if a < n_letters:
                call_a[depth] = a + 1
                w = trans[v, a]
                if w < 0 or not active[w]:
                    continue
                if index[w] < 0:
                    index[w] = counter
                    low[w] = counter
                    counter += 1
                    stack[sp] = w
                    sp += 1
                    onstack[w] = True
                    depth += 1
                    call_v[depth] = w
                    call_a[depth] = 0
                elif onstack[w] and index[w] < low[v]:
                    low[v] = index[w]
            else:
                if low[v] == index[v]:
                    while True:
                        sp -= 1
                        x = stack[sp]
                        onstack[x] = False
                        comp[x] = ncomp
                        if x == v:
                            break
                    ncomp += 1
                depth -= 1
                if depth >= 0:
                    u = call_v[depth]
                    if low[v] < low[u]:
                        low[u] = low[v]
    return comp


if HAVE_NUMBA:
    _scc_jit = njit(cache=False, nogil=True)(_scc_py)


def scc(trans: np.ndarray, active: np.ndarray) -> np.ndarray:
    trans = np.ascontiguousarray(trans, dtype=np.int32)
    active = np.ascontiguousarray(active, dtype=np.bool_)
    if _use_numba:
        return _scc_jit(trans, active)
    return _scc_py(trans, active)


# -- reachability ---------------------------------------------------------------------

def _reachable_py(trans, start):
    n_states, n_letters = trans.shape
    seen = np.zeros(n_states, dtype=np.bool_)
    stack = np.zeros(n_states, dtype=np.int64)
    sp = 0
    seen[start] = True
    stack[0] = start
    sp = 1
    while sp > 0:
        sp -= 1
        v = stack[sp]
        for a in range(n_letters):
            w = trans[v, a]
            if w >= 0 and not seen[w]:
                seen[w] = True
                stack[sp] = w
                sp += 1
    return seen


if HAVE_NUMBA:
    _reachable_jit = njit(cache=False, nogil=True)(_reachable_py)


def reachable(trans: np.ndarray, start: int) -> np.ndarray:
    trans = np.ascontiguousarray(trans, dtype=np.int32)
    if _use_numba:
        return _reachable_jit(trans, start)
    return _reachable_py(trans, start)
