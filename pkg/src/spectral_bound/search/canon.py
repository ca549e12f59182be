"""Canonical labelling by maximising the column code (branch and bound)."""

from __future__ import annotations

import numpy as np
from numba import njit

from ..errors import DomainError
from ..graphcore import Graph, to_graph6
from .kernel import MAX_GENERATORS, ONE, _greater, _in_orbit

MAX_N = 64


@njit(cache=True)
def canonical_perm(adj, n):
    """Ordering (position -> vertex) whose column code is maximal."""
    best_code = np.zeros(n, np.int64)
    best_perm = np.arange(n)
    have_best = False
    perm = np.empty(n, np.int64)
    placed = np.zeros(n, np.bool_)
    col = np.zeros(n, np.int64)
    cand = np.empty((n, n), np.int64)
    ncand = np.zeros(n, np.int64)
    ci = np.zeros(n, np.int64)
    better = np.zeros(n + 1, np.bool_)  # prefix up to this position beats the best code
    gens = np.empty((MAX_GENERATORS, n), np.int64)
    ng = 0
    seen = np.zeros(n, np.bool_)
    stack = np.empty(n, np.int64)
    code = np.zeros(n, np.int64)

    for w in range(n):
        cand[0, w] = w
    ncand[0] = n
    better[0] = False
    p = 0
    while True:
        if ci[p] < ncand[p]:
            v = cand[p, ci[p]]
            ci[p] += 1
            if ng > 0 and ci[p] > 1:
                if _in_orbit(v, cand[p], ci[p] - 1, gens, ng, perm, p, n, seen, stack):
                    continue
            perm[p] = v
            placed[v] = True
            bit = ONE << p
            nb = adj[v]
            for w in range(n):
                if not placed[w] and (nb >> w) & ONE:
                    col[w] |= bit
            if p == n - 1:
                if not have_best or better[p]:
                    for i in range(n):
                        best_code[i] = code[i]
                        best_perm[i] = perm[i]
                    have_best = True
                    # later leaves compare against the new best
                    for i in range(n + 1):
                        better[i] = False
                elif ng < MAX_GENERATORS:
                    # equal code: best_perm[i] -> perm[i] is an automorphism
                    ident = True
                    for i in range(n):
                        if best_perm[i] != perm[i]:
                            ident = False
                    if not ident:
                        for i in range(n):
                            gens[ng, best_perm[i]] = perm[i]
                        ng += 1
                placed[v] = False
                continue
            q = p + 1
            # the largest available column for position q
            cmax = np.int64(0)
            first = True
            for w in range(n):
                if placed[w]:
                    continue
                if first or _greater(col[w], cmax):
                    cmax = col[w]
                    first = False
            status_better = better[q - 1] or not have_best
            if not status_better:
                if _greater(best_code[q], cmax):
                    for w in range(n):
                        if not placed[w] and (nb >> w) & ONE:
                            col[w] &= ~bit
                    placed[v] = False
                    continue
                status_better = _greater(cmax, best_code[q])
            # code for position q (and position 0 is always empty)
            code[q] = cmax
            better[q] = status_better
            cnt = 0
            for w in range(n):
                if not placed[w] and col[w] == cmax:
                    cand[q, cnt] = w
                    cnt += 1
            ncand[q] = cnt
            ci[q] = 0
            p = q
        else:
            if p == 0:
                break
            p -= 1
            v = perm[p]
            bit = ONE << p
            nb = adj[v]
            for w in range(n):
                if not placed[w] and (nb >> w) & ONE:
                    col[w] &= ~bit
            placed[v] = False
    return best_perm


def canonical_graph(g: Graph) -> Graph:
    if g.n > MAX_N:
        raise DomainError(f"canonical labelling supports at most {MAX_N} vertices, got {g.n}")
    adj = np.array([r if r < (1 << 63) else r - (1 << 64) for r in g.adj], dtype=np.int64)
    perm = canonical_perm(adj, g.n)
    inverse = [0] * g.n
    for pos, v in enumerate(perm.tolist()):
        inverse[v] = pos
    return g.relabel(inverse)


def canonical_graph6(g: Graph) -> str:
    return to_graph6(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_graph6(g) == canonical_graph6(h)
