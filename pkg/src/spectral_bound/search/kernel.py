"""Compiled orderly generation of connected k-regular graphs.

Vertices are added one at a time.  Vertex q is encoded by its column, the
bitmask of its neighbours among 0..q-1, and a labelled graph is canonical
when its sequence of columns is maximal over all relabellings (columns
compared in order, and inside a column a lower bit is more significant).
Every prefix of a canonical graph is canonical, so each canonical graph is
produced exactly once from its canonical parent.

All bitmasks are int64; bit 63 works through two's-complement wraparound.
"""

from __future__ import annotations

import numpy as np
from numba import njit

ONE = np.int64(1)
MAX_GENERATORS = 48
BAND = 1e-6

# output flags
FLAG_PASS = 0
FLAG_UNSURE = 1
FLAG_TASK = 2

# statistics slots
STAT_NODES = 0
STAT_NONCANON = 1
STAT_LAMBDA_PRUNED = 2
STAT_LEAVES = 3
N_STATS = 4


@njit(cache=True)
def _greater(a, b):
    """True if column a beats column b (the lowest differing bit is set in a)."""
    x = a ^ b
    if x == 0:
        return False
    return (a & (x & (~x + ONE))) != 0


@njit(cache=True)
def _in_orbit(v, tried, ntried, gens, ng, prefix, p, n, seen, stack):
    """Is v in the orbit of a tried candidate under stored automorphisms fixing the prefix?"""
    # generators that fix every prefix vertex
    usable = np.empty(ng, np.int64)
    nu = 0
    for g in range(ng):
        ok = True
        for i in range(p):
            u = prefix[i]
            if gens[g, u] != u:
                ok = False
                break
        if ok:
            usable[nu] = g
            nu += 1
    if nu == 0:
        return False
    for i in range(n):
        seen[i] = False
    top = 0
    seen[v] = True
    stack[0] = v
    top = 1
    while top > 0:
        top -= 1
        w = stack[top]
        for j in range(ntried):
            if tried[j] == w:
                return True
        for gi in range(nu):
            x = gens[usable[gi], w]
            if not seen[x]:
                seen[x] = True
                stack[top] = x
                top += 1
    return False


@njit(cache=True)
def is_canonical(adj, n):
    """Is the column code of the labelled graph maximal over all relabellings?"""
    oc = np.empty(n, np.int64)
    for p in range(n):
        oc[p] = adj[p] & ((ONE << p) - ONE)
    perm = np.empty(n, np.int64)
    placed = np.zeros(n, np.bool_)
    col = np.zeros(n, np.int64)
    cand = np.empty((n, n), np.int64)
    ncand = np.zeros(n, np.int64)
    ci = np.zeros(n, np.int64)
    gens = np.empty((MAX_GENERATORS, n), np.int64)
    ng = 0
    seen = np.zeros(n, np.bool_)
    stack = np.empty(n, np.int64)

    # candidates for position 0: every vertex (all columns are empty)
    for w in range(n):
        cand[0, w] = w
    ncand[0] = n
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
                # all columns equal: perm is an automorphism
                ident = True
                for i in range(n):
                    if perm[i] != i:
                        ident = False
                        break
                if not ident and ng < MAX_GENERATORS:
                    for i in range(n):
                        gens[ng, i] = perm[i]
                    ng += 1
                placed[v] = False
                continue
            # enter the next position
            q = p + 1
            cnt = 0
            for w in range(n):
                if placed[w]:
                    continue
                if col[w] == oc[q]:
                    cand[q, cnt] = w
                    cnt += 1
                elif _greater(col[w], oc[q]):
                    return False
            if cnt == 0:
                # dead end: undo this placement
                for w in range(n):
                    if not placed[w] and (nb >> w) & ONE:
                        col[w] &= ~bit
                placed[v] = False
                continue
            ncand[q] = cnt
            ci[q] = 0
            p = q
        else:
            if p == 0:
                return True
            p -= 1
            v = perm[p]
            bit = ONE << p
            nb = adj[v]
            for w in range(n):
                if not placed[w] and (nb >> w) & ONE:
                    col[w] &= ~bit
            placed[v] = False


@njit(cache=True)
def _popcount(x):
    c = 0
    while x != 0:
        x &= x - ONE
        c += 1
    return c


@njit(cache=True)
def _eigs(adj, m):
    A = np.zeros((m, m))
    for i in range(m):
        for j in range(m):
            if (adj[i] >> j) & ONE:
                A[i, j] = 1.0
    return np.linalg.eigvalsh(A)


@njit(cache=True)
def _girth(adj, n):
    best = n + 1
    dist = np.empty(n, np.int64)
    parent = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    for s in range(n):
        for i in range(n):
            dist[i] = -1
        dist[s] = 0
        parent[s] = -1
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            if 2 * dist[u] + 1 >= best:
                break
            for w in range(n):
                if (adj[u] >> w) & ONE:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue[tail] = w
                        tail += 1
                    elif w != parent[u]:
                        c = dist[u] + dist[w] + 1
                        if c < best:
                            best = c
    return best


@njit(cache=True)
def _push(out_adj, out_flag, nout, adj, n, flag):
    if nout >= out_adj.shape[0]:
        bigger = np.zeros((2 * out_adj.shape[0], out_adj.shape[1]), np.int64)
        bigger[: out_adj.shape[0]] = out_adj
        flags = np.zeros(2 * out_adj.shape[0], np.int8)
        flags[: out_adj.shape[0]] = out_flag
        out_adj = bigger
        out_flag = flags
    for i in range(n):
        out_adj[nout, i] = adj[i]
    out_flag[nout] = flag
    return out_adj, out_flag, nout + 1


@njit(cache=True)
def run(n, k, girth_min, girth_exact, lam_hi, lam_lo, lam_prune, collect, init_adj, m0, split_at):
    """Extend the canonical graph on vertices 0..m0-1 in init_adj to all canonical completions.

    lam_hi / lam_lo give the window lam_lo < lambda_2 <= lam_hi (use +-inf to disable).
    Children reaching split_at vertices (if m0 < split_at < n) are emitted as tasks.
    Returns (out_adj, out_flag, nout, leaves, passes, stats): leaves meet the structural
    constraints, passes also meet the lambda window with certainty.
    """
    INF = n + 5
    adj = np.zeros(n, np.int64)
    deg = np.zeros(n, np.int64)
    for i in range(m0):
        adj[i] = init_adj[i]
    for i in range(m0):
        deg[i] = _popcount(adj[i])
    deficit = 0
    for i in range(m0):
        deficit += k - deg[i]

    # distance matrices per level (only needed when girth_min > 3)
    use_dist = girth_min > 3
    dsz = n + 1 if use_dist else 1
    dn = n if use_dist else 1
    dist = np.full((dsz, dn, dn), INF, np.int64)
    if use_dist:
        for s in range(m0):
            dist[m0, s, s] = 0
            frontier = ONE << s
            seen = frontier
            d = 0
            while frontier != 0:
                d += 1
                nxt = np.int64(0)
                for v in range(m0):
                    if (frontier >> v) & ONE:
                        nxt |= adj[v]
                frontier = nxt & ~seen
                seen |= frontier
                for v in range(m0):
                    if (frontier >> v) & ONE:
                        dist[m0, s, v] = d

    maxc = 1
    c = 1
    for r in range(1, k):
        c = c * (n - r) // r
        maxc += c
    cands = np.empty((n + 1, maxc), np.int64)
    ncands = np.zeros(n + 1, np.int64)
    idx = np.zeros(n + 1, np.int64)
    opens = np.empty(n, np.int64)
    comb = np.empty(k, np.int64)

    out_adj = np.zeros((64, n), np.int64)
    out_flag = np.zeros(64, np.int8)
    nout = 0
    stats = np.zeros(N_STATS, np.int64)
    leaves = 0
    passes = 0

    m = m0
    if m0 >= n:
        return out_adj, out_flag, nout, leaves, passes, stats
    fresh = True
    while True:
        if fresh:
            # build candidate columns for vertex m
            no = 0
            for v in range(m):
                if deg[v] < k:
                    opens[no] = v
                    no += 1
            cnt = 0
            if no > 0:
                prev = adj[m - 1] & ((ONE << (m - 1)) - ONE) if m >= 1 else np.int64(0)
                low = (ONE << (m - 1)) - ONE if m >= 1 else np.int64(0)
                rest = n - m - 1
                # choose j0 plus r others from opens[1:]
                for r in range(0, min(k, no)):
                    for i in range(r):
                        comb[i] = i + 1
                    while True:
                        S = ONE << opens[0]
                        for i in range(r):
                            S |= ONE << opens[comb[i]]
                        ok = True
                        if m >= 2 and _greater(S & low, prev):
                            ok = False
                        if ok and use_dist:
                            for a in range(no):
                                va = opens[a]
                                if not (S >> va) & ONE:
                                    continue
                                for b in range(a + 1, no):
                                    vb = opens[b]
                                    if (S >> vb) & ONE and dist[m, va, vb] < girth_min - 2:
                                        ok = False
                                        break
                                if not ok:
                                    break
                        if ok:
                            size = r + 1
                            nd = deficit + k - 2 * size
                            if rest == 0:
                                ok = nd == 0
                            else:
                                if nd <= 0 or nd > rest * k or (rest * k - nd) % 2 != 0 or k - size > rest:
                                    ok = False
                                else:
                                    for a in range(no):
                                        e = k - deg[opens[a]] - ((S >> opens[a]) & ONE)
                                        if e > rest:
                                            ok = False
                                            break
                        if ok:
                            cands[m, cnt] = S
                            cnt += 1
                        # next combination of r elements from 1..no-1
                        if r == 0:
                            break
                        i = r - 1
                        while i >= 0 and comb[i] == no - r + i:
                            i -= 1
                        if i < 0:
                            break
                        comb[i] += 1
                        for j in range(i + 1, r):
                            comb[j] = comb[j - 1] + 1
            ncands[m] = cnt
            idx[m] = 0
            fresh = False

        if idx[m] < ncands[m]:
            S = cands[m, idx[m]]
            idx[m] += 1
            # apply vertex m
            adj[m] = S
            size = 0
            for v in range(m):
                if (S >> v) & ONE:
                    adj[v] |= ONE << m
                    deg[v] += 1
                    size += 1
            deg[m] = size
            deficit += k - 2 * size
            keep = is_canonical(adj, m + 1)
            if not keep:
                stats[STAT_NONCANON] += 1
            elif lam_prune and m + 1 >= 2:
                ev = _eigs(adj, m + 1)
                if ev[m - 1] > lam_hi + BAND:
                    keep = False
                    stats[STAT_LAMBDA_PRUNED] += 1
            descend = False
            if keep:
                stats[STAT_NODES] += 1
                if m + 1 == n:
                    if girth_exact <= 0 or _girth(adj, n) == girth_exact:
                        leaves += 1
                        stats[STAT_LEAVES] += 1
                        ok = True
                        flag = FLAG_PASS
                        if lam_hi < 1e300 or lam_lo > -1e300:
                            ev = _eigs(adj, n)
                            l2 = ev[n - 2]
                            if l2 > lam_hi + BAND or l2 < lam_lo - BAND:
                                ok = False
                            elif l2 > lam_hi - BAND or l2 < lam_lo + BAND:
                                flag = FLAG_UNSURE
                        if ok and flag == FLAG_PASS:
                            passes += 1
                        if ok and (collect or flag == FLAG_UNSURE):
                            out_adj, out_flag, nout = _push(out_adj, out_flag, nout, adj, n, flag)
                elif m + 1 == split_at and split_at > m0:
                    out_adj, out_flag, nout = _push(out_adj, out_flag, nout, adj, m + 1, FLAG_TASK)
                else:
                    descend = True
            if descend:
                if use_dist:
                    for a in range(m):
                        dist[m + 1, a, m] = INF
                        dist[m + 1, m, a] = INF
                    dist[m + 1, m, m] = 0
                    for a in range(m):
                        best = INF
                        for v in range(m):
                            if (S >> v) & ONE:
                                d = dist[m, v, a] + 1
                                if d < best:
                                    best = d
                        dist[m + 1, m, a] = best
                        dist[m + 1, a, m] = best
                    for a in range(m):
                        for b in range(m):
                            d = dist[m + 1, a, m] + dist[m + 1, m, b]
                            o = dist[m, a, b]
                            dist[m + 1, a, b] = d if d < o else o
                m += 1
                fresh = True
                continue
            # undo vertex m
            for v in range(m):
                if (S >> v) & ONE:
                    adj[v] &= ~(ONE << m)
                    deg[v] -= 1
            deficit -= k - 2 * size
            adj[m] = 0
            deg[m] = 0
        else:
            if m == m0:
                break
            m -= 1
            S = adj[m]
            size = 0
            for v in range(m):
                if (S >> v) & ONE:
                    adj[v] &= ~(ONE << m)
                    deg[v] -= 1
                    size += 1
            deficit -= k - 2 * size
            adj[m] = 0
            deg[m] = 0
    return out_adj, out_flag, nout, leaves, passes, stats
