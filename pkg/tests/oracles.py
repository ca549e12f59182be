"""Independent constructions used to cross-check certified catalog data."""

from __future__ import annotations

from itertools import combinations

from spectral_bound.graphcore import Graph, lcf

GOLAY_GENERATOR = 0b110001110101  # x^11+x^10+x^6+x^5+x^4+x^2+1, bit i = coefficient of x^i


def golay_codewords() -> list[int]:
    """All 4096 words of the extended binary Golay code on 24 coordinates."""
    basis = [GOLAY_GENERATOR << i for i in range(12)]
    words = []
    for mask in range(1 << 12):
        w = 0
        for i in range(12):
            if mask >> i & 1:
                w ^= basis[i]
        if w.bit_count() % 2:
            w |= 1 << 23
        words.append(w)
    return words


def octads() -> list[int]:
    return [w for w in golay_codewords() if w.bit_count() == 8]


def hexads(a: int = 22, b: int = 23) -> list[int]:
    """Blocks of S(3,6,22): octads through a and b, with a and b removed."""
    out = []
    for o in octads():
        if o >> a & 1 and o >> b & 1:
            out.append(o & ~(1 << a) & ~(1 << b))
    return sorted(out)


def m22_graph() -> Graph:
    hs = hexads()
    return Graph.from_edges(len(hs), [(i, j) for i, j in combinations(range(len(hs)), 2) if not hs[i] & hs[j]])


def gewirtz() -> Graph:
    hs = [h for h in hexads() if not h & 1]
    return Graph.from_edges(len(hs), [(i, j) for i, j in combinations(range(len(hs)), 2) if not hs[i] & hs[j]])


def higman_sims() -> Graph:
    """Vertex 0, the 22 points, and the 77 hexads."""
    hs = hexads()
    edges = [(0, 1 + p) for p in range(22)]
    for j, h in enumerate(hs):
        edges += [(1 + p, 23 + j) for p in range(22) if h >> p & 1]
    edges += [(23 + i, 23 + j) for i, j in combinations(range(len(hs)), 2) if not hs[i] & hs[j]]
    return Graph.from_edges(100, edges)


def heawood() -> Graph:
    return lcf(14, [5, -5], 7)


def pappus() -> Graph:
    return lcf(18, [5, 7, -7, 7, -7, -5], 3)


def mcgee() -> Graph:
    return lcf(24, [12, 7, -7], 8)


def tutte_coxeter() -> Graph:
    return lcf(30, [-13, -9, 7, -7, 9, 13], 5)


def tutte_12cage() -> Graph:
    jumps = [17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21, 57, 11, -21, -57, 59, -17]
    return lcf(126, jumps, 7)
