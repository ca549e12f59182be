"""Graphs built from first principles: incidence geometries and sporadic constructions."""

from __future__ import annotations

from itertools import combinations

from ..graphcore import Graph, circulant, complement, complete_bipartite, kneser, line_graph
from .field import FiniteField


def _incidence(n_points: int, blocks: list[frozenset[int]]) -> Graph:
    """Points 0..n_points-1 followed by one vertex per block."""
    edges = [(p, n_points + j) for j, b in enumerate(blocks) for p in b]
    return Graph.from_edges(n_points + len(blocks), edges)


def pg_incidence(q: int) -> Graph:
    """Point-line incidence graph of the Desarguesian plane PG(2,q)."""
    F = FiniteField(q)
    pts = F.projective_points(2)
    # lines are the same normalized vectors, with incidence u.v = 0
    blocks = [frozenset(i for i, p in enumerate(pts) if F.dot(p, line) == 0) for line in pts]
    return _incidence(len(pts), blocks)


def _symplectic(F: FiniteField, u, v) -> int:
    # x0 y1 - x1 y0 + x2 y3 - x3 y2
    m, a = F.mul, F.add
    s = a[m[u[0]][v[1]]][F.neg(m[u[1]][v[0]])]
    s = a[s][m[u[2]][v[3]]]
    return a[s][F.neg(m[u[3]][v[2]])]


def gq_incidence(q: int) -> Graph:
    """Incidence graph of the symplectic quadrangle W(q), a GQ(q,q).

    Points are all points of PG(3,q); lines are the totally isotropic lines of
    the form x0 y1 - x1 y0 + x2 y3 - x3 y2.
    """
    F = FiniteField(q)
    pts = F.projective_points(3)
    index = {p: i for i, p in enumerate(pts)}
    lines: dict[frozenset[int], None] = {}
    for i, u in enumerate(pts):
        for j in range(i + 1, len(pts)):
            v = pts[j]
            if _symplectic(F, u, v):
                continue
            span = {i, j}
            for a in range(1, q):
                # u + a v and the other combinations, up to scalars
                w = tuple(F.add[x][F.mul[a][y]] for x, y in zip(u, v))
                span.add(index[F.normalize(w)])
            key = frozenset(span)
            if min(key) == i and sorted(key)[1] == j:
                lines[key] = None
    blocks = sorted(lines, key=sorted)
    return _incidence(len(pts), blocks)


def petersen() -> Graph:
    return kneser(5, 2)


def odd_graph_4() -> Graph:
    """The odd graph O_4: 3-subsets of a 7-set, adjacent when disjoint."""
    return kneser(7, 3)


def ci10_14() -> Graph:
    return circulant(10, [1, 4])


def complement_line_K2m(m: int) -> Graph:
    """Complement of the line graph of K_{2,m}; (m-1)-regular on 2m vertices."""
    return complement(line_graph(complete_bipartite(2, m)))


def clebsch() -> Graph:
    """Folded 5-cube: 4-bit words, adjacent when they differ in one bit or are complements."""
    edges = [(u, v) for u, v in combinations(range(16), 2) if (u ^ v).bit_count() in (1, 4)]
    return Graph.from_edges(16, edges)


def hoffman_singleton() -> Graph:
    """Five pentagons P_h and five pentagrams Q_i; vertex (h, j) of P_h meets (i, h*i + j) of Q_i."""

    def P(h, j):
        return 5 * h + j

    def Q(i, j):
        return 25 + 5 * i + j

    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((P(h, j), P(h, (j + 1) % 5)))
            edges.append((Q(h, j), Q(h, (j + 2) % 5)))
            for i in range(5):
                edges.append((P(h, j), Q(i, (h * i + j) % 5)))
    return Graph.from_edges(50, edges)


def schlafli_complement() -> Graph:
    """Intersection graph of the 27 lines on a cubic surface.

    Lines a_i, b_i (i < 6) and c_ij; a_i meets b_j (i != j) and c_ij, b_i
    likewise, and c_ij meets c_kl when {i,j} and {k,l} are disjoint.
    """
    pairs = list(combinations(range(6), 2))
    a = {i: i for i in range(6)}
    b = {i: 6 + i for i in range(6)}
    c = {pr: 12 + n for n, pr in enumerate(pairs)}
    edges = []
    for i in range(6):
        for j in range(6):
            if i != j:
                edges.append((a[i], b[j]))
        for pr in pairs:
            if i in pr:
                edges.append((a[i], c[pr]))
                edges.append((b[i], c[pr]))
    for p1, p2 in combinations(pairs, 2):
        if not set(p1) & set(p2):
            edges.append((c[p1], c[p2]))
    return Graph.from_edges(27, sorted({tuple(sorted(e)) for e in edges}))
