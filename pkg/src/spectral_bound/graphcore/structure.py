"""Girth, distance partitions, quotient matrices and the order bounds derived from them."""

from __future__ import annotations

import math
from functools import cmp_to_key
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DomainError
from ..exactnum import AlgebraicReal, IntPoly, compare, real_roots, sqrt
from ..exactnum.linalg import berkowitz
from ..exactnum.scalars import Scalar, as_scalar
from ..lpbound import TridiagParams, tridiag_matrix
from .graph import Graph, _bits


def bfs_distances(g: Graph, source: int | Iterable[int]) -> list[int | None]:
    """Distance from a vertex (or set of vertices) to every vertex; None if unreachable."""
    seeds = [source] if isinstance(source, int) else list(source)
    dist: list[int | None] = [None] * g.n
    seen = 0
    for s in seeds:
        dist[s] = 0
        seen |= 1 << s
    frontier, d = seen, 0
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        for v in _bits(frontier):
            dist[v] = d
    return dist


def components(g: Graph) -> list[list[int]]:
    left = set(range(g.n))
    out = []
    while left:
        d = bfs_distances(g, min(left))
        comp = [v for v in range(g.n) if d[v] is not None]
        out.append(comp)
        left -= set(comp)
    return out


def girth(g: Graph) -> float | int:
    """Length of a shortest cycle, or math.inf for a forest."""
    best = math.inf
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = [s]
        for u in queue:
            if 2 * dist[u] + 1 >= best:
                break
            for w in _bits(g.adj[u]):
                if dist[w] < 0:
                    dist[w], parent[w] = dist[u] + 1, u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def shortest_cycle(g: Graph) -> list[int] | None:
    """Vertices of one shortest cycle in order, or None for a forest."""
    gv = girth(g)
    if gv == math.inf:
        return None
    for s in range(g.n):
        for w in _bits(g.adj[s]):
            # a shortest s-w path avoiding the edge sw closes a girth cycle
            rows = list(g.adj)
            rows[s] &= ~(1 << w)
            rows[w] &= ~(1 << s)
            h = Graph(g.n, tuple(rows))
            d = bfs_distances(h, w)
            if d[s] is not None and d[s] + 1 == gv:
                cyc, v = [s], s
                while v != w:
                    v = next(u for u in _bits(h.adj[v]) if d[u] == d[v] - 1)
                    cyc.append(v)
                return cyc
    raise AssertionError("girth cycle not found")  # pragma: no cover


def distance_partition(g: Graph, seed: int | Iterable[int]) -> list[list[int]]:
    """Layers by distance from the seed set; the graph must be connected."""
    d = bfs_distances(g, seed)
    if any(x is None for x in d):
        raise DomainError("distance_partition needs a connected graph")
    layers: list[list[int]] = [[] for _ in range(max(d) + 1)]
    for v, x in enumerate(d):
        layers[x].append(v)
    return layers


@dataclass(frozen=True)
class QuotientMatrix:
    parts: tuple[tuple[int, ...], ...]
    B: tuple[tuple[Fraction, ...], ...]
    equitable: bool

    def char_poly(self) -> IntPoly:
        """Primitive integer multiple of det(xI - B)."""
        return IntPoly.from_rational(berkowitz([list(r) for r in self.B]))

    def eigenvalues(self) -> list[Scalar]:
        """Eigenvalues of B with multiplicity, largest first."""
        roots = []
        for fac, mult in self.char_poly().squarefree_decomposition():
            roots += [r for r in real_roots(fac) for _ in range(mult)]
        roots.sort(key=cmp_to_key(lambda a, b: compare(b, a)))
        return roots

    def second_eig(self) -> Scalar:
        return self.eigenvalues()[1]


def quotient(g: Graph, parts: Sequence[Iterable[int]]) -> QuotientMatrix:
    """B[i][j] = (edges from part i to part j) / |part i|."""
    ps = [tuple(sorted(p)) for p in parts]
    if any(not p for p in ps):
        raise DomainError("quotient parts must be nonempty")
    flat = sorted(v for p in ps for v in p)
    if flat != list(range(g.n)):
        raise DomainError("parts must partition the vertex set")
    masks = [sum(1 << v for v in p) for p in ps]
    B, equitable = [], True
    for p in ps:
        row = []
        for m in masks:
            counts = [(g.adj[v] & m).bit_count() for v in p]
            if len(set(counts)) > 1:
                equitable = False
            row.append(Fraction(sum(counts), len(p)))
        B.append(tuple(row))
    return QuotientMatrix(tuple(ps), tuple(B), equitable)


@dataclass(frozen=True)
class ThreePartStats:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    epsilon: Fraction
    Delta: Fraction
    lambda2Q: Scalar


def three_part_stats(alpha, beta, gamma, epsilon) -> ThreePartStats:
    """Closed form for the second eigenvalue of the quotient on {V(H), Gamma_1, Gamma_>=2}.

    alpha and beta are the average degrees inside H and inside the far part,
    gamma and epsilon the average numbers of neighbours a vertex of Gamma_1 has
    in H and in the far part.
    """
    a, b, c, e = (Fraction(x) for x in (alpha, beta, gamma, epsilon))
    s = a + b - (c + e)
    delta = s * s - 4 * (a * b - b * c - a * e)
    if delta < 0:
        raise DomainError("negative discriminant: parameters are not from a quotient matrix")
    return ThreePartStats(a, b, c, e, delta, (s + sqrt(delta)) / 2)


def three_part_lambda2(alpha, beta, gamma, epsilon) -> Scalar:
    return three_part_stats(alpha, beta, gamma, epsilon).lambda2Q


def subgraph_order_bound(k: int, lam, s: int, edges: int) -> Scalar:
    """s + (2k - lambda - 1)/(k - lambda) * (k s - 2 edges) for an induced H with s vertices."""
    lam = as_scalar(lam)
    if isinstance(lam, AlgebraicReal):
        raise DomainError("subgraph_order_bound supports rational and quadratic lambda")
    if compare(lam, k) >= 0:
        raise DomainError("need lambda < k")
    if s < 1 or not 0 <= edges <= s * (s - 1) // 2:
        raise DomainError("need s >= 1 and 0 <= edges <= s(s-1)/2")
    return (2 * k - lam - 1) / (k - lam) * (k * s - 2 * edges) + s


def is_drg_with_array(g: Graph, c) -> bool:
    """Is every vertex's distance partition equitable with quotient T(k, t, c), t = eccentricity + 1?"""
    k = g.regularity()
    if k is None:
        raise DomainError("is_drg_with_array needs a regular graph")
    c = as_scalar(c)
    expected: dict[int, list[list]] = {}
    for v in range(g.n):
        try:
            layers = distance_partition(g, v)
        except DomainError:
            return False
        t = len(layers)
        if t < 2:
            return False
        if t not in expected:
            expected[t] = [list(r) for r in tridiag_matrix(TridiagParams(k, t, c))]
        q = quotient(g, layers)
        if not q.equitable or [list(r) for r in q.B] != expected[t]:
            return False
    return True


def drg_t(g: Graph, c) -> int | None:
    """The t of is_drg_with_array when it holds, else None."""
    if not is_drg_with_array(g, c):
        return None
    return len(distance_partition(g, 0))
