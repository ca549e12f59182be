"""Immutable simple graphs on vertices 0..n-1, graph6 and adjacency-list I/O, constructions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbourhood bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError("adjacency has the wrong number of rows")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                raise ValueError(f"bad adjacency row for vertex {v}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v},{u})")
                r ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def regularity(self) -> int | None:
        """Common degree if the graph is regular, else None."""
        d = self.degrees()
        return d[0] if all(x == d[0] for x in d) else None

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled in the given vertex order."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u in vertices for v in self.neighbors(u) if v in index and index[u] < index[v]]
        return Graph.from_edges(len(vertices), edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def adjacency_matrix(self) -> list[list[int]]:
        return [[row >> j & 1 for j in range(self.n)] for row in self.adj]

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [g.adj[j] >> i & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [63 + int("".join(map(str, bits[p:p + 6])), 2) for p in range(0, len(bits), 6)]
    return bytes(head + body).decode("ascii")


def from_graph6(text: str) -> Graph:
    """Parse one graph6 string; an optional ``>>graph6<<`` header is accepted."""
    s = text.strip("\n\r")
    pos = 0
    if s.startswith(">>graph6<<"):
        pos = 10
    data = s.encode("ascii", errors="replace")
    for i in range(pos, len(data)):
        if not 63 <= data[i] <= 126:
            raise Graph6Error(f"byte {data[i]!r} outside the printable range 63..126", i)
    if pos >= len(data):
        raise Graph6Error("missing size header", pos)
    if data[pos] != 126:
        n, pos = data[pos] - 63, pos + 1
    elif pos + 1 < len(data) and data[pos + 1] == 126:
        if pos + 8 > len(data):
            raise Graph6Error("truncated 8-byte size header", len(data))
        n = 0
        for b in data[pos + 2:pos + 8]:
            n = (n << 6) | (b - 63)
        pos += 8
    else:
        if pos + 4 > len(data):
            raise Graph6Error("truncated 4-byte size header", len(data))
        n = 0
        for b in data[pos + 1:pos + 4]:
            n = (n << 6) | (b - 63)
        pos += 4
    if n < 1:
        raise Graph6Error("graph with zero vertices", pos - 1)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {len(body)}", pos + min(len(body), need))
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[idx // 6] - 63
            if byte >> (5 - idx % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits", pos + need - 1)
    return Graph(n, tuple(rows))


def to_adjlist(g: Graph) -> str:
    """Header line with n, then one "u v" pair per line."""
    return "\n".join([f"{g.n}"] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def from_adjlist(text: str, n: int | None = None) -> Graph:
    """Parse "u v" lines (0-indexed); a single-integer first line gives n.

    Blank lines and lines starting with '#' are skipped.
    """
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if lines and len(lines[0]) == 1:
        n = int(lines[0][0]) if n is None else n
        lines = lines[1:]
    edges = []
    for lineno, parts in enumerate(lines, start=1):
        if len(parts) != 2:
            raise ValueError(f"edge line {lineno}: expected 'u v', got {' '.join(parts)!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=0)
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Constructions (vertex orders are fixed so graph6 output is deterministic)
# ---------------------------------------------------------------------------

def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(k: int) -> Graph:
    return complete_bipartite(1, k)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of g in lexicographic order."""
    es = g.edges()
    return Graph.from_edges(len(es), [(i, j) for i, j in combinations(range(len(es)), 2) if set(es[i]) & set(es[j])])


def bipartite_double(g: Graph) -> Graph:
    """g x K2: vertex v splits into v and n+v, with u ~ n+v whenever u ~ v."""
    n = g.n
    edges = []
    for u, v in g.edges():
        edges += [(u, n + v), (v, n + u)]
    return Graph.from_edges(2 * n, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex (a, b) is a*h.n + b."""
    m = h.n
    edges = [(a * m + b, a * m + c) for a in range(g.n) for b, c in h.edges()]
    edges += [(a * m + b, c * m + b) for a, c in g.edges() for b in range(m)]
    return Graph.from_edges(g.n * m, edges)


def circulant(n: int, connection: Iterable[int]) -> Graph:
    s = {d % n for d in connection} | {-d % n for d in connection}
    if 0 in s:
        raise ValueError("connection set may not contain 0 mod n")
    return Graph.from_edges(n, {tuple(sorted((i, (i + d) % n))) for i in range(n) for d in s})


def kneser(m: int, r: int) -> Graph:
    """r-subsets of range(m) in lexicographic order, adjacent when disjoint."""
    subsets = [frozenset(c) for c in combinations(range(m), r)]
    return Graph.from_edges(len(subsets), [(i, j) for i, j in combinations(range(len(subsets)), 2) if not subsets[i] & subsets[j]])


def lcf(n: int, jumps: Sequence[int], repeat: int) -> Graph:
    """Hamiltonian cycle 0..n-1 plus chords i ~ i + jumps[i mod len] (LCF notation)."""
    seq = list(jumps) * repeat
    if len(seq) != n:
        raise ValueError("LCF jumps times repeat must equal n")
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    edges |= {tuple(sorted((i, (i + j) % n))) for i, j in enumerate(seq)}
    return Graph.from_edges(n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph.from_edges(g.n + h.n, g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()])
