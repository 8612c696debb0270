"""Simple graphs, bipartite graphs, and small-scale subgraph predicates.

Vertices are 0..n-1.  Adjacency is kept as one bitmask per vertex, which
keeps the exhaustive searches in this package fast without numpy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple, Optional

from ._text import content_lines
from .errors import FormatError
from .gf2 import BitMatrix


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """A simple undirected graph on vertices 0..n-1 (no loops)."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self.adj = [0] * n
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex out of range: {u},{v}")
        if u == v:
            raise ValueError("loops are not allowed")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return _popcount(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edge_list(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(_popcount(a) for a in self.adj) // 2

    def copy(self) -> "Graph":
        g = Graph(self.n)
        g.adj = list(self.adj)
        return g

    def delete_vertex(self, v: int) -> "Graph":
        """Remove v, relabelling vertices above v down by one."""
        if not (0 <= v < self.n):
            raise ValueError("vertex out of range")
        low = (1 << v) - 1
        g = Graph(self.n - 1)
        out = []
        for u, mask in enumerate(self.adj):
            if u == v:
                continue
            out.append((mask & low) | ((mask >> (v + 1)) << v))
        g.adj = out
        return g

    def key(self) -> tuple:
        return (self.n, tuple(self.adj))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycles need at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(n), 2))


class BiGraph:
    """A bipartite graph given by its biadjacency matrix.

    Side A carries the rows (indices 0..na-1) and side B the columns.
    """

    __slots__ = ("biadj",)

    def __init__(self, biadj: BitMatrix):
        self.biadj = biadj

    @property
    def na(self) -> int:
        return self.biadj.nrows

    @property
    def nb(self) -> int:
        return self.biadj.ncols

    def has_edge(self, i: int, j: int) -> bool:
        return self.biadj.get(i, j) == 1

    def degree_a(self, i: int) -> int:
        return _popcount(self.biadj.rows[i])

    def degree_b(self, j: int) -> int:
        return _popcount(self.biadj.column_bits(j))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.na) for j in _bits(self.biadj.rows[i])]

    def num_edges(self) -> int:
        return sum(_popcount(r) for r in self.biadj.rows)

    def to_graph(self) -> Graph:
        """The same graph on vertices 0..na-1 (side A) then na..na+nb-1."""
        g = Graph(self.na + self.nb)
        for i, row in enumerate(self.biadj.rows):
            g.adj[i] = row << self.na
            for j in _bits(row):
                g.adj[self.na + j] |= 1 << i
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiGraph):
            return NotImplemented
        return self.biadj == other.biadj

    def __hash__(self) -> int:
        return hash(self.biadj)

    def __repr__(self) -> str:
        return f"BiGraph({self.na}+{self.nb}, m={self.num_edges()})"

    @classmethod
    def complete(cls, a: int, b: int) -> "BiGraph":
        return cls(BitMatrix.ones(a, b))

    @classmethod
    def empty(cls, a: int, b: int) -> "BiGraph":
        return cls(BitMatrix.zeros(a, b))


@dataclass(frozen=True)
class DegreeStats:
    min_degree: int
    max_degree: int
    average_degree: Fraction


class BicliqueWitness(NamedTuple):
    """A complete bipartite subgraph: the s-set lives on `s_side`."""

    s_side: str  # "A" or "B"
    s_set: tuple[int, ...]
    t_set: tuple[int, ...]


def bipartite_complement(g: BiGraph) -> BiGraph:
    """Flip every cross pair; an involution on bipartite graphs."""
    full = (1 << g.nb) - 1
    return BiGraph(BitMatrix(g.na, g.nb, [r ^ full for r in g.biadj.rows]))


def _search_biclique(masks: list[int], s: int, t: int) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Find s rows whose common neighbourhood has at least t columns."""
    candidates = [i for i, m in enumerate(masks) if _popcount(m) >= t]
    if len(candidates) < s:
        return None
    for subset in combinations(candidates, s):
        inter = -1
        for i in subset:
            inter &= masks[i]
            if _popcount(inter) < t:
                break
        else:
            cols = []
            for j in _bits(inter):
                cols.append(j)
                if len(cols) == t:
                    break
            return subset, tuple(cols)
    return None


def find_complete_bipartite(g: BiGraph, s: int, t: int) -> Optional[BicliqueWitness]:
    """Search for a K_{s,t} subgraph, trying both side orientations.

    Returns None when no such subgraph exists.  s and t are symmetric
    (K_{s,t} and K_{t,s} are the same graph), so they are normalized.
    """
    if s < 1 or t < 1:
        raise ValueError("biclique sides must be positive")
    if s > t:
        s, t = t, s
    hit = _search_biclique(g.biadj.rows, s, t)
    if hit:
        return BicliqueWitness("A", hit[0], hit[1])
    cols = [g.biadj.column_bits(j) for j in range(g.nb)]
    hit = _search_biclique(cols, s, t)
    if hit:
        return BicliqueWitness("B", hit[0], hit[1])
    return None


def is_c4_free(g: Graph) -> bool:
    """True iff no two distinct vertices share two or more neighbours."""
    for u in range(g.n):
        au = g.adj[u]
        for v in range(u + 1, g.n):
            if _popcount(au & g.adj[v]) >= 2:
                return False
    return True


def blow_up(g: Graph, k: int) -> Graph:
    """Replace each vertex by k independent copies, joining copies of
    adjacent vertices completely."""
    if k < 1:
        raise ValueError("blow-up factor must be at least 1")
    out = Graph(g.n * k)
    for u, v in g.edge_list():
        for a in range(k):
            for b in range(k):
                out.add_edge(u * k + a, v * k + b)
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        fresh = g.adj[v] & ~seen
        seen |= fresh
        frontier.extend(_bits(fresh))
    return seen == (1 << g.n) - 1


def _local_vertex_connectivity(g: Graph, s: int, t: int, cutoff: int) -> int:
    """Max internally vertex-disjoint s-t paths, stopping at cutoff."""
    n = g.n
    # Node-split flow network: in(v)=2v, out(v)=2v+1; unit internal arcs.
    cap: dict[tuple[int, int], int] = {}
    for v in range(n):
        cap[(2 * v, 2 * v + 1)] = 1
    for u in range(n):
        for v in _bits(g.adj[u]):
            cap[(2 * u + 1, 2 * v)] = 1
    succ: dict[int, set[int]] = {i: set() for i in range(2 * n)}
    for (a, b) in cap:
        succ[a].add(b)
        succ[b].add(a)  # residual arcs
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cutoff:
        # BFS for an augmenting path in the residual network.
        prev = {source: -1}
        queue = [source]
        while queue and sink not in prev:
            a = queue.pop(0)
            for b in succ[a]:
                if b not in prev and cap.get((a, b), 0) > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] = cap.get((a, b), 0) - 1
            cap[(b, a)] = cap.get((b, a), 0) + 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Size of a minimum vertex cut; n-1 for complete graphs.

    Exact at desk scale (intended for n <= 20): runs a unit-capacity
    max-flow between every non-adjacent vertex pair.
    """
    n = g.n
    if n <= 1:
        return 0
    if all(_popcount(a) == n - 1 for a in g.adj):
        return n - 1
    if not is_connected(g):
        return 0
    best = n - 1
    for u in range(n):
        for v in range(u + 1, n):
            if not g.has_edge(u, v):
                best = min(best, _local_vertex_connectivity(g, u, v, best))
                if best == 0:
                    return 0
    return best


def degree_stats(g) -> DegreeStats:
    """Exact min/max/average degree of a Graph or BiGraph."""
    if isinstance(g, BiGraph):
        degs = [g.degree_a(i) for i in range(g.na)] + [g.degree_b(j) for j in range(g.nb)]
    else:
        degs = [g.degree(v) for v in range(g.n)]
    if not degs:
        return DegreeStats(0, 0, Fraction(0))
    return DegreeStats(min(degs), max(degs), Fraction(sum(degs), len(degs)))


def bipartition(g: Graph) -> Optional[tuple[list[int], list[int]]]:
    """Two-colour g; None if it is not bipartite.

    Within each component the least vertex goes to side A.
    """
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in _bits(g.adj[v]):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    side_a = [v for v in range(g.n) if color[v] == 0]
    side_b = [v for v in range(g.n) if color[v] == 1]
    return side_a, side_b


def to_bigraph(g: Graph, side_a: list[int], side_b: list[int]) -> BiGraph:
    """View g as a BiGraph over the given bipartition (must cover V(g))."""
    if sorted(side_a + side_b) != list(range(g.n)):
        raise ValueError("sides must partition the vertex set")
    pos_b = {v: j for j, v in enumerate(side_b)}
    m = BitMatrix.zeros(len(side_a), len(side_b))
    for i, u in enumerate(side_a):
        for w in _bits(g.adj[u]):
            if w in pos_b:
                m.set(i, pos_b[w], 1)
            else:
                raise ValueError("edge inside one side: not bipartite for this split")
    return BiGraph(m)


def format_graph(g: Graph) -> str:
    lines = [f"graph {g.n}"]
    for u, v in g.edge_list():
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    lines = content_lines(text)
    if not lines:
        raise FormatError("empty graph document")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "graph":
        raise FormatError(f"bad graph header: {lines[0]!r}")
    try:
        g = Graph(int(head[1]))
    except ValueError as exc:
        raise FormatError("bad vertex count") from exc
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line: {line!r}")
        try:
            g.add_edge(int(parts[0]), int(parts[1]))
        except ValueError as exc:
            raise FormatError(f"bad edge line: {line!r}") from exc
    return g


def format_bigraph(g: BiGraph) -> str:
    lines = [f"bigraph {g.na} {g.nb}"]
    for i, j in g.edges():
        lines.append(f"{i} {j}")
    return "\n".join(lines) + "\n"


def parse_bigraph(text: str) -> BiGraph:
    lines = content_lines(text)
    if not lines:
        raise FormatError("empty bigraph document")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "bigraph":
        raise FormatError(f"bad bigraph header: {lines[0]!r}")
    try:
        m = BitMatrix.zeros(int(head[1]), int(head[2]))
    except ValueError as exc:
        raise FormatError("bad side sizes") from exc
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line: {line!r}")
        try:
            m.set(int(parts[0]), int(parts[1]), 1)
        except (ValueError, IndexError) as exc:
            raise FormatError(f"bad edge line: {line!r}") from exc
    return BiGraph(m)
