"""Binary matroids: representations, basis exchange, circuits, minors,
graphic/cographic constructions, and the connectivity function.

A matroid is kept as a basis-indexed representation [I|D]: the basis
labels index the rows of D and the remaining labels its columns.
Exchanging a basis element for a non-basis one is a matrix pivot plus a
label swap, and leaves the circuits unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from ._text import content_lines
from .errors import (ElementNotFound, FormatError, GroundSetTooLarge,
                     NotASpanningTree, NotConnected, PivotOnZero,
                     SubsetCapExceeded)
from .gf2 import BitMatrix, format_matrix, matrix_pivot, parse_matrix, rank, rank_bits
from .graph import BiGraph, Graph
from .cutrank import subset_cap

CIRCUIT_ENUM_CAP = 16


class MultiGraph:
    """A labeled multigraph; parallel edges and loops are allowed."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[tuple[str, int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self.edges: list[tuple[str, int, int]] = []
        seen = set()
        for label, u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: {label}")
            if label in seen:
                raise ValueError(f"duplicate edge label: {label}")
            seen.add(label)
            self.edges.append((label, u, v))

    def edge_by_label(self) -> dict[str, tuple[int, int]]:
        return {label: (u, v) for label, u, v in self.edges}

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for _, u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={len(self.edges)})"


@dataclass(frozen=True)
class SpanningTree:
    """The labels of a distinguished spanning tree's edges."""

    tree_edges: frozenset[str]


class BinaryMatroid:
    """Ground set = basis + nonbasis labels; rep is the D of [I|D]."""

    __slots__ = ("basis", "nonbasis", "rep")

    def __init__(self, basis: Sequence[str], nonbasis: Sequence[str], rep: BitMatrix):
        basis = tuple(basis)
        nonbasis = tuple(nonbasis)
        if len(basis) != rep.nrows or len(nonbasis) != rep.ncols:
            raise ValueError("representation shape does not match label counts")
        if len(set(basis) | set(nonbasis)) != len(basis) + len(nonbasis):
            raise ValueError("element labels must be distinct")
        self.basis = basis
        self.nonbasis = nonbasis
        self.rep = rep

    def ground(self) -> frozenset[str]:
        return frozenset(self.basis) | frozenset(self.nonbasis)

    def size(self) -> int:
        return len(self.basis) + len(self.nonbasis)

    def row_of(self, x: str) -> int:
        try:
            return self.basis.index(x)
        except ValueError:
            raise ElementNotFound(x) from None

    def col_of(self, y: str) -> int:
        try:
            return self.nonbasis.index(y)
        except ValueError:
            raise ElementNotFound(y) from None

    def fundamental_graph(self) -> BiGraph:
        """Bipartite graph between basis (side A) and nonbasis (side B)."""
        return BiGraph(self.rep.copy())

    def element_order(self) -> list[str]:
        return sorted(self.ground())

    def element_graph(self) -> Graph:
        """The fundamental graph as a Graph over sorted element labels."""
        order = self.element_order()
        pos = {e: i for i, e in enumerate(order)}
        g = Graph(len(order))
        for i, b in enumerate(self.basis):
            row = self.rep.rows[i]
            for j, c in enumerate(self.nonbasis):
                if (row >> j) & 1:
                    g.add_edge(pos[b], pos[c])
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMatroid):
            return NotImplemented
        return (self.basis, self.nonbasis, self.rep) == (other.basis, other.nonbasis, other.rep)

    def __repr__(self) -> str:
        return f"BinaryMatroid(|B|={len(self.basis)}, |E-B|={len(self.nonbasis)})"


def _tree_structure(g: MultiGraph, t: SpanningTree):
    """Validate the spanning tree and return (parent, depth, parent_edge)."""
    by_label = g.edge_by_label()
    for label in t.tree_edges:
        if label not in by_label:
            raise NotASpanningTree(f"unknown tree edge label: {label}")
        u, v = by_label[label]
        if u == v:
            raise NotASpanningTree(f"tree edge {label} is a loop")
    if len(t.tree_edges) != max(g.n - 1, 0):
        raise NotASpanningTree(
            f"tree has {len(t.tree_edges)} edges, expected {g.n - 1}")
    adj: list[list[tuple[int, str]]] = [[] for _ in range(g.n)]
    for label in t.tree_edges:
        u, v = by_label[label]
        adj[u].append((v, label))
        adj[v].append((u, label))
    parent = [-1] * g.n
    parent_edge: list[Optional[str]] = [None] * g.n
    depth = [0] * g.n
    seen = [False] * g.n
    if g.n > 0:
        seen[0] = True
        queue = [0]
        while queue:
            v = queue.pop(0)
            for w, label in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = v
                    parent_edge[w] = label
                    depth[w] = depth[v] + 1
                    queue.append(w)
    if not all(seen):
        raise NotASpanningTree("tree edges do not span every vertex")
    return parent, depth, parent_edge


def fundamental_matrix(g: MultiGraph, t: SpanningTree) -> tuple[BitMatrix, list[str], list[str]]:
    """The tree-edge x non-tree-edge cycle membership matrix.

    Built by tree-path traversal: the cycle closed by a non-tree edge
    consists of the tree edges on the path between its endpoints.  A
    loop yields a zero column.  Returns (D, row labels, column labels)
    with labels in their order of appearance in g.edges.
    """
    if not g.is_connected():
        raise NotConnected("multigraph is not connected")
    parent, depth, parent_edge = _tree_structure(g, t)
    tree_labels = [label for label, _, _ in g.edges if label in t.tree_edges]
    cotree_labels = [label for label, _, _ in g.edges if label not in t.tree_edges]
    row_index = {label: i for i, label in enumerate(tree_labels)}
    d = BitMatrix.zeros(len(tree_labels), len(cotree_labels))
    by_label = g.edge_by_label()
    for j, label in enumerate(cotree_labels):
        u, v = by_label[label]
        while u != v:
            if depth[u] < depth[v]:
                u, v = v, u
            d.set(row_index[parent_edge[u]], j, 1)
            u = parent[u]
    return d, tree_labels, cotree_labels


def graphic_matroid(g: MultiGraph, t: SpanningTree) -> BinaryMatroid:
    """The matroid on E(g) whose basis is the spanning tree."""
    d, tree_labels, cotree_labels = fundamental_matrix(g, t)
    return BinaryMatroid(tree_labels, cotree_labels, d)


def cographic_matroid(g: MultiGraph, t: SpanningTree) -> BinaryMatroid:
    """The dual construction: basis = non-tree edges, rep = D transposed."""
    d, tree_labels, cotree_labels = fundamental_matrix(g, t)
    return BinaryMatroid(cotree_labels, tree_labels, d.transpose())


def change_basis(m: BinaryMatroid, x: str, y: str) -> BinaryMatroid:
    """Exchange basis element x for non-basis y; circuits are preserved.

    Raises PivotOnZero when the (x, y) entry is 0, in which case
    basis - x + y is not a basis.
    """
    i = m.row_of(x)
    j = m.col_of(y)
    if m.rep.get(i, j) != 1:
        raise PivotOnZero(f"{x},{y}: entry is 0, not a basis exchange")
    rep = matrix_pivot(m.rep, i, j)
    basis = list(m.basis)
    nonbasis = list(m.nonbasis)
    basis[i], nonbasis[j] = y, x
    return BinaryMatroid(basis, nonbasis, rep)


def circuits(m: BinaryMatroid) -> frozenset[frozenset[str]]:
    """All minimal dependent subsets of the ground set.

    Enumerates the GF(2) null space of [I|D] over all element subsets,
    then keeps the inclusion-minimal zero-sum sets.  Capped at 16
    elements.
    """
    elements = list(m.basis) + list(m.nonbasis)
    ne = len(elements)
    if ne > CIRCUIT_ENUM_CAP:
        raise GroundSetTooLarge(f"{ne} elements exceeds cap {CIRCUIT_ENUM_CAP}")
    cols = [1 << i for i in range(len(m.basis))]
    cols += [m.rep.column_bits(j) for j in range(len(m.nonbasis))]
    # xs[S] = XOR of the columns indexed by subset S.
    xs = [0] * (1 << ne)
    zero_sets = []
    for s in range(1, 1 << ne):
        low = s & -s
        xs[s] = xs[s ^ low] ^ cols[low.bit_length() - 1]
        if xs[s] == 0:
            zero_sets.append(s)
    zero_sets.sort(key=lambda s: bin(s).count("1"))
    minimal: list[int] = []
    for s in zero_sets:
        if not any(c & s == c for c in minimal):
            minimal.append(s)
    out = set()
    for s in minimal:
        out.add(frozenset(elements[i] for i in range(ne) if (s >> i) & 1))
    return frozenset(out)


def _drop_row(m: BinaryMatroid, x: str) -> BinaryMatroid:
    i = m.row_of(x)
    rows = [r for k, r in enumerate(m.rep.rows) if k != i]
    basis = tuple(b for b in m.basis if b != x)
    return BinaryMatroid(basis, m.nonbasis, BitMatrix(len(rows), m.rep.ncols, rows))


def _drop_col(m: BinaryMatroid, y: str) -> BinaryMatroid:
    j = m.col_of(y)
    low = (1 << j) - 1
    rows = [(r & low) | ((r >> (j + 1)) << j) for r in m.rep.rows]
    nonbasis = tuple(c for c in m.nonbasis if c != y)
    return BinaryMatroid(m.basis, nonbasis, BitMatrix(m.rep.nrows, len(nonbasis), rows))


def minor(m: BinaryMatroid, deletions: Iterable[str], contractions: Iterable[str]) -> BinaryMatroid:
    """Delete and contract elements; circuits match the matroid minor.

    A loop (zero column) is contracted by deletion; a coloop (zero row)
    is deleted by contraction — the basis-exchange route cannot move
    them.  When a basis change is needed, the least-labeled partner with
    a unit entry is used, so minors are deterministic.
    """
    dels = set(deletions)
    cons = set(contractions)
    if dels & cons:
        raise ValueError("deletions and contractions must be disjoint")
    ground = m.ground()
    for e in dels | cons:
        if e not in ground:
            raise ElementNotFound(e)
    cur = m
    for e in sorted(cons):
        if e in cur.basis:
            cur = _drop_row(cur, e)
        else:
            j = cur.col_of(e)
            col = cur.rep.column_bits(j)
            if col == 0:
                cur = _drop_col(cur, e)  # loop: contraction acts as deletion
            else:
                partners = [cur.basis[i] for i in range(len(cur.basis)) if (col >> i) & 1]
                cur = change_basis(cur, min(partners), e)
                cur = _drop_row(cur, e)
    for e in sorted(dels):
        if e in cur.nonbasis:
            cur = _drop_col(cur, e)
        else:
            i = cur.row_of(e)
            row = cur.rep.rows[i]
            if row == 0:
                cur = _drop_row(cur, e)  # coloop: deletion acts as contraction
            else:
                partners = [cur.nonbasis[j] for j in range(len(cur.nonbasis)) if (row >> j) & 1]
                cur = change_basis(cur, e, min(partners))
                cur = _drop_col(cur, e)
    return cur


def connectivity_lambda(m: BinaryMatroid, x_set: Iterable[str]) -> int:
    """The connectivity function: rk(D[X_B, Y_C]) + rk(D[Y_B, X_C])."""
    xs = set(x_set)
    ground = m.ground()
    for e in xs:
        if e not in ground:
            raise ElementNotFound(e)
    xb = [i for i, b in enumerate(m.basis) if b in xs]
    yb = [i for i, b in enumerate(m.basis) if b not in xs]
    xc = [j for j, c in enumerate(m.nonbasis) if c in xs]
    yc = [j for j, c in enumerate(m.nonbasis) if c not in xs]
    return rank(m.rep.submatrix(xb, yc)) + rank(m.rep.submatrix(yb, xc))


def is_k_connected(m: BinaryMatroid, k: int) -> tuple[bool, Optional[frozenset[str]]]:
    """Whether lambda(X) >= l for every X with |X|, |E-X| >= l, l < k.

    Returns (True, None) or (False, witness X).  The witness is the
    first failure in the deterministic enumeration (l ascending, |X|
    ascending over the smaller side, elements in sorted label order).
    """
    elements = m.element_order()
    ne = len(elements)
    cap = subset_cap()
    if ne > cap:
        raise SubsetCapExceeded(f"{ne} elements exceeds the subset cap {cap}")
    cache: dict[frozenset[str], int] = {}

    def lam(xs: frozenset[str]) -> int:
        val = cache.get(xs)
        if val is None:
            val = connectivity_lambda(m, xs)
            cache[xs] = val
        return val

    for order in range(1, k):
        if 2 * order > ne:
            break
        for size in range(order, ne // 2 + 1):
            for subset in combinations(elements, size):
                if 2 * size == ne and subset[0] != elements[0]:
                    continue
                xs = frozenset(subset)
                if lam(xs) < order:
                    return False, xs
    return True, None


def format_multigraph(g: MultiGraph, t: SpanningTree, provenance: str | None = None) -> str:
    lines = []
    if provenance:
        lines.append(f"# {provenance}")
    lines.append(f"multigraph {g.n}")
    for label, u, v in g.edges:
        kind = "tree" if label in t.tree_edges else "cotree"
        lines.append(f"{u} {v} {kind} {label}")
    return "\n".join(lines) + "\n"


def parse_multigraph(text: str) -> tuple[MultiGraph, SpanningTree]:
    lines = content_lines(text)
    if not lines:
        raise FormatError("empty multigraph document")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "multigraph":
        raise FormatError(f"bad multigraph header: {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError as exc:
        raise FormatError("bad vertex count") from exc
    edges = []
    tree_labels = set()
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 4 or parts[2] not in ("tree", "cotree"):
            raise FormatError(f"bad multigraph edge line: {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"bad multigraph edge line: {line!r}") from exc
        edges.append((parts[3], u, v))
        if parts[2] == "tree":
            tree_labels.add(parts[3])
    try:
        mg = MultiGraph(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    return mg, SpanningTree(frozenset(tree_labels))


def format_matroid(m: BinaryMatroid) -> str:
    lines = ["basis " + " ".join(m.basis) if m.basis else "basis",
             "nonbasis " + " ".join(m.nonbasis) if m.nonbasis else "nonbasis"]
    return "\n".join(lines) + "\n" + format_matrix(m.rep)


def parse_matroid(text: str) -> BinaryMatroid:
    lines = content_lines(text)
    if len(lines) < 3:
        raise FormatError("matroid document too short")
    if not lines[0].startswith("basis") or not lines[1].startswith("nonbasis"):
        raise FormatError("matroid document must start with basis/nonbasis lines")
    basis = lines[0].split()[1:]
    nonbasis = lines[1].split()[1:]
    rep = parse_matrix("\n".join(lines[2:]))
    try:
        return BinaryMatroid(basis, nonbasis, rep)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
