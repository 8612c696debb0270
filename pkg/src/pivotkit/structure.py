"""Constructive decompositions: tree splitting, constant-block
partitions of low-rank matrices, and the block-density check.

split_tree follows a fixed recipe: root the tree at its least vertex,
walk to the deepest vertex whose subtree still has at least s edges,
and either group that vertex's branches into three edge-disjoint
subtrees or cut the edge to its parent.  Every output is validated
against the type invariants before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import (DimensionMismatch, NotATree, PartitionInvalid,
                     TreeTooSmall)
from .gf2 import BitMatrix
from .graph import BiGraph, Graph, degree_stats, is_connected

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SplitEdge:
    """A tree edge whose removal leaves two components of >= s edges."""

    edge: Edge
    side_a: frozenset[Edge]
    side_b: frozenset[Edge]


@dataclass(frozen=True)
class SplitVertex:
    """Three edge-disjoint subtrees of >= s edges meeting only at v."""

    vertex: int
    t1: frozenset[Edge]
    t2: frozenset[Edge]
    t3: frozenset[Edge]


TreeSplit = Union[SplitEdge, SplitVertex]


@dataclass(frozen=True)
class BlockPartition:
    """Row/column classes under which every block is constant.

    mode "matrix": tags are "zero"/"one".
    mode "graph-pair": tags are "equal"/"complement".
    """

    mode: str
    row_classes: tuple[tuple[int, ...], ...]
    col_classes: tuple[tuple[int, ...], ...]
    tags: tuple[tuple[str, ...], ...]


def _check_is_tree(t: Graph) -> None:
    if t.n == 0 or t.num_edges() != t.n - 1 or not is_connected(t):
        raise NotATree("expected a connected acyclic graph")


def _rooted(t: Graph, root: int):
    parent = [-1] * t.n
    order = [root]
    seen = 1 << root
    for v in order:
        mask = t.adj[v] & ~seen
        while mask:
            low = mask & -mask
            w = low.bit_length() - 1
            mask ^= low
            seen |= low
            parent[w] = v
            order.append(w)
    depth = [0] * t.n
    for v in order[1:]:
        depth[v] = depth[parent[v]] + 1
    return parent, depth, order


def _subtree_edges(t: Graph, parent: list[int], order: list[int], v: int) -> set[Edge]:
    """Edges of the subtree hanging below v (descendants of v)."""
    desc = {v}
    out: set[Edge] = set()
    for w in order:
        if w != v and parent[w] in desc:
            desc.add(w)
            out.add(_norm_edge(parent[w], w))
    return out


def split_tree(t: Graph, s: int) -> TreeSplit:
    """Split a tree with at least 5s edges per the fixed recipe.

    Ties break deterministically: the root is vertex 0, the deepest
    qualifying vertex with the least label wins, and branches are
    grouped greedily in ascending child label.
    """
    if s < 1:
        raise ValueError("s must be positive")
    _check_is_tree(t)
    m = t.num_edges()
    if m < 5 * s:
        raise TreeTooSmall(f"{m} edges < 5s = {5 * s}")
    root = 0
    parent, depth, order = _rooted(t, root)
    # Subtree edge counts: |E(T(v))| = descendants of v.
    sub = [0] * t.n
    for w in reversed(order):
        if w != root:
            sub[parent[w]] += sub[w] + 1
    best = root
    for v in range(t.n):
        if sub[v] >= s and (depth[v], -v) > (depth[best], -best):
            best = v
    v = best
    if sub[v] >= 3 * s:
        children = sorted(w for w in range(t.n) if parent[w] == v)
        branches = []
        for c in children:
            b = _subtree_edges(t, parent, order, c)
            b.add(_norm_edge(v, c))
            branches.append(b)
        groups: list[set[Edge]] = []
        cur: set[Edge] = set()
        for b in branches:
            cur |= b
            if len(cur) >= s:
                groups.append(cur)
                cur = set()
                if len(groups) == 2:
                    break
        t1, t2 = groups
        all_edges = {_norm_edge(u, w) for u, w in t.edge_list()}
        t3 = all_edges - t1 - t2
        split: TreeSplit = SplitVertex(v, frozenset(t1), frozenset(t2), frozenset(t3))
    else:
        p = parent[v]
        below = frozenset(_subtree_edges(t, parent, order, v))
        all_edges = {_norm_edge(u, w) for u, w in t.edge_list()}
        above = frozenset(all_edges - below - {_norm_edge(p, v)})
        split = SplitEdge(_norm_edge(p, v), above, below)
    problem = tree_split_problem(t, s, split)
    if problem is not None:
        raise RuntimeError(f"internal split invalid: {problem}")
    return split


def _edges_form_subtree(edges: frozenset[Edge]) -> bool:
    if not edges:
        return False
    verts = sorted({v for e in edges for v in e})
    pos = {v: i for i, v in enumerate(verts)}
    g = Graph(len(verts))
    for u, w in edges:
        g.add_edge(pos[u], pos[w])
    return g.num_edges() == g.n - 1 and is_connected(g)


def tree_split_problem(t: Graph, s: int, split: TreeSplit):
    """Validate a TreeSplit against its invariants; None when valid."""
    all_edges = {_norm_edge(u, w) for u, w in t.edge_list()}
    if isinstance(split, SplitEdge):
        e = split.edge
        if e not in all_edges:
            return f"{e} is not a tree edge"
        if split.side_a | split.side_b | {e} != all_edges or split.side_a & split.side_b:
            return "sides do not partition the remaining edges"
        for side in (split.side_a, split.side_b):
            if len(side) < s:
                return f"a side has {len(side)} < s edges"
            if not _edges_form_subtree(side):
                return "a side is not a subtree"
        if _vertices(split.side_a) & _vertices(split.side_b):
            return "the two sides share a vertex"
        return None
    if isinstance(split, SplitVertex):
        parts = (split.t1, split.t2, split.t3)
        for part in parts:
            if len(part) < s:
                return f"a subtree has {len(part)} < s edges"
            if not part <= all_edges:
                return "a subtree uses non-tree edges"
            if not _edges_form_subtree(part):
                return "a part is not a subtree"
        for i in range(3):
            for j in range(i + 1, 3):
                if parts[i] & parts[j]:
                    return "subtrees share an edge"
                if _vertices(parts[i]) & _vertices(parts[j]) != {split.vertex}:
                    return "subtrees must meet exactly at the split vertex"
        return None
    return f"not a TreeSplit: {split!r}"


def _vertices(edges: frozenset[Edge]) -> set[int]:
    return {v for e in edges for v in e}


def constant_block_partition(c: BitMatrix) -> BlockPartition:
    """Group equal rows and equal columns; every block is constant.

    The number of classes on each side is at most 2^rank(c), since all
    rows (columns) lie in the row (column) space.
    """
    row_classes: list[list[int]] = []
    row_index: dict[int, int] = {}
    for i, r in enumerate(c.rows):
        k = row_index.get(r)
        if k is None:
            row_index[r] = len(row_classes)
            row_classes.append([i])
        else:
            row_classes[k].append(i)
    col_classes: list[list[int]] = []
    col_index: dict[int, int] = {}
    for j in range(c.ncols):
        bits = c.column_bits(j)
        k = col_index.get(bits)
        if k is None:
            col_index[bits] = len(col_classes)
            col_classes.append([j])
        else:
            col_classes[k].append(j)
    tags = tuple(
        tuple("one" if c.get(rc[0], cc[0]) else "zero" for cc in col_classes)
        for rc in row_classes)
    return BlockPartition(
        "matrix",
        tuple(tuple(rc) for rc in row_classes),
        tuple(tuple(cc) for cc in col_classes),
        tags)


def perturbation_partition(g1: BiGraph, g2: BiGraph) -> BlockPartition:
    """Partition both sides so each block of g1 equals the matching
    block of g2 or its bipartite complement.

    The class counts are at most 2^p where p is the rank of the
    biadjacency difference.
    """
    if g1.na != g2.na or g1.nb != g2.nb:
        raise DimensionMismatch(f"{g1.na}x{g1.nb} vs {g2.na}x{g2.nb}")
    bp = constant_block_partition(g1.biadj ^ g2.biadj)
    tags = tuple(
        tuple("complement" if tag == "one" else "equal" for tag in row)
        for row in bp.tags)
    return BlockPartition("graph-pair", bp.row_classes, bp.col_classes, tags)


def block_partition_is_constant(c: BitMatrix, bp: BlockPartition) -> bool:
    """Independent scan: every block constant and matching its tag."""
    for ri, rc in enumerate(bp.row_classes):
        for ci, cc in enumerate(bp.col_classes):
            want = 1 if bp.tags[ri][ci] in ("one", "complement") else 0
            for i in rc:
                for j in cc:
                    if c.get(i, j) != want:
                        return False
    return True


def reconstruct_from_partition(g2: BiGraph, bp: BlockPartition) -> BiGraph:
    """Rebuild g1 from g2 plus a graph-pair BlockPartition's tags."""
    if bp.mode != "graph-pair":
        raise ValueError("expected a graph-pair partition")
    out = g2.biadj.copy()
    for ri, rc in enumerate(bp.row_classes):
        for ci, cc in enumerate(bp.col_classes):
            if bp.tags[ri][ci] == "complement":
                for i in rc:
                    for j in cc:
                        out.set(i, j, 1 - out.get(i, j))
    return BiGraph(out)


def _validate_partition(classes, size: int, what: str) -> None:
    seen: set[int] = set()
    for cls in classes:
        if not cls:
            raise PartitionInvalid(f"empty {what} class")
        for i in cls:
            if not (0 <= i < size) or i in seen:
                raise PartitionInvalid(f"{what} classes do not partition 0..{size - 1}")
            seen.add(i)
    if len(seen) != size:
        raise PartitionInvalid(f"{what} classes do not cover 0..{size - 1}")


def check_struct_density(g: BiGraph, row_classes, col_classes, s: int) -> bool:
    """Whether average degree of g is at most 10 * n^2 * s, where n is
    the larger class count.  Exact rational arithmetic throughout.

    The caller asserts that every block is a graphic fundamental graph
    or the bipartite complement of one; only the density conclusion is
    checked here.
    """
    if s < 1:
        raise ValueError("s must be positive")
    _validate_partition(row_classes, g.na, "row")
    _validate_partition(col_classes, g.nb, "column")
    n = max(len(row_classes), len(col_classes))
    bound = Fraction(10 * n * n * s)
    return degree_stats(g).average_degree <= bound


def format_tree_split(split: TreeSplit) -> str:
    def fmt(edges: frozenset[Edge]) -> str:
        return " ".join(f"{u}-{v}" for u, v in sorted(edges))

    if isinstance(split, SplitEdge):
        lines = [f"split edge {split.edge[0]} {split.edge[1]}",
                 f"side1 {fmt(split.side_a)}",
                 f"side2 {fmt(split.side_b)}"]
    else:
        lines = [f"split vertex {split.vertex}",
                 f"tree1 {fmt(split.t1)}",
                 f"tree2 {fmt(split.t2)}",
                 f"tree3 {fmt(split.t3)}"]
    return "\n".join(lines) + "\n"


def format_block_partition(bp: BlockPartition) -> str:
    lines = [f"blockpartition {bp.mode} {len(bp.row_classes)} {len(bp.col_classes)}"]
    for i, rc in enumerate(bp.row_classes):
        lines.append(f"rowclass {i} " + " ".join(str(x) for x in rc))
    for j, cc in enumerate(bp.col_classes):
        lines.append(f"colclass {j} " + " ".join(str(x) for x in cc))
    for i, row in enumerate(bp.tags):
        for j, tag in enumerate(row):
            lines.append(f"block {i} {j} {tag}")
    return "\n".join(lines) + "\n"
