"""The graph pivot operation, pivot orbits, and pivot-minor search.

Pivoting an edge xy partitions the other neighbours of x and y into
three regions (private to x, private to y, common), complements all
edges between distinct regions, and swaps the labels x and y.  The
searches here work on labeled graphs and deduplicate states by a
canonical form, so they are exact at small scale.
"""

from __future__ import annotations

from itertools import permutations
from typing import Optional

from .errors import NotAnEdge, OrbitBudgetExceeded, SearchBudgetExceeded
from .graph import Graph, _bits


def pivot(g: Graph, x: int, y: int) -> Graph:
    """Pivot the edge xy; raises NotAnEdge when xy is not an edge."""
    if x == y or not (0 <= x < g.n and 0 <= y < g.n) or not g.has_edge(x, y):
        raise NotAnEdge(f"({x},{y}) is not an edge")
    ax, ay = g.adj[x], g.adj[y]
    v1 = ax & ~ay & ~(1 << y)
    v2 = ay & ~ax & ~(1 << x)
    v3 = ax & ay
    adj = list(g.adj)
    for p_mask, q_mask in ((v1, v2), (v2, v3), (v3, v1)):
        for u in _bits(p_mask):
            adj[u] ^= q_mask
        for w in _bits(q_mask):
            adj[w] ^= p_mask
    # Swap the labels x and y: exchange rows, then bits x and y in every row.
    adj[x], adj[y] = adj[y], adj[x]
    for u in range(g.n):
        row = adj[u]
        bx, by = (row >> x) & 1, (row >> y) & 1
        if bx != by:
            row ^= (1 << x) | (1 << y)
        adj[u] = row
    out = Graph(g.n)
    out.adj = adj
    return out


def pivot_orbit(g: Graph, max_size: int) -> list[Graph]:
    """Breadth-first closure of g under pivoting over all edges.

    Raises OrbitBudgetExceeded as soon as the orbit grows past max_size.
    Graphs are labeled; the orbit is returned in discovery order.
    """
    seen = {g.key()}
    order = [g]
    frontier = [g]
    while frontier:
        nxt = []
        for h in frontier:
            for u, v in h.edge_list():
                p = pivot(h, u, v)
                k = p.key()
                if k not in seen:
                    seen.add(k)
                    if len(seen) > max_size:
                        raise OrbitBudgetExceeded(f"orbit exceeds {max_size}")
                    order.append(p)
                    nxt.append(p)
        frontier = nxt
    return order


def _refine_colors(g: Graph) -> list[int]:
    """Iterated neighbour-colour refinement; returns a colour per vertex."""
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = []
        for v in range(g.n):
            nb = tuple(sorted(colors[w] for w in _bits(g.adj[v])))
            sigs.append((colors[v], nb))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canonical_form(g: Graph) -> tuple:
    """A canonical key: minimum adjacency encoding over all vertex
    orderings consistent with colour refinement."""
    n = g.n
    if n == 0:
        return (0, 0)
    colors = _refine_colors(g)
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    groups = [classes[c] for c in sorted(classes)]

    best: Optional[int] = None
    # Backtracking over orderings that list each colour class as a block,
    # pruning by comparing the partial upper-triangle encoding.
    order: list[int] = []

    def encode_prefix(full_check: bool) -> Optional[int]:
        nonlocal best
        code = 0
        pos = 0
        k = len(order)
        for j in range(1, k):
            vj = order[j]
            for i in range(j):
                code = (code << 1) | ((g.adj[vj] >> order[i]) & 1)
                pos += 1
        return code

    def rec(gi: int, remaining: list[list[int]]):
        nonlocal best
        if gi == len(groups):
            code = encode_prefix(True)
            if best is None or code < best:
                best = code
            return
        group = remaining[gi]
        for perm in permutations(sorted(group)):
            order.extend(perm)
            # Prune: compare prefix against the corresponding prefix of best.
            if best is not None:
                k = len(order)
                bits_here = k * (k - 1) // 2
                total = n * (n - 1) // 2
                prefix = encode_prefix(False)
                if prefix > (best >> (total - bits_here)):
                    del order[len(order) - len(perm):]
                    continue
            rec(gi + 1, remaining)
            del order[len(order) - len(perm):]

    rec(0, groups)
    return (n, best)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test: degree-sequence pruning, then VF2."""
    if g1.n != g2.n or g1.num_edges() != g2.num_edges():
        return False
    if sorted(g1.degree(v) for v in range(g1.n)) != sorted(g2.degree(v) for v in range(g2.n)):
        return False
    import networkx as nx

    def to_nx(g: Graph):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edge_list())
        return h

    return nx.is_isomorphic(to_nx(g1), to_nx(g2))


def is_pivot_minor(h: Graph, g: Graph, budget: int) -> tuple[bool, Optional[list[tuple]]]:
    """Decide whether h is reachable from g by pivots and vertex deletions.

    Breadth-first search over canonical forms with a node budget; raises
    SearchBudgetExceeded when the budget runs out (result unknown, which
    is deliberately distinct from False).  On success, returns the
    witness sequence of ("pivot", x, y) / ("delete", v) steps, each in
    the labels of the intermediate graph it applies to.
    """
    if h.n > g.n:
        return False, None
    target = canonical_form(h)
    start_key = canonical_form(g)
    if g.n == h.n and start_key == target:
        return True, []
    seen = {start_key}
    frontier: list[tuple[Graph, list[tuple]]] = [(g, [])]
    expanded = 0
    while frontier:
        nxt: list[tuple[Graph, list[tuple]]] = []
        for cur, path in frontier:
            expanded += 1
            if expanded > budget:
                raise SearchBudgetExceeded(f"budget {budget} exhausted")
            succs: list[tuple[Graph, tuple]] = []
            for u, v in cur.edge_list():
                succs.append((pivot(cur, u, v), ("pivot", u, v)))
            if cur.n > h.n:
                for v in range(cur.n):
                    succs.append((cur.delete_vertex(v), ("delete", v)))
            for nxt_g, step in succs:
                k = canonical_form(nxt_g)
                if k in seen:
                    continue
                seen.add(k)
                new_path = path + [step]
                if nxt_g.n == h.n and k == target:
                    return True, new_path
                nxt.append((nxt_g, new_path))
        frontier = nxt
    return False, None
