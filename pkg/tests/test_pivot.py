from itertools import combinations

import pytest

from pivotkit.cutrank import cut_rank
from pivotkit.errors import NotAnEdge, OrbitBudgetExceeded, SearchBudgetExceeded
from pivotkit.graph import Graph, bipartition
from pivotkit.pivot import (are_isomorphic, canonical_form, is_pivot_minor,
                            pivot, pivot_orbit)


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, [p for i, p in enumerate(pairs) if (bits >> i) & 1])


class TestPivot:
    def test_single_edge_fixed(self):
        g = Graph(2, [(0, 1)])
        assert pivot(g, 0, 1) == g

    def test_path3(self):
        g = Graph(3, [(0, 1), (1, 2)])
        p = pivot(g, 0, 1)
        assert sorted(p.edge_list()) == [(0, 1), (0, 2)]

    def test_not_an_edge(self):
        with pytest.raises(NotAnEdge):
            pivot(Graph(3, [(0, 1)]), 0, 2)

    def test_involution_exhaustive_n4(self):
        for g in all_graphs(4):
            for u, v in g.edge_list():
                assert pivot(pivot(g, u, v), u, v) == g

    def test_symmetric_in_endpoints(self):
        for g in all_graphs(4):
            for u, v in g.edge_list():
                assert pivot(g, u, v) == pivot(g, v, u)

    def test_bipartite_preserved_and_cutranks(self):
        for g in all_graphs(5):
            if bipartition(g) is None:
                continue
            for u, v in g.edge_list():
                p = pivot(g, u, v)
                assert bipartition(p) is not None
                # every cut-rank value is preserved
                for mask in range(1 << g.n):
                    xs = [w for w in range(g.n) if (mask >> w) & 1]
                    assert cut_rank(g, xs) == cut_rank(p, xs)


class TestPivotOrbit:
    def test_single_edge(self):
        assert len(pivot_orbit(Graph(2, [(0, 1)]), 10)) == 1

    def test_path3_orbit(self):
        orbit = pivot_orbit(Graph(3, [(0, 1), (1, 2)]), 10)
        keys = {g.key() for g in orbit}
        expected = {Graph(3, [(0, 1), (1, 2)]).key(),
                    Graph(3, [(0, 1), (0, 2)]).key(),
                    Graph(3, [(1, 2), (0, 2)]).key()}
        assert keys == expected

    def test_budget_exceeded(self):
        g = Graph(6, [(i, j) for i in range(6) for j in range(i + 1, 6)
                      if (i + j) % 2])
        with pytest.raises(OrbitBudgetExceeded):
            pivot_orbit(g, 1)

    def test_bipartite_orbit_stays_bipartite(self):
        g = Graph(6, [(0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (2, 3)])
        for h in pivot_orbit(g, 500):
            assert bipartition(h) is not None


class TestIsomorphism:
    def test_relabeled_path(self):
        g1 = Graph(3, [(0, 1), (1, 2)])
        g2 = Graph(3, [(1, 2), (0, 2)])
        assert are_isomorphic(g1, g2)

    def test_path_vs_triangle(self):
        assert not are_isomorphic(Graph(3, [(0, 1), (1, 2)]), Graph.complete(3))

    def test_degree_sequence_prune(self):
        c6 = Graph.cycle(6)
        from pivotkit.graph import blow_up
        k2_blown = blow_up(Graph(2, [(0, 1)]), 2)  # C4, 4 vertices
        assert not are_isomorphic(c6, k2_blown)

    def test_canonical_form_invariant_under_relabeling(self):
        import random
        rng = random.Random(5)
        for g in [Graph.cycle(5), Graph.path(6), Graph(4, [(0, 1), (2, 3)])]:
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edge_list()])
            assert canonical_form(g) == canonical_form(h)

    def test_canonical_form_separates_nonisomorphic(self):
        seen = {}
        for g in all_graphs(4):
            seen.setdefault(canonical_form(g), []).append(g)
        # 11 isomorphism classes of graphs on 4 vertices
        assert len(seen) == 11


class TestIsPivotMinor:
    def test_reflexive(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        found, witness = is_pivot_minor(g, g, 100)
        assert found and witness == []

    def test_delete_endpoint(self):
        h = Graph.path(3)
        g = Graph.path(4)
        found, witness = is_pivot_minor(h, g, 1000)
        assert found
        assert any(step[0] == "delete" for step in witness)

    def test_triangle_not_in_bipartite(self):
        h = Graph.complete(3)
        g = Graph(6, [(0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (2, 3)])
        found, _ = is_pivot_minor(h, g, 50000)
        assert not found

    def test_budget_exceeded_is_distinct(self):
        h = Graph.complete(3)
        g = Graph(6, [(0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (2, 3)])
        with pytest.raises(SearchBudgetExceeded):
            is_pivot_minor(h, g, 2)

    def test_witness_replays(self):
        h = Graph(3, [(0, 1), (0, 2)])
        g = Graph.path(4)
        found, witness = is_pivot_minor(h, g, 5000)
        assert found
        cur = g
        for step in witness:
            if step[0] == "pivot":
                cur = pivot(cur, step[1], step[2])
            else:
                cur = cur.delete_vertex(step[1])
        assert are_isomorphic(cur, h)

    def test_larger_h_false(self):
        assert is_pivot_minor(Graph.path(5), Graph.path(4), 10) == (False, None)
