"""Generators and leaf constructions."""

import pytest

from pdzf import (
    Graph,
    GraphError,
    apex_over,
    attach_leaves,
    family_labels,
    family_names,
    generate,
    leaf_bound_witness,
)


class TestAttachLeaves:
    def test_ids_group_by_attachment_vertex(self):
        g = generate("path", (3,))
        att = attach_leaves(g, [0, 2], 2)
        assert att.graph.n == 7
        assert att.leaf_ids == ((0, (3, 4)), (2, (5, 6)))
        assert att.leaves_of(2) == (5, 6)
        assert att.base == g
        assert att.leaves_per_vertex == 2
        for v, leaves in att.leaf_ids:
            for leaf in leaves:
                assert att.graph.degree(leaf) == 1
                assert att.graph.has_edge(v, leaf)
        # base adjacency is untouched
        assert set(g.edges()).issubset(att.graph.edges())
        assert att.graph.m == g.m + 4

    def test_zero_leaves_is_identity(self):
        g = generate("cycle", (4,))
        att = attach_leaves(g, [1], 0)
        assert att.graph == g
        assert att.leaves_of(1) == ()

    def test_errors(self):
        g = generate("path", (3,))
        with pytest.raises(GraphError):
            attach_leaves(g, [0], -1)
        with pytest.raises(GraphError):
            attach_leaves(g, [7], 1)
        with pytest.raises(GraphError):
            attach_leaves(g, [0], 1).leaves_of(1)

    def test_leaf_bound_witness_size(self):
        g = generate("complete", (4,))
        w = leaf_bound_witness(g, [0])
        assert w.n == 4 + 2 * 3
        assert w.degree(0) == 3
        for v in (1, 2, 3):
            assert w.degree(v) == 5


class TestApexOver:
    def test_new_vertex_adjacency(self):
        g = generate("path", (3,))
        a = apex_over(g, [0, 2])
        assert a.n == 4
        assert set(a.neighbors(3)) == {0, 2}
        assert a.has_edge(0, 1) and a.has_edge(1, 2)

    def test_empty_support(self):
        g = generate("path", (2,))
        a = apex_over(g, [])
        assert a.n == 3 and a.degree(2) == 0


class TestFamilies:
    def test_registry_is_complete(self):
        assert family_names() == (
            "path",
            "cycle",
            "star",
            "complete",
            "grid2",
            "grid2_triangles",
            "spider_complete",
            "double_star_join",
            "fig_examples",
            "fig_zpartition",
            "fig_spread",
            "c5_hub",
        )

    def test_unknown_family_and_arity(self):
        with pytest.raises(GraphError):
            generate("nosuch")
        with pytest.raises(GraphError):
            generate("path")
        with pytest.raises(GraphError):
            generate("fig_examples", (3,))
        with pytest.raises(GraphError):
            generate("double_star_join", (3,))

    @pytest.mark.parametrize(
        "name,params,n,m",
        [
            ("path", (1,), 1, 0),
            ("path", (6,), 6, 5),
            ("cycle", (5,), 5, 5),
            ("star", (4,), 5, 4),
            ("complete", (5,), 5, 10),
            ("grid2", (4,), 8, 10),
            ("grid2_triangles", (5,), 14, 19),
            ("spider_complete", (4,), 16, 18),
            ("double_star_join", (4, 4), 10, 12),
            ("fig_examples", (), 7, 6),
            ("fig_zpartition", (), 8, 10),
            ("fig_spread", (), 9, 9),
            ("c5_hub", (3,), 16, 21),
        ],
    )
    def test_orders_and_sizes(self, name, params, n, m):
        g = generate(name, params)
        assert (g.n, g.m) == (n, m)

    def test_parameter_floors(self):
        for name, params in [
            ("path", (0,)),
            ("cycle", (2,)),
            ("star", (0,)),
            ("complete", (0,)),
            ("grid2", (0,)),
            ("grid2_triangles", (1,)),
            ("spider_complete", (0,)),
            ("double_star_join", (1, 2)),
            ("c5_hub", (0,)),
        ]:
            with pytest.raises(GraphError):
                generate(name, params)

    def test_grid2_triangles_structure(self):
        g = generate("grid2_triangles", (3,))
        # grid rows (2i, 2i+1); triangles on vertices 1 and 2n-1
        assert set(g.neighbors(6)) == {1, 7}
        assert set(g.neighbors(7)) == {1, 6}
        assert set(g.neighbors(8)) == {5, 9}
        assert g.degree(1) == 4

    def test_spider_complete_structure(self):
        g = generate("spider_complete", (3,))
        for i in range(3):
            a = 3 + 3 * i
            assert set(g.neighbors(a)) == {i, a + 1, a + 2}
            assert g.degree(a + 1) == 1 and g.degree(a + 2) == 1

    def test_double_star_join_structure(self):
        g = generate("double_star_join", (3, 4))
        assert g.degree(0) == 3 and g.degree(4) == 4
        for u, v in [(1, 5), (1, 6), (2, 5), (2, 6)]:
            assert g.has_edge(u, v)

    def test_c5_hub_structure(self):
        g = generate("c5_hub", (2,))
        hub = 10
        assert set(g.neighbors(hub)) == {3, 4, 8, 9}
        for i in range(2):
            a = 5 * i
            for u, v in [(a, a + 1), (a + 1, a + 2), (a + 2, a + 3), (a + 3, a + 4), (a + 4, a)]:
                assert g.has_edge(u, v)

    def test_figure_edges_pinned(self):
        assert generate("fig_examples").edges() == [
            (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6),
        ]
        assert generate("fig_zpartition").edges() == [
            (0, 1), (0, 2), (1, 2), (1, 5), (1, 6), (1, 7), (3, 7), (4, 5), (5, 6), (6, 7),
        ]
        assert generate("fig_spread").edges() == [
            (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7), (3, 4), (3, 8),
        ]

    def test_labels(self):
        g = generate("fig_examples")
        assert family_labels("fig_examples", g) == {i: str(i + 1) for i in range(7)}
        s = generate("fig_spread")
        assert family_labels("fig_spread", s) == {4: "u", 5: "v"}
        assert family_labels("path", generate("path", (3,))) == {}
