import os
import unittest

from fractions import Fraction

from recolor.graphcore import (
    Graph,
    GraphError,
    Matching,
    chromatic_number,
    clique_number,
    complete_bipartition,
    components,
    degeneracy,
    edmonds_gallai,
    enumerate_graphs,
    is_bipartite,
    is_cactus,
    is_cycle,
    is_factor_critical,
    is_forest,
    mad,
    matching_number,
    max_matching,
    min_vertex_cover,
    vertex_cover_number,
)
from recolor.graphcore.cover import brute_force_independence_number
from recolor.graphcore.matching import brute_force_matching_number, saturated_by_every_maximum_matching
from recolor.graphcore.structure import blocks, cut_vertices


def small_graphs(nmax, connected_only=False):
    for n in range(1, nmax + 1):
        yield from enumerate_graphs(n, connected_only)


class TestGraph(unittest.TestCase):
    def test_edges_are_normalized(self):
        g = Graph(3, [(2, 0), (0, 2), (1, 2)])

        self.assertEqual(g.sorted_edges(), [(0, 2), (1, 2)])
        self.assertEqual(g.adjacency[2], frozenset({0, 1}))
        self.assertEqual(g.max_degree(), 2)

    def test_rejects_bad_edges(self):
        with self.assertRaises(GraphError):
            Graph(3, [(1, 1)])

        with self.assertRaises(GraphError):
            Graph(3, [(0, 3)])

        with self.assertRaises(GraphError):
            Graph(0)

    def test_graph6_round_trip(self):
        g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
        self.assertEqual(Graph.from_graph6(g.to_graph6()), g)

    def test_induced_relabels_in_order(self):
        g = Graph.cycle(5)
        h, labels = g.induced([4, 0, 1])

        self.assertEqual(labels, [0, 1, 4])
        self.assertEqual(h.sorted_edges(), [(0, 1), (0, 2)])

    def test_components_ordered_by_least_vertex(self):
        g = Graph(6, [(4, 5), (0, 3), (1, 2)])
        self.assertEqual(components(g), [frozenset({0, 3}), frozenset({1, 2}), frozenset({4, 5})])

    def test_degree_one_neighbours(self):
        star = Graph.complete_bipartite(1, 3)

        self.assertEqual(star.degree_one_neighbours(0), [1, 2, 3])
        self.assertEqual(star.degree_one_neighbours(0, within={0, 1, 2}), [1, 2])
        self.assertEqual(Graph.path(4).degree_one_neighbours(1), [0])
        self.assertEqual(Graph.cycle(4).degree_one_neighbours(0), [])


class TestMatchingAndCover(unittest.TestCase):
    def test_small_values(self):
        self.assertEqual(matching_number(Graph.path(4)), 2)
        self.assertEqual(matching_number(Graph.cycle(5)), 2)
        self.assertEqual(matching_number(Graph.complete(5)), 2)

        self.assertEqual(vertex_cover_number(Graph.cycle(5)), 3)
        self.assertEqual(vertex_cover_number(Graph.complete(4)), 3)
        self.assertEqual(vertex_cover_number(Graph.complete_bipartite(2, 3)), 2)

    def test_blossom_agrees_with_brute_force(self):
        for g in small_graphs(6):
            m = max_matching(g)
            Matching.checked(g, m)
            self.assertEqual(len(m), brute_force_matching_number(g), g)

    def test_minimum_cover_covers_and_konig_holds(self):
        for g in small_graphs(6):
            cover = min_vertex_cover(g)

            self.assertTrue(cover.covers(g), g)
            self.assertEqual(len(cover), vertex_cover_number(g), g)
            self.assertGreaterEqual(len(cover), matching_number(g), g)

            if is_bipartite(g):
                self.assertEqual(len(cover), matching_number(g), g)

    def test_matching_rejects_shared_vertex(self):
        with self.assertRaises(GraphError):
            Matching([(0, 1), (1, 2)])

    def test_cover_and_independent_set_partition_the_vertices(self):
        for g in small_graphs(6):
            self.assertEqual(vertex_cover_number(g) + brute_force_independence_number(g), g.n, g)

    def test_saturated_vertices_lie_outside_v1(self):
        self.assertTrue(saturated_by_every_maximum_matching(Graph.path(3), 1))
        self.assertFalse(saturated_by_every_maximum_matching(Graph.path(3), 0))

        for g in small_graphs(5):
            eg = edmonds_gallai(g)

            for v in range(g.n):
                self.assertEqual(saturated_by_every_maximum_matching(g, v), v not in eg.v1, (g, v))

        with self.assertRaises(GraphError):
            Matching.checked(Graph.path(3), [(0, 2)])


class TestEdmondsGallai(unittest.TestCase):
    def test_partition_properties(self):
        for g in small_graphs(6):
            eg = edmonds_gallai(g)
            mu = matching_number(g)

            self.assertEqual(eg.v1 | eg.v2 | eg.v3, frozenset(range(g.n)))
            self.assertEqual(eg.matching_number(g.n), mu, g)

            for component in eg.components_of_v1:
                self.assertTrue(is_factor_critical(g, component), (g, component))

            self.assertEqual(2 * matching_number(g, eg.v3), len(eg.v3), g)

            if not eg.v2:
                continue

            # V2 matches into distinct components of V1
            v2 = sorted(eg.v2)
            index = {v: i for i, v in enumerate(v2)}
            offset = len(v2)
            edges = [
                (index[v], offset + i)
                for i, component in enumerate(eg.components_of_v1)
                for v in v2
                if g.adjacency[v] & component
            ]
            h = Graph(offset + len(eg.components_of_v1), edges)
            self.assertEqual(matching_number(h), len(v2), g)

    def test_odd_cycle_is_factor_critical(self):
        eg = edmonds_gallai(Graph.cycle(5))

        self.assertEqual(eg.v1, frozenset(range(5)))
        self.assertEqual(eg.v2, frozenset())

    def test_path_on_three_vertices(self):
        eg = edmonds_gallai(Graph.path(3))

        self.assertEqual(eg.v1, frozenset({0, 2}))
        self.assertEqual(eg.v2, frozenset({1}))
        self.assertEqual(eg.v3, frozenset())


class TestInvariants(unittest.TestCase):
    def test_mad(self):
        self.assertEqual(mad(Graph.cycle(5)), Fraction(2))
        self.assertEqual(mad(Graph.complete(4)), Fraction(3))
        self.assertEqual(mad(Graph.complete_bipartite(1, 3)), Fraction(3, 2))

        # K4 plus a pendant vertex: the densest subgraph is the K4
        k4_with_tail = Graph(5, list(Graph.complete(4).edges) + [(3, 4)])
        self.assertEqual(mad(k4_with_tail), Fraction(3))

    def test_mad_lies_between_average_and_max_degree(self):
        for g in small_graphs(6):
            if g.edges:
                self.assertLessEqual(Fraction(2 * len(g.edges), g.n), mad(g), g)
                self.assertLessEqual(mad(g), g.max_degree(), g)

    def test_degeneracy_and_colouring(self):
        self.assertEqual(degeneracy(Graph.path(5)), 1)
        self.assertEqual(degeneracy(Graph.complete(4)), 3)

        self.assertEqual(chromatic_number(Graph.cycle(5)), 3)
        self.assertEqual(chromatic_number(Graph.cycle(6)), 2)
        self.assertEqual(chromatic_number(Graph.complete(4)), 4)
        self.assertEqual(clique_number(Graph.cycle(5)), 2)

    def test_chromatic_number_bounds(self):
        for g in small_graphs(6):
            chi = chromatic_number(g)
            self.assertLessEqual(clique_number(g), chi)
            self.assertLessEqual(chi, degeneracy(g) + 1)


class TestStructure(unittest.TestCase):
    def test_enumeration_counts(self):
        self.assertEqual(len(list(enumerate_graphs(4))), 11)
        self.assertEqual(len(list(enumerate_graphs(4, connected_only=True))), 6)
        self.assertEqual(len(list(enumerate_graphs(5))), 34)
        self.assertEqual(len(list(enumerate_graphs(5, connected_only=True))), 21)

    @unittest.skipUnless(os.getenv("RECOLOR_SLOW_TESTS") == "1", "set RECOLOR_SLOW_TESTS=1 for n = 8")
    def test_enumeration_counts_on_eight_vertices(self):
        graphs = list(enumerate_graphs(8))

        self.assertEqual(len(graphs), 12346)
        self.assertEqual(sum(1 for g in graphs if len(components(g)) == 1), 11117)

    def test_predicates(self):
        triangle_with_tail = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])

        self.assertTrue(is_cactus(triangle_with_tail))
        self.assertFalse(is_cactus(Graph.complete(4)))
        self.assertTrue(is_forest(Graph.path(4)))
        self.assertFalse(is_forest(Graph.cycle(4)))
        self.assertTrue(is_cycle(Graph.cycle(4)))
        self.assertFalse(is_cycle(Graph.path(4)))

        self.assertEqual(cut_vertices(triangle_with_tail), frozenset({2, 3}))
        self.assertEqual(blocks(triangle_with_tail)[0], frozenset({0, 1, 2}))

    def test_complete_bipartition(self):
        small, large = complete_bipartition(Graph.complete_bipartite(2, 3))

        self.assertEqual(small, frozenset({0, 1}))
        self.assertEqual(large, frozenset({2, 3, 4}))
        self.assertIsNone(complete_bipartition(Graph.path(4)))


if __name__ == "__main__":
    unittest.main()
