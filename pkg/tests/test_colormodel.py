import itertools
import unittest

from recolor.colormodel import (
    CORR_MODE,
    ColouringError,
    CorrespondenceCover,
    Instance,
    InstanceError,
    available_colours,
    colour_shift_digraph,
    colouring_from_cover,
    colouring_to_cover,
    digraph_mu,
    hamming,
    is_proper,
    list_to_cover,
    reconfig_lower_bound,
)
from recolor.graphcore import Graph
from recolor.oracle import exact_distance


class TestInstance(unittest.TestCase):
    def setUp(self):
        self.path = Graph.path(3)
        self.lists = Instance(self.path, lists=[[1, 2], [2, 3, 5], [1, 5]])

    def test_lists_are_sorted_sets(self):
        inst = Instance(self.path, lists=[[2, 1, 2], [3], [4, 1]])
        self.assertEqual(inst.lists, ((1, 2), (3,), (1, 4)))

    def test_check_colouring_names_the_problem(self):
        self.assertEqual(self.lists.check_colouring([1, 2, 5]), (1, 2, 5))

        with self.assertRaisesRegex(ColouringError, "vertex 1"):
            self.lists.check_colouring([1, 4, 5])

        with self.assertRaisesRegex(ColouringError, r"edge \(1, 2\)"):
            self.lists.check_colouring([1, 5, 5])

        with self.assertRaises(ColouringError):
            self.lists.check_colouring([1, 2])

    def test_is_proper(self):
        self.assertTrue(is_proper(self.lists, (2, 3, 1)))
        self.assertFalse(is_proper(self.lists, (2, 2, 1)))

    def test_available_colours(self):
        isolated = Instance(Graph(1), lists=[[1, 2, 3]])
        self.assertEqual(available_colours(isolated, 0, (1,), {2}), [1, 3])

        # both colours of the middle vertex are taken by its neighbours
        blocked = Instance(self.path, lists=[[1], [1, 2], [2]])
        self.assertEqual(available_colours(blocked, 1, (1, 1, 2)), [])

        star = Instance.uniform(Graph.complete_bipartite(1, 3), 5)
        self.assertEqual(available_colours(star, 0, (1, 2, 3, 4)), [1, 5])
        self.assertEqual(available_colours(star, 0, (1, 2, 3, 4), colours=(2, 5)), [5])

        cover = CorrespondenceCover([3, 3], {(0, 1): [(1, 2), (2, 1)]})
        corr = Instance(Graph.path(2), CORR_MODE, cover=cover)
        self.assertEqual(available_colours(corr, 0, (1, 2)), [2, 3])

    def test_bad_instances(self):
        with self.assertRaises(InstanceError):
            Instance(self.path, lists=[[1], [2]])

        with self.assertRaises(InstanceError):
            Instance(self.path, lists=[[1], [], [2]])

        with self.assertRaises(InstanceError):
            Instance(self.path, mode="dp", lists=[[1], [2], [3]])

    def test_dict_round_trip_keeps_colourings(self):
        inst, a, b = Instance.from_dict(self.lists.toDict((1, 2, 5), (2, 3, 1)))

        self.assertEqual(inst, self.lists)
        self.assertEqual((a, b), ((1, 2, 5), (2, 3, 1)))


class TestCorrespondenceCover(unittest.TestCase):
    def test_partner_both_directions(self):
        cover = CorrespondenceCover([2, 3], {(1, 0): [(3, 1)]})

        self.assertEqual(cover.partner(0, 1, 1), 3)
        self.assertEqual(cover.partner(1, 3, 0), 1)
        self.assertIsNone(cover.partner(0, 2, 1))

    def test_rejects_non_matchings_and_non_edges(self):
        with self.assertRaises(InstanceError):
            CorrespondenceCover([2, 2], {(0, 1): [(1, 1), (1, 2)]})

        with self.assertRaises(InstanceError):
            CorrespondenceCover([2, 2], {(0, 1): [(3, 1)]})

        cover = CorrespondenceCover([2, 2, 2], {(0, 2): [(1, 1)]})
        with self.assertRaises(InstanceError):
            Instance(Graph.path(3), CORR_MODE, cover=cover)

    def test_list_to_cover_preserves_conflicts(self):
        g = Graph.cycle(4)
        inst = Instance(g, lists=[[1, 2, 3], [2, 3, 4], [1, 3], [1, 4, 7]])
        corr = list_to_cover(inst)

        for u, v in g.sorted_edges():
            for c in inst.lists[u]:
                for d in inst.lists[v]:
                    i, j = inst.lists[u].index(c) + 1, inst.lists[v].index(d) + 1
                    self.assertEqual(inst.conflicts(u, c, v, d), corr.conflicts(u, i, v, j))

        a = (1, 2, 1, 4)
        self.assertEqual(colouring_from_cover(inst, colouring_to_cover(inst, a)), a)

    def test_list_to_cover_preserves_distance(self):
        inst = Instance.uniform(Graph.path(3), 3)
        corr = list_to_cover(inst)

        for a, b in (((1, 2, 1), (2, 1, 2)), ((1, 2, 3), (3, 1, 2))):
            self.assertEqual(
                exact_distance(corr, colouring_to_cover(inst, a), colouring_to_cover(inst, b)).value,
                exact_distance(inst, a, b).value,
            )


class TestColourShiftDigraph(unittest.TestCase):
    def test_four_cycle_rotation_has_no_digon(self):
        inst = Instance.uniform(Graph.cycle(4), 4)
        a, b = (1, 2, 3, 4), (2, 3, 4, 1)
        d = colour_shift_digraph(inst, a, b)

        self.assertEqual(sorted(d.arcs), [(0, 1), (1, 2), (2, 3), (3, 0)])
        self.assertEqual(d.digons(), [])
        self.assertEqual(digraph_mu(d), 0)
        self.assertEqual(reconfig_lower_bound(inst, a, b), 4)

    def test_swap_is_a_digon(self):
        inst = Instance.uniform(Graph.path(2), 3)
        d = colour_shift_digraph(inst, (1, 2), (2, 1))

        self.assertEqual(d.digons(), [(0, 1)])
        self.assertEqual(reconfig_lower_bound(inst, (1, 2), (2, 1)), 3)

    def test_correspondence_arcs(self):
        cover = CorrespondenceCover([3, 3], {(0, 1): [(1, 2), (2, 1)]})
        inst = Instance(Graph.path(2), CORR_MODE, cover=cover)

        self.assertEqual(colour_shift_digraph(inst, (1, 1), (2, 2)).digons(), [(0, 1)])
        self.assertEqual(hamming((1, 1), (2, 2)), 2)

    def test_rejects_improper_endpoints(self):
        inst = Instance.uniform(Graph.path(2), 3)

        with self.assertRaises(ColouringError):
            colour_shift_digraph(inst, (1, 1), (2, 1))

    def test_swapping_endpoints_reverses_arcs(self):
        inst = Instance.uniform(Graph.path(3), 3)
        proper = [c for c in itertools.product(range(1, 4), repeat=3) if is_proper(inst, c)]

        for a in proper:
            self.assertEqual(colour_shift_digraph(inst, a, a).arcs, frozenset())

            for b in proper:
                self.assertEqual(colour_shift_digraph(inst, a, b).reversed(), colour_shift_digraph(inst, b, a))
                self.assertEqual(reconfig_lower_bound(inst, a, b), reconfig_lower_bound(inst, b, a))


if __name__ == "__main__":
    unittest.main()
