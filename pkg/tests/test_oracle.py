import os
import random
import unittest

from unittest import mock

from recolor.colormodel import Instance, reconfig_lower_bound
from recolor.constructions import comb_formulas, gen_c4_example, gen_comb, gen_frozen_regular, gen_path_colouring, path_formulas
from recolor.graphcore import Graph, enumerate_graphs, is_tree
from recolor.infra.config.settings import DEFAULT_BUDGET, budget_from_env
from recolor.oracle import (
    BudgetExceeded,
    ReconfigurationGraph,
    StateSpace,
    count_colourings,
    diameter,
    eccentricity,
    enumerate_colourings,
    exact_distance,
    is_connected_reconfig,
    is_frozen,
    radius,
    random_colouring_pairs,
)
from recolor.schedulers import RecolourSchedule, validate_schedule


class TestStateSpace(unittest.TestCase):
    def test_encode_decode(self):
        inst = Instance(Graph.path(3), lists=[[1, 4], [2, 3, 9], [1, 2]])
        space = StateSpace(inst)
        colouring = (4, 9, 2)

        self.assertEqual(tuple(space.decode(space.encode(colouring))), colouring)

    def test_count_and_enumerate(self):
        inst = Instance.uniform(Graph.path(3), 3)

        self.assertEqual(count_colourings(inst), 12)
        self.assertEqual(len(set(enumerate_colourings(inst))), 12)

    def test_budget_exceeded(self):
        inst = Instance.uniform(Graph.path(6), 4)

        with self.assertRaises(BudgetExceeded) as ctx:
            count_colourings(inst, budget=10)

        self.assertGreater(ctx.exception.explored, 10)

    def test_budget_from_environment(self):
        with mock.patch.dict(os.environ, {"RECOLOR_BUDGET": "77"}):
            self.assertEqual(budget_from_env(), 77)

        with mock.patch.dict(os.environ, {"RECOLOR_BUDGET": ""}):
            self.assertEqual(budget_from_env(), DEFAULT_BUDGET)


class TestDistance(unittest.TestCase):
    def test_four_cycle_needs_six_steps(self):
        inst, a, b = gen_c4_example()
        result = exact_distance(inst, a, b)

        self.assertEqual(result.value, 6)
        self.assertEqual(reconfig_lower_bound(inst, a, b), 4)

        ok, diagnostic = validate_schedule(inst, a, b, RecolourSchedule(result.witness))
        self.assertTrue(ok, diagnostic)
        self.assertEqual(len(result.witness), 6)

    def test_zero_distance(self):
        inst, a, _ = gen_c4_example()
        self.assertEqual(exact_distance(inst, a, a).value, 0)

    def test_unreachable_pair(self):
        inst = Instance.uniform(Graph.cycle(4), 2)
        result = exact_distance(inst, (1, 2, 1, 2), (2, 1, 2, 1))

        self.assertTrue(result.infinite)
        self.assertEqual(result.toDict()["value"], "inf")

    def test_distance_is_symmetric_and_above_lower_bound(self):
        rng = random.Random(7)

        for g in enumerate_graphs(4, connected_only=True):
            inst = Instance.uniform(g, g.max_degree() + 2)

            for a, b in random_colouring_pairs(inst, 3, rng):
                there = exact_distance(inst, a, b).value
                back = exact_distance(inst, b, a).value

                self.assertEqual(there, back)
                self.assertLessEqual(reconfig_lower_bound(inst, a, b), there)

    def test_budget_applies_to_search(self):
        inst, a, b = gen_c4_example()

        with self.assertRaises(BudgetExceeded):
            exact_distance(inst, a, b, budget=5)


class TestExtremal(unittest.TestCase):
    def test_path_formulas(self):
        for n in (3, 4, 5):
            inst = Instance.uniform(Graph.path(n), 4)
            expected_diameter, expected_radius = path_formulas(n)

            self.assertEqual(diameter(inst).value, expected_diameter, n)
            self.assertEqual(radius(inst).value, expected_radius, n)

    @unittest.skipUnless(os.getenv("RECOLOR_SLOW_TESTS") == "1", "set RECOLOR_SLOW_TESTS=1 for the comb")
    def test_comb_formulas(self):
        g, _ = gen_comb(8)
        inst = Instance.uniform(g, 5)

        self.assertEqual((diameter(inst).value, radius(inst).value), comb_formulas(8))

    def test_path_centre(self):
        inst = Instance.uniform(Graph.path(4), 4)
        self.assertEqual(eccentricity(inst, gen_path_colouring(4)).value, 5)

    def test_small_batches_agree(self):
        inst = Instance.uniform(Graph.path(4), 4)
        graph = ReconfigurationGraph(inst)

        self.assertEqual(list(graph.eccentricities(batch_size=64)), list(graph.eccentricities(batch_size=512)))

    def test_frozen_cliques(self):
        for k in (1, 2, 3):
            g, a = gen_frozen_regular(k)
            inst = Instance.uniform(g, k + 1)

            self.assertTrue(is_frozen(inst, a))
            self.assertFalse(is_connected_reconfig(inst))
            self.assertTrue(diameter(inst).infinite)

    def test_four_cycle_two_colours_disconnected(self):
        inst = Instance.uniform(Graph.cycle(4), 2)

        self.assertFalse(is_connected_reconfig(inst))
        self.assertTrue(is_frozen(inst, (1, 2, 1, 2)))

    def test_trees_connected_in_three_colours(self):
        for n in range(1, 6):
            for g in enumerate_graphs(n, connected_only=True):
                if is_tree(g):
                    self.assertTrue(is_connected_reconfig(Instance.uniform(g, 3)), g)

    def test_single_vertex(self):
        inst = Instance.uniform(Graph(1), 3)

        self.assertEqual(diameter(inst).value, 1)
        self.assertEqual(radius(inst).value, 1)
        self.assertEqual(diameter(Instance.uniform(Graph(1), 1)).value, 0)


if __name__ == "__main__":
    unittest.main()
