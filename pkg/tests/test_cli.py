import io
import os
import ujson
import tempfile
import unittest

from unittest import mock

from recolor.cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, main
from recolor.graphcore import Graph


def run(argv, stdin=""):
    with mock.patch("sys.stdin", io.StringIO(stdin)), mock.patch("sys.stdout", new_callable=io.StringIO) as out:
        with mock.patch("sys.stderr", new_callable=io.StringIO):
            code = main(argv)

    return code, out.getvalue()


def last_json(output):
    return ujson.loads(output.strip().splitlines()[-1])


class CommandLineTestCase(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.directory.cleanup()

    def write(self, name, data):
        path = os.path.join(self.directory.name, name)

        with open(path, "w") as f:
            f.write(ujson.dumps(data))

        return path

    def write_graph6(self, name, *graphs):
        path = os.path.join(self.directory.name, name)

        with open(path, "w") as f:
            f.write("".join(g.to_graph6() + "\n" for g in graphs))

        return path

    def generate(self, *argv):
        code, output = run(["gen", *argv])
        self.assertEqual(code, EXIT_OK, output)

        return output


class TestOracleCommands(CommandLineTestCase):
    def test_gen_piped_into_dist(self):
        code, output = run(["dist", "-"], stdin=self.generate("c4-example"))

        self.assertEqual(code, EXIT_OK)
        self.assertEqual(output.strip(), "6")

    def test_dist_json_carries_witness(self):
        code, output = run(["dist", "-", "--json"], stdin=self.generate("c4-example"))

        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(last_json(output)["witness"]), 6)

    def test_path_diameter_and_radius(self):
        instance = self.generate("path", "--n", "4")

        self.assertEqual(run(["diam", "-"], stdin=instance), (EXIT_OK, "6\n"))
        self.assertEqual(run(["rad", "-"], stdin=instance), (EXIT_OK, "5\n"))

    def test_budget_exceeded(self):
        code, _ = run(["dist", "-", "--budget", "5"], stdin=self.generate("c4-example"))
        self.assertEqual(code, EXIT_BUDGET)

    def test_lowerbound(self):
        self.assertEqual(run(["lowerbound", "-"], stdin=self.generate("c4-example")), (EXIT_OK, "4\n"))

    def test_dist_needs_both_colourings(self):
        code, _ = run(["dist", "-"], stdin=self.generate("comb"))
        self.assertEqual(code, EXIT_USAGE)


class TestScheduleCommands(CommandLineTestCase):
    def test_tree_exact_rejects_cycle(self):
        code, _ = run(["schedule", "-", "--alg", "tree-exact"], stdin=self.generate("c4-example"))
        self.assertEqual(code, EXIT_USAGE)

    def test_schedule_then_validate(self):
        instance = self.write("c4.json", ujson.loads(self.generate("c4-example")))

        code, output = run(["schedule", instance, "--alg", "cycle"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(last_json(output)["theorem"], "cycle")

        self.assertEqual(run(["validate", instance, "-"], stdin=output), (EXIT_OK, "ok\n"))

    def test_validate_reports_bad_step(self):
        instance = self.write("c4.json", ujson.loads(self.generate("c4-example")))
        code, output = run(["validate", instance, "-"], stdin="[[0, 2]]")

        self.assertEqual(code, EXIT_VIOLATION)
        self.assertIn("clashes", output)


class TestGenerators(CommandLineTestCase):
    def test_comb_defaults(self):
        data = ujson.loads(self.generate("comb"))

        self.assertEqual(data["n"], 8)
        self.assertEqual(len(data["alpha"]), 8)
        self.assertEqual(data["lists"][0], [1, 2, 3, 4, 5])

    def test_hard_pair_from_edge_list(self):
        edges = self.write("p3.json", [[0, 1], [1, 2]])
        data = ujson.loads(self.generate("hard-pair", "--edges", edges))

        self.assertEqual(len(data["lists"][0]), 4)
        self.assertEqual(run(["lowerbound", "-"], stdin=ujson.dumps(data)), (EXIT_OK, "4\n"))

    def test_gadget_needs_graph(self):
        code, _ = run(["gen", "list-gadget"])
        self.assertEqual(code, EXIT_USAGE)

    def test_gadget_takes_a_single_graph6_line(self):
        self.generate("list-gadget", "--graph6", self.write_graph6("one.g6", Graph.path(3)))

        two = self.write_graph6("two.g6", Graph.path(3), Graph.cycle(4))
        self.assertEqual(run(["gen", "list-gadget", "--graph6", two])[0], EXIT_USAGE)

    def test_matching_choice(self):
        data = ujson.loads(self.generate("matching-choice", "--p", "3"))

        self.assertEqual(data["n"], 12)
        self.assertEqual(len(data["cliqueMatching"]), 6)
        self.assertIsNone(data["splitMatching"])


class TestMisc(CommandLineTestCase):
    def test_decomp(self):
        graph = self.write("p3.json", Graph.path(3).toDict())
        code, output = run(["decomp", graph])
        data = last_json(output)

        self.assertEqual(code, EXIT_OK)
        self.assertEqual((data["v1"], data["v2"], data["v3"]), ([0, 2], [1], []))
        self.assertEqual((data["mu"], data["tau"], data["chi"]), (1, 1, 2))
        self.assertEqual(data["mad"], "4/3")

    def test_hunt(self):
        code, output = run(["hunt", "--nmax", "3", "--samples", "1", "--pairs", "1", "--root", self.directory.name])

        self.assertEqual(code, EXIT_OK)
        self.assertTrue(last_json(output)["passed"])

    def test_hunt_writes_report(self):
        argv = ["hunt", "--nmax", "2", "--list-rule", "gadget", "--root", self.directory.name, "--run", "r"]
        code, _ = run(argv + ["--output", "report.jsonl"])
        self.assertEqual(code, EXIT_OK)

        found = [os.path.join(d, f) for d, _, files in os.walk(self.directory.name) for f in files]
        self.assertEqual(sorted(os.path.basename(f) for f in found), ["report.jsonl", "report.jsonl.meta"])

    def test_hunt_reads_every_graph6_line(self):
        graphs = self.write_graph6("three.g6", Graph.cycle(4), Graph.complete(3), Graph.path(3))
        code, output = run(["hunt", "--graph6", graphs, "--samples", "1", "--pairs", "1", "--root", self.directory.name])

        self.assertEqual(code, EXIT_OK)
        self.assertEqual(last_json(output)["instancesChecked"], 3)

    def test_cereceda_keeps_regular_graph6_lines(self):
        graphs = self.write_graph6("three.g6", Graph.cycle(4), Graph.complete(3), Graph.path(3))
        code, output = run(["cereceda", "--graph6", graphs, "--pairs", "1", "--root", self.directory.name])

        self.assertEqual(code, EXIT_OK)
        self.assertEqual(last_json(output)["instancesChecked"], 2)

    def test_unknown_command(self):
        self.assertEqual(run(["recolour-everything"])[0], EXIT_USAGE)
        self.assertEqual(run([])[0], EXIT_USAGE)
        self.assertEqual(run(["--help"])[0], EXIT_OK)

    def test_bad_nmax_is_usage_error(self):
        self.assertEqual(run(["hunt", "--nmax", "12"])[0], EXIT_USAGE)


if __name__ == "__main__":
    unittest.main()
