import os
import ujson
import tempfile
import unittest

from unittest import mock

from recolor.infra.config import RecolorConfig, RunConfig
from recolor.infra.run import Run
from recolor.utils.parser import Arguments


def sweep_arguments():
    arguments = Arguments("test")
    arguments.add_sweep_parameters()
    arguments.add_oracle_parameters()

    return arguments


class TestRecolorConfig(unittest.TestCase):
    def test_defaults_are_unassigned(self):
        config = RecolorConfig(nmax=5)

        self.assertEqual(config.nmax, 5)
        self.assertEqual(config.mode, "list")
        self.assertEqual(set(config.assigned), {"nmax"})

    def test_from_existing_keeps_assigned_fields_only(self):
        merged = RecolorConfig.from_existing(RecolorConfig(nmax=5, seed=1), RecolorConfig(seed=2))

        self.assertEqual((merged.nmax, merged.seed), (5, 2))

    def test_unknown_keys(self):
        config = RecolorConfig()

        self.assertEqual(config.configure(nmax=3, colour="red"), {"colour"})

        with self.assertRaises(Exception):
            config.set("colour", "red")

    def test_save_and_load(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "config.json")
            RecolorConfig(nmax=6, list_rule="gadget", budget=1000).save(path)

            with open(path) as f:
                self.assertIn("meta", ujson.load(f))

            config, ignored = RecolorConfig.from_path(path)

            self.assertEqual((config.nmax, config.list_rule, config.budget), (6, "gadget", 1000))
            self.assertEqual(ignored, {"meta"})

            with self.assertRaises(AssertionError):
                RecolorConfig().save(path)

    def test_load_from_sweep_metadata(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "report.jsonl.meta")

            with open(path, "w") as f:
                f.write(ujson.dumps({"hostname": "h", "config": {"nmax": 4, "mode": "corr"}, "passed": True}))

            config, ignored = RecolorConfig.from_path(path)

        self.assertEqual((config.nmax, config.mode), (4, "corr"))
        self.assertEqual(ignored, set())


class TestArguments(unittest.TestCase):
    def test_flags_override_config_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "config.json")
            RecolorConfig(nmax=6, seed=7).save(path)

            args = sweep_arguments().parse(["--config", path, "--nmax", "3"])

        self.assertEqual((args.config.nmax, args.config.seed), (3, 7))

    def test_environment_budget(self):
        with mock.patch.dict(os.environ, {"RECOLOR_BUDGET": "123"}):
            self.assertEqual(sweep_arguments().parse([]).config.budget, 123)
            self.assertEqual(sweep_arguments().parse(["--budget", "9"]).config.budget, 9)

    def test_output_is_not_a_config_field(self):
        args = sweep_arguments().parse(["--output", "out.jsonl", "--all-graphs"])

        self.assertEqual(args.output, "out.jsonl")
        self.assertFalse(hasattr(args.config, "output"))
        self.assertFalse(args.config.connected_only)


class TestRun(unittest.TestCase):
    def test_context_stacks_and_restores(self):
        before = Run().experiment

        with Run().context(RunConfig(experiment="inner")):
            self.assertEqual(Run().experiment, "inner")

            with Run().context(RunConfig(name="run")):
                self.assertEqual((Run().experiment, Run().name), ("inner", "run"))

        self.assertEqual(Run().experiment, before)

    def test_open_refuses_to_overwrite(self):
        with tempfile.TemporaryDirectory() as directory:
            with Run().context(RunConfig(root=directory, name="run")):
                with Run().open("out.txt", "w") as f:
                    f.write("x")

                with self.assertRaises(AssertionError):
                    Run().open("out.txt", "w")


if __name__ == "__main__":
    unittest.main()
