import copy

from argparse import ArgumentParser

from recolor.infra.config import RecolorConfig
from recolor.infra.config.settings import budget_from_env


class Arguments:
    """
    Thin wrapper around ArgumentParser: each subcommand adds the argument groups it needs,
    registers consistency checks, and gets back the parsed namespace with a RecolorConfig
    merged from --config, the environment and explicit flags (in that order of precedence).
    """

    def __init__(self, description, prog=None):
        self.parser = ArgumentParser(description=description, prog=prog)
        self.checks = []

        self.add_argument("--config", dest="config_path", default=None)
        self.add_argument("--root", dest="root", default=None)
        self.add_argument("--experiment", dest="experiment", default=None)
        self.add_argument("--run", dest="name", default=None)

    def add_instance_input(self, name="instance"):
        self.add_argument(name, help="Instance JSON file, or - for stdin")

    def add_graph_input(self, required=False):
        self.add_argument("--graph6", dest="graph6", default=None)
        self.add_argument("--edges", dest="edges", default=None, help="JSON edge-list file")

        def check_graph_input(args):
            given = [x for x in (args.graph6, args.edges) if x is not None]
            assert len(given) <= 1, "Supply at most one of --graph6 and --edges."
            assert not required or given, "A graph is required: use --graph6 or --edges."

        self.checks.append(check_graph_input)

    def add_oracle_parameters(self):
        self.add_argument("--budget", dest="budget", default=None, type=int)
        self.add_argument("--batch", dest="eccentricity_batch", default=None, type=int)

        def check_budget(args):
            assert args.budget is None or args.budget > 0, "--budget must be positive."

        self.checks.append(check_budget)

    def add_scheduler_parameters(self, choices):
        self.add_argument("--alg", dest="alg", default="auto", choices=choices)

    def add_sweep_parameters(self):
        self.add_argument("--nmax", dest="nmax", default=None, type=int)
        self.add_argument("--mode", dest="mode", default=None, choices=["list", "corr"])
        self.add_argument(
            "--list-rule",
            dest="list_rule",
            default=None,
            choices=["d+2", "2d+1", "uniform-k", "gadget", "hard-pair"],
        )
        self.add_argument("--k", dest="uniform_k", default=None, type=int)
        self.add_argument("--samples", dest="samples_per_graph", default=None, type=int)
        self.add_argument("--seed", dest="seed", default=None, type=int)
        self.add_argument("--pool", dest="colour_pool", default=None, type=int)
        self.add_argument("--exhaustive-nmax", dest="exhaustive_nmax", default=None, type=int)
        self.add_argument("--pairs", dest="sampled_pairs", default=None, type=int)
        self.add_argument("--dmax", dest="dmax", default=None, type=int)
        self.add_argument("--nranks", dest="nranks", default=None, type=int)
        self.add_argument(
            "--all-graphs", dest="connected_only", default=None, action="store_false"
        )
        self.add_argument("--output", dest="output", default=None)
        self.add_argument("--graph6", dest="graph6", default=None, help="Sweep the graphs of this graph6 file instead")

        def check_sweep(args):
            assert args.nmax is None or 1 <= args.nmax <= 8, "--nmax must lie in 1..8."
            assert args.nranks is None or args.nranks >= 1, "--nranks must be positive."

        self.checks.append(check_sweep)

    def add_argument(self, *args, **kw_args):
        return self.parser.add_argument(*args, **kw_args)

    def check_arguments(self, args):
        for check in self.checks:
            try:
                check(args)
            except AssertionError as e:
                self.parser.error(str(e))

    def parse(self, argv=None):
        args = self.parser.parse_args(argv)
        self.check_arguments(args)

        args.input_arguments = copy.deepcopy(args)
        args.config = self.build_config(args)

        return args

    def build_config(self, args):
        if args.config_path is not None:
            config, _ = RecolorConfig.from_path(args.config_path)
        else:
            config = RecolorConfig()
            config.set("budget", budget_from_env())

        explicit = {
            k: v
            for k, v in vars(args).items()
            if v is not None and k not in ("config_path", "input_arguments") and hasattr(config, k)
        }
        config.configure(**explicit)

        return config
