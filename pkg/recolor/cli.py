import sys
import ujson

from recolor.colormodel import Instance, InstanceError, reconfig_lower_bound
from recolor.constructions import (
    ConstructionError,
    gen_c4_example,
    gen_comb,
    gen_corr_gadget,
    gen_frozen_regular,
    gen_hard_pair_k,
    gen_list_gadget,
    gen_matching_choice_graph,
    gen_path,
    gen_path_colouring,
    gen_star_example,
    gen_tilde_pair,
)
from recolor.graphcore import (
    Graph,
    GraphError,
    chromatic_number,
    degeneracy,
    edmonds_gallai,
    load_edge_list,
    mad,
    matching_number,
    read_graph6_lines,
    vertex_cover_number,
)
from recolor.harness import check_regular_cereceda, hunt
from recolor.harness.sampling import uniform_k
from recolor.infra.run import Run
from recolor.oracle import BudgetExceeded, diameter, exact_distance, radius
from recolor.schedulers import ALGORITHMS, RecolourSchedule, SchedulerError, schedule, validate_schedule
from recolor.utils.parser import Arguments
from utility.utils.save_metadata import format_metadata, get_sweep_metadata

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

COMMANDS = {}


def command(name, help):
    def register(fn):
        COMMANDS[name] = (fn, help)
        return fn

    return register


def _load_json(path):
    if path == "-":
        return ujson.load(sys.stdin)

    with open(path) as f:
        return ujson.load(f)


def _load_instance(path, need_pair=False):
    inst, a, b = Instance.from_dict(_load_json(path))

    if need_pair and (a is None or b is None):
        raise InstanceError("this command needs an instance carrying both alpha and beta")

    return inst, a, b


def _graph_from_json(data):
    if isinstance(data, list):
        return Graph(1 + max((max(e) for e in data), default=0), data)

    return Graph.from_dict(data)


def _load_graph(args, required=True):
    if getattr(args, "graph", None) is not None:
        return _graph_from_json(_load_json(args.graph))

    if args.graph6 is not None:
        graphs = read_graph6_lines(args.graph6)
        if len(graphs) != 1:
            raise GraphError(f"{args.graph6} holds {len(graphs)} graph6 lines; this command takes exactly one")
        return graphs[0]

    if args.edges is not None:
        return load_edge_list(args.edges)

    if required:
        raise ConstructionError("this construction needs an input graph: use --graph6 or --edges")

    return None


def _emit(data):
    print(ujson.dumps(data))


def _print_result(result, as_json):
    if as_json:
        _emit(result.toDict())
    else:
        print("inf" if result.infinite else result.value)


def _oracle_arguments(description, prog):
    arguments = Arguments(description, prog=f"recolor {prog}")
    arguments.add_instance_input()
    arguments.add_oracle_parameters()
    arguments.add_argument("--json", dest="json", default=False, action="store_true")
    arguments.add_argument("--verbose", dest="verbose", default=False, action="store_true")

    return arguments


@command("dist", "shortest recolouring distance from alpha to beta")
def dist(argv):
    args = _oracle_arguments("Exact reconfiguration distance between alpha and beta.", "dist").parse(argv)
    inst, a, b = _load_instance(args.instance, need_pair=True)

    result = exact_distance(inst, a, b, args.config.budget)
    _print_result(result, args.json)

    return EXIT_OK


def _extremal(argv, prog, name, fn):
    args = _oracle_arguments(f"Exact {name} of the reconfiguration graph.", prog).parse(argv)
    inst, _, _ = _load_instance(args.instance)

    result = fn(inst, args.config.budget, args.config.eccentricity_batch, verbose=args.verbose)
    _print_result(result, args.json)

    return EXIT_OK


@command("diam", "diameter of the reconfiguration graph")
def diam(argv):
    return _extremal(argv, "diam", "diameter", diameter)


@command("rad", "radius of the reconfiguration graph")
def rad(argv):
    return _extremal(argv, "rad", "radius", radius)


@command("schedule", "recolouring schedule from a constructive scheduler")
def schedule_command(argv):
    arguments = Arguments("Emit a recolouring schedule with its guaranteed bound.", prog="recolor schedule")
    arguments.add_instance_input()
    arguments.add_scheduler_parameters(ALGORITHMS)
    args = arguments.parse(argv)

    inst, a, b = _load_instance(args.instance, need_pair=True)
    _emit(schedule(inst, a, b, args.alg).toDict())

    return EXIT_OK


@command("lowerbound", "digon matching number plus Hamming distance")
def lowerbound(argv):
    arguments = Arguments("Lower bound on the distance from alpha to beta.", prog="recolor lowerbound")
    arguments.add_instance_input()
    args = arguments.parse(argv)

    inst, a, b = _load_instance(args.instance, need_pair=True)
    print(reconfig_lower_bound(inst, inst.check_colouring(a, "alpha"), inst.check_colouring(b, "beta")))

    return EXIT_OK


@command("validate", "replay a schedule and check every step")
def validate(argv):
    arguments = Arguments("Check that a schedule recolours alpha into beta properly.", prog="recolor validate")
    arguments.add_instance_input()
    arguments.add_argument("schedule", help="Schedule JSON file, or - for stdin")
    args = arguments.parse(argv)

    if args.instance == "-" and args.schedule == "-":
        raise InstanceError("only one of the instance and the schedule can come from stdin")

    inst, a, b = _load_instance(args.instance, need_pair=True)
    ok, diagnostic = validate_schedule(inst, a, b, RecolourSchedule.cast(_load_json(args.schedule)))
    print(diagnostic)

    return EXIT_OK if ok else EXIT_VIOLATION


def _gen_c4_example(args):
    inst, a, b = gen_c4_example()
    return inst.toDict(a, b)


def _gen_comb(args):
    g, a = gen_comb(args.n or 8)
    return Instance.uniform(g, args.k or 5).toDict(a)


def _gen_path(args):
    n = args.n or 4
    return Instance.uniform(gen_path(n), args.k or 4).toDict(gen_path_colouring(n))


def _gen_frozen(args):
    g, a = gen_frozen_regular(args.k or 2)
    return Instance.uniform(g, g.n).toDict(a)


def _gen_list_gadget(args):
    inst, a, b = gen_list_gadget(_load_graph(args))
    return inst.toDict(a, b)


def _gen_corr_gadget(args):
    inst, a, b = gen_corr_gadget(_load_graph(args))
    return inst.toDict(a, b)


def _gen_hard_pair(args):
    g = _load_graph(args)
    k = args.k or uniform_k(g, "hard-pair")
    a, b = gen_hard_pair_k(g, k)

    return Instance.uniform(g, k).toDict(a, b)


def _gen_tilde_pair(args):
    g = _load_graph(args)
    k, a, b = gen_tilde_pair(g)

    return Instance.uniform(g, k).toDict(a, b)


def _gen_star_example(args):
    inst, a, b = gen_star_example(args.c or 0)
    return inst.toDict(a, b)


def _gen_matching_choice(args):
    p = args.p or 2
    g, joins, split = gen_matching_choice_graph(p)

    data = Instance.uniform(g, args.k or 2 * p).toDict()
    data["cliqueMatching"] = joins.toDict()
    data["splitMatching"] = split.toDict() if split is not None else None

    return data


GENERATORS = {
    "c4-example": _gen_c4_example,
    "comb": _gen_comb,
    "path": _gen_path,
    "frozen": _gen_frozen,
    "list-gadget": _gen_list_gadget,
    "corr-gadget": _gen_corr_gadget,
    "hard-pair": _gen_hard_pair,
    "tilde-pair": _gen_tilde_pair,
    "star-example": _gen_star_example,
    "matching-choice": _gen_matching_choice,
}


@command("gen", "emit a constructed instance as JSON")
def gen(argv):
    arguments = Arguments("Build one of the extremal constructions.", prog="recolor gen")
    arguments.add_argument("construction", choices=sorted(GENERATORS))
    arguments.add_argument("--n", dest="n", default=None, type=int)
    arguments.add_argument("--k", dest="k", default=None, type=int)
    arguments.add_argument("--c", dest="c", default=None, type=int)
    arguments.add_argument("--p", dest="p", default=None, type=int)
    arguments.add_graph_input()
    args = arguments.parse(argv)

    _emit(GENERATORS[args.construction](args))

    return EXIT_OK


def _sweep(argv, description, prog, run):
    arguments = Arguments(description, prog=f"recolor {prog}")
    arguments.add_sweep_parameters()
    arguments.add_oracle_parameters()
    arguments.add_argument("--verbose", dest="verbose", default=False, action="store_true")
    args = arguments.parse(argv)

    config = args.config
    graphs = None

    if args.graph6 is not None:
        graphs = read_graph6_lines(args.graph6)
        if not graphs:
            raise GraphError(f"{args.graph6} holds no graph6 line")

    with Run().context(config):
        report = run(config, args.verbose, graphs)

        if args.output is not None:
            with Run().open(args.output, "w") as f:
                report.save(f)

            with Run().open(args.output + ".meta", "w") as f:
                f.write(format_metadata(get_sweep_metadata(config, report)) + "\n")

    _emit(report.toDict())

    return EXIT_OK if report.passed else EXIT_VIOLATION


@command("hunt", "sweep small graphs for violations of n + mu / n + tau")
def hunt_command(argv):
    return _sweep(argv, "Conjecture sweep over every small graph.", "hunt", hunt)


@command("cereceda", "diameters of (d + 2)-colourings of d-regular graphs")
def cereceda(argv):
    return _sweep(
        argv,
        "Reconfiguration diameters of d-regular graphs in d + 2 colours.",
        "cereceda",
        lambda config, verbose, graphs: check_regular_cereceda(config=config, verbose=verbose, graphs=graphs),
    )


@command("decomp", "Edmonds-Gallai decomposition and the main invariants of a graph")
def decomp(argv):
    arguments = Arguments("Edmonds-Gallai parts plus mu, tau, chi, degeneracy and mad.", prog="recolor decomp")
    arguments.add_argument("graph", nargs="?", default=None, help="Graph or instance JSON, or - for stdin")
    arguments.add_graph_input()
    args = arguments.parse(argv)

    g = _load_graph(args, required=False)
    if g is None:
        raise GraphError("decomp needs a graph: a JSON file, --graph6 or --edges")

    data = edmonds_gallai(g).toDict()
    data.update(
        {
            "mu": matching_number(g),
            "tau": vertex_cover_number(g),
            "chi": chromatic_number(g),
            "degeneracy": degeneracy(g),
            "mad": str(mad(g)),
        }
    )
    _emit(data)

    return EXIT_OK


def usage():
    lines = ["usage: recolor <command> [options]", "", "commands:"]
    lines += [f"  {name:<12}{help}" for name, (_, help) in COMMANDS.items()]

    return "\n".join(lines)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)

    if not argv or argv[0] in ("-h", "--help"):
        print(usage())
        return EXIT_OK if argv else EXIT_USAGE

    name, rest = argv[0], argv[1:]

    if name not in COMMANDS:
        print(f"recolor: unknown command {name!r}\n\n{usage()}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return COMMANDS[name][0](rest)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except BudgetExceeded as e:
        print(f"recolor {name}: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except SchedulerError as e:
        print(f"recolor {name}: scheduler failure: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except (ValueError, OSError) as e:
        print(f"recolor {name}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
