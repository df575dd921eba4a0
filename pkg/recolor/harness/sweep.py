import time
import random

from tqdm import tqdm

from recolor.colormodel.digraph import reconfig_lower_bound
from recolor.colormodel.instance import LIST_MODE, Instance
from recolor.constructions import ConstructionError, gen_hard_pair_k
from recolor.graphcore.cover import vertex_cover_number
from recolor.graphcore.enumeration import enumerate_graphs
from recolor.graphcore.graph import Graph
from recolor.graphcore.matching import matching_number
from recolor.graphcore.structure import is_regular
from recolor.harness.report import SweepReport, check, new_record
from recolor.harness.sampling import sample_instances
from recolor.infra.config import RecolorConfig
from recolor.infra.launcher import Launcher
from recolor.infra.run import Run
from recolor.oracle import BudgetExceeded, diameter, exact_distance, random_colouring_pairs, sampled_distances
from recolor.schedulers import PreconditionError, SchedulerError, schedule

TASK_SEED_STRIDE = 1_000_003


def conjectured_bound(inst):
    """(name, value): n + mu for lists, n + tau for correspondence covers."""
    if inst.mode == LIST_MODE:
        return "n+mu", inst.n + matching_number(inst.graph)

    return "n+tau", inst.n + vertex_cover_number(inst.graph)


def cross_check(record, inst, a, b, config):
    """
    Lower bound <= oracle distance <= schedule length <= guaranteed bound, for the best
    scheduler whose hypotheses hold. A scheduler error is a violation.
    """
    instance = inst.toDict(a, b)
    lower = reconfig_lower_bound(inst, a, b)
    distance = exact_distance(inst, a, b, config.budget).value

    if distance is None:
        record["findings"].append({"instance": instance, "quantity": "distance", "observed": "inf"})
        return

    check(record, "lower bound", lower, distance, "<=", instance, tight=False)

    try:
        sched = schedule(inst, a, b)
    except PreconditionError:
        return
    except SchedulerError as e:
        record["violations"].append({"instance": instance, "quantity": "scheduler", "bound": None, "observed": str(e)})
        return

    check(record, "distance", distance, len(sched), "<=", instance, tight=False)
    check(record, f"{sched.theorem} length", len(sched), sched.bound, "<=", instance, tight=False)


def check_instance(record, inst, pair, config, rng):
    name, bound = conjectured_bound(inst)
    rule = record["rule"]

    if rule == "gadget":
        a, b = pair
        check(record, f"gadget distance = {name}", exact_distance(inst, a, b, config.budget).value, bound, "==")

    elif rule == "hard-pair":
        a, b = pair
        check(record, f"hard pair distance >= {name}", exact_distance(inst, a, b, config.budget).value, bound, ">=")

    elif inst.n <= config.exhaustive_nmax:
        diam = diameter(inst, config.budget, config.eccentricity_batch).value
        check(record, f"diameter <= {name}", diam, bound)

        if rule == "uniform-k" and diam is not None and diam < bound:
            record["findings"].append({"instance": record["instance"], "quantity": "diameter", "bound": bound, "observed": diam})

    pairs = random_colouring_pairs(inst, config.sampled_pairs, rng, config.budget)

    if pair is None and inst.n > config.exhaustive_nmax:
        for (a, b), result in zip(pairs, sampled_distances(inst, pairs, config.budget)):
            check(record, f"sampled distance <= {name}", result.value, bound, "<=", inst.toDict(a, b))

    for a, b in ([pair] if pair is not None else []) + pairs:
        cross_check(record, inst, a, b, config)


def hunt_graph(g, config, rng, task):
    records = []

    for sample, (inst, pair) in enumerate(sample_instances(g, config, rng)):
        a, b = pair if pair is not None else (None, None)
        record = new_record(task, config.list_rule, inst.toDict(a, b), sample)

        try:
            check_instance(record, inst, pair, config, rng)
        except BudgetExceeded as e:
            Run().print(f"#> Task {task}.{sample}: {e}")
            record["budgetExceeded"] = True

        records.append(record)

    return records


def cereceda_graph(g, config, rng, task):
    """
    k = d + 2 on a d-regular graph: the diameter should equal n + mu. A diameter below
    n + mu is a violation only when a certified hard pair proves the bound for this k,
    otherwise it is a finding, as is any diameter above it.
    """
    d = g.max_degree()
    inst = Instance.uniform(g, d + 2)
    record = new_record(task, "regular-cereceda", inst.toDict())
    bound = g.n + matching_number(g)

    try:
        hard_pair = gen_hard_pair_k(g, d + 2)
    except ConstructionError:
        hard_pair = None

    record["certified"] = hard_pair is not None

    try:
        diam = diameter(inst, config.budget, config.eccentricity_batch).value
        check(record, "diameter >= n+mu", diam, bound, ">=", proven=hard_pair is not None)

        if diam is None or diam > bound:
            record["findings"].append({"instance": record["instance"], "quantity": "diameter", "bound": bound, "observed": "inf" if diam is None else diam})

        pairs = random_colouring_pairs(inst, config.sampled_pairs, rng, config.budget)

        if hard_pair is not None:
            pairs.append(hard_pair)

        for a, b in pairs:
            cross_check(record, inst, a, b, config)

    except BudgetExceeded as e:
        Run().print(f"#> Task {task}: {e}")
        record["budgetExceeded"] = True

    return [record]


def _worker(config, checker, tasks, verbose):
    mine = [(index, graph) for index, graph in tasks if index % config.nranks == config.rank]
    records = []

    for index, graph in tqdm(mine, disable=not verbose):
        rng = random.Random(config.seed * TASK_SEED_STRIDE + index)
        records += checker(Graph.from_dict(graph), config, rng, index)

    return records


def run_tasks(config, checker, tasks, verbose=False):
    """
    Spreads `tasks` over config.nranks workers; worker r takes the tasks with index = r
    (mod nranks). Records come back merged in task order whatever the worker count.
    """
    launcher = Launcher(_worker, config, return_all=True, verbose=verbose)

    if launcher.nranks == 1:
        chunks = launcher.launch_without_fork(config, checker, tasks, verbose)
    else:
        chunks = launcher.launch(config, checker, tasks, verbose)

    return [record for chunk in chunks for record in chunk]


def _graph_tasks(config, keep=lambda g: True, verbose=False, graphs=None):
    """Indexed tasks over `graphs` when given, else over every enumerated graph up to config.nmax."""
    if graphs is None:
        graphs = [g for n in range(1, config.nmax + 1) for g in enumerate_graphs(n, config.connected_only, verbose)]

    return [(index, g.toDict()) for index, g in enumerate(g for g in graphs if keep(g))]


def hunt(config=None, verbose=False, graphs=None):
    """
    Checks every graph up to config.nmax vertices (or each of `graphs`) under
    config.list_rule and returns the merged SweepReport. A fixed seed reproduces the
    report exactly.
    """
    config = config or RecolorConfig()
    report = SweepReport()

    start = time.time()
    tasks = _graph_tasks(config, verbose=verbose, graphs=graphs)
    report.timing["enumerate"] = time.time() - start

    source = f"with n <= {config.nmax}" if graphs is None else "given"
    Run().print_main(f"#> Hunting over {len(tasks)} graphs {source}, {config.mode} mode, rule {config.list_rule}")

    start = time.time()
    report.merge(run_tasks(config, hunt_graph, tasks, verbose))
    report.timing["check"] = time.time() - start

    Run().print_main("#> " + report.summary())

    return report


def check_regular_cereceda(dmax=None, nmax=None, config=None, verbose=False, graphs=None):
    """
    Diameter of the (d + 2)-colour reconfiguration graph of every d-regular graph with
    1 <= d <= dmax, taken from `graphs` when given, else enumerated up to nmax vertices.
    """
    config = RecolorConfig.from_existing(config or RecolorConfig())
    config.configure(**{k: v for k, v in (("dmax", dmax), ("nmax", nmax)) if v is not None})

    report = SweepReport()

    def keep(g):
        d = g.max_degree()
        return 1 <= d <= config.dmax and is_regular(g, d)

    start = time.time()
    tasks = _graph_tasks(config, keep, verbose, graphs)
    report.timing["enumerate"] = time.time() - start

    Run().print_main(f"#> Checking {len(tasks)} regular graphs with degree <= {config.dmax} and n <= {config.nmax}")

    start = time.time()
    report.merge(run_tasks(config, cereceda_graph, tasks, verbose))
    report.timing["check"] = time.time() - start

    Run().print_main("#> " + report.summary())

    return report
