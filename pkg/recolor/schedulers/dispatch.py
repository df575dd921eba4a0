from recolor.colormodel.instance import LIST_MODE
from recolor.schedulers.biglists import schedule_biglists_eg, schedule_biglists_orderswap
from recolor.schedulers.bipartite import schedule_complete_bipartite
from recolor.schedulers.cactus import schedule_cactus
from recolor.schedulers.correspondence import schedule_corr_biglists, schedule_corr_factor2, schedule_corr_sparse
from recolor.schedulers.cycles import schedule_cycle
from recolor.schedulers.greedy import schedule_greedy_2n, schedule_list_factor2
from recolor.schedulers.schedule import NotApplicableError, PreconditionError
from recolor.schedulers.trees import schedule_tree_exact

SCHEDULERS = {
    "greedy-2n": schedule_greedy_2n,
    "list-factor2": schedule_list_factor2,
    "orderswap": schedule_biglists_orderswap,
    "biglists-eg": schedule_biglists_eg,
    "corr-biglists": schedule_corr_biglists,
    "corr-factor2": schedule_corr_factor2,
    "tree-exact": schedule_tree_exact,
    "cycle": schedule_cycle,
    "complete-bipartite": schedule_complete_bipartite,
    "cactus": schedule_cactus,
    "corr-sparse": schedule_corr_sparse,
}

# best guaranteed bound first
LIST_ORDER = ["tree-exact", "cactus", "cycle", "complete-bipartite", "biglists-eg", "list-factor2", "greedy-2n"]
CORR_ORDER = ["corr-sparse", "corr-biglists", "corr-factor2"]

ALGORITHMS = ["auto"] + list(SCHEDULERS)


def candidate_schedulers(inst):
    """Scheduler names for the mode of `inst`, best guaranteed bound first."""
    return LIST_ORDER if inst.mode == LIST_MODE else CORR_ORDER


def auto_schedule(inst, a, b):
    reasons = []

    for name in candidate_schedulers(inst):
        try:
            return SCHEDULERS[name](inst, a, b)
        except PreconditionError as e:
            reasons.append(f"{name}: {e}")

    raise NotApplicableError("no scheduler applies to this instance (" + "; ".join(reasons) + ")")


def schedule(inst, a, b, alg="auto"):
    if alg == "auto":
        return auto_schedule(inst, a, b)

    if alg not in SCHEDULERS:
        raise NotApplicableError(f"unknown scheduler {alg!r}; choose from {', '.join(ALGORITHMS)}")

    return SCHEDULERS[alg](inst, a, b)
