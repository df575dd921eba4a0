from fractions import Fraction

from recolor.colormodel.instance import CORR_MODE
from recolor.graphcore.cover import in_some_minimum_cover, vertex_cover_number
from recolor.graphcore.invariants import mad
from recolor.graphcore.structure import is_cactus
from recolor.schedulers.schedule import HypothesisError, SchedulerError
from recolor.schedulers.splitting import find_split, run_split
from recolor.schedulers.workspace import (
    each_component,
    park_cover_and_finish,
    recolour_directly,
    require_2d_plus_1,
    require_d_plus_2,
    require_mode,
    reverse_run,
    run_scheduler,
)

SPARSE_MAD = Fraction(12, 5)


def corr_biglists(ws, task):
    park_cover_and_finish(ws, task)


def _move_blocker(ws, task, w):
    """Moves w off its current colour, the one clashing with what its neighbour is about to take."""
    ws.recolour(w, task.first_free(ws, w, exclude={ws.current[w]}))


def corr_factor2(ws, task):
    """n + 2tau steps with lists of size deg+2, by induction on tau over a minimum cover vertex."""
    if task.is_edgeless():
        recolour_directly(ws, task)
        return

    v = min(task.min_vertex_cover())
    c, hits = next((c, hits) for c in task.lists[v] if len(hits := task.hits(ws, v, c)) <= 1)

    if hits and hits[0][1] == "target":
        reverse_run(ws, task, corr_factor2)
        return

    if hits:
        _move_blocker(ws, task, hits[0][0])

    ws.recolour(v, c)
    corr_factor2(ws, task.restrict(ws, task.vertices - {v}))
    ws.recolour(v, task.target[v])


def _leaves(task, v):
    return task.inst.graph.degree_one_neighbours(v, task.vertices)


def _sparse_component(ws, task):
    """
    n + tau steps on graphs that always contain a vertex of one of two kinds:
    (i) degree at most 3 and in some minimum vertex cover;
    (ii) degree at least 4 with at most two neighbours that are not leaves.
    """
    if task.is_edgeless():
        recolour_directly(ws, task)
        return

    g = task.inst.graph
    tau = vertex_cover_number(g, task.vertices)

    for v in task.sorted_vertices():
        if task.degree(v) <= 3 and in_some_minimum_cover(g, v, task.vertices, tau):
            return _low_degree_step(ws, task, v)

    for v in task.sorted_vertices():
        if task.degree(v) >= 4 and task.degree(v) - len(_leaves(task, v)) <= 2:
            return _leafy_step(ws, task, v)

    raise SchedulerError("no vertex of either reducible kind; the sparsity hypothesis does not hold here")


def _park_and_recurse(ws, task, v):
    ws.recolour(v, task.first_free(ws, v, avoid_targets=True))
    corr_sparse(ws, task.restrict(ws, task.vertices - {v}))
    ws.recolour(v, task.target[v])


def _low_degree_step(ws, task, v):
    blockers = task.hits(ws, v, task.target[v], target=False)

    if len(blockers) <= 1:
        if blockers:
            _move_blocker(ws, task, blockers[0][0])

        ws.recolour(v, task.target[v])
        corr_sparse(ws, task.restrict(ws, task.vertices - {v}))
        return

    if len(task.hits(ws, v, ws.current[v], current=False)) <= 1:
        reverse_run(ws, task, _sparse_component)
        return

    # at least two neighbours block each of target(v) and current(v): at most 2deg - 2 < deg + 2 colours are hit
    _park_and_recurse(ws, task, v)


def _leafy_step(ws, task, v):
    leaves = _leaves(task, v)

    for w in leaves:
        if not task.conflicts(v, ws.current[v], w, task.target[w]):
            ws.recolour(w, task.target[w])
            corr_sparse(ws, task.restrict(ws, task.vertices - {w}))
            return

    for w in leaves:
        if not task.conflicts(v, task.target[v], w, ws.current[w]):
            reverse_run(ws, task, _sparse_component)
            return

    if task.free_colours(ws, v, avoid_targets=True):
        _park_and_recurse(ws, task, v)
        return

    parts = find_split(ws, task)
    if parts is None:
        raise SchedulerError(f"vertex {v} has no free colour although the shift digraph is strongly connected")

    run_split(ws, task, parts, corr_sparse)


corr_sparse = each_component(_sparse_component)


def sparse_hypothesis(g):
    """Which of max degree <= 3, cactus, mad < 12/5 hold, as a dict of booleans."""
    return {
        "subcubic": g.max_degree() <= 3,
        "cactus": is_cactus(g),
        "mad": mad(g) < SPARSE_MAD,
    }


def schedule_corr_biglists(inst, a, b):
    require_mode(inst, CORR_MODE, "corr-biglists")
    require_2d_plus_1(inst, "corr-biglists")

    bound = inst.n + vertex_cover_number(inst.graph)
    return run_scheduler(inst, a, b, corr_biglists, "corr-biglists", bound)


def schedule_corr_factor2(inst, a, b):
    require_mode(inst, CORR_MODE, "corr-factor2")
    require_d_plus_2(inst, "corr-factor2")

    bound = inst.n + 2 * vertex_cover_number(inst.graph)
    return run_scheduler(inst, a, b, corr_factor2, "corr-factor2", bound)


def schedule_corr_sparse(inst, a, b):
    require_mode(inst, CORR_MODE, "corr-sparse")
    require_d_plus_2(inst, "corr-sparse")

    holds = sparse_hypothesis(inst.graph)
    if not any(holds.values()):
        raise HypothesisError(
            "corr-sparse needs (a) max degree <= 3, (b) a cactus, or (c) mad < 12/5; "
            f"failed: (a) max degree {inst.graph.max_degree()}, (b) not a cactus, (c) mad {mad(inst.graph)}"
        )

    bound = inst.n + vertex_cover_number(inst.graph)
    return run_scheduler(inst, a, b, corr_sparse, "corr-sparse", bound)
