from recolor.colormodel.instance import LIST_MODE
from recolor.graphcore.structure import is_cycle
from recolor.schedulers.schedule import PreconditionError, SchedulerError
from recolor.schedulers.splitting import find_split, run_split
from recolor.schedulers.trees import tree_exact
from recolor.schedulers.workspace import (
    park_cover_and_finish,
    require_list_sizes,
    require_mode,
    run_scheduler,
)

CYCLE_LIST_SIZE = 4


def _walk(task, first, second):
    """The cycle's vertices in order, starting first, second, ..."""
    order = [first, second]

    while len(order) < len(task):
        order.append(next(w for w in task.neighbours(order[-1]) if w != order[-2]))

    return order


def cycle(ws, task):
    """At most floor(3n/2) steps on a cycle whose lists have at least 4 colours."""
    if not is_cycle(task.inst.graph, task.vertices):
        raise SchedulerError("cycle scheduler reached a part that is not a cycle")

    parts = find_split(ws, task)
    if parts is not None:
        run_split(ws, task, parts, tree_exact)
        return

    def arc(x, y):
        return task.conflicts(x, task.target[x], y, ws.current[y])

    edges = task.edges()

    if all(arc(u, v) and arc(v, u) for u, v in edges):
        park_cover_and_finish(ws, task)
        return

    if not any(arc(u, v) and arc(v, u) for u, v in edges):
        first = min(task.vertices)
        second = next(w for w in sorted(task.neighbours(first)) if arc(first, w))
        _directed_cycle(ws, task, _walk(task, first, second))
        return

    for y in task.sorted_vertices():
        for x in sorted(task.neighbours(y)):
            (z,) = task.neighbours(y) - {x}

            if arc(x, y) and arc(y, x) and arc(y, z) and not arc(z, y):
                _digon_then_arc(ws, task, _walk(task, x, y))
                return

    raise SchedulerError("strongly connected shift digraph on a cycle matched no case")


def _directed_cycle(ws, task, order):
    """Every edge carries exactly one arc, all pointing along `order`."""
    first, second, last = order[0], order[1], order[-1]

    if len(order) == 3:
        used = {ws.current[v] for v in order} | {task.target[v] for v in order}
        c = task.first_free(ws, first, exclude=used)
    else:
        c = task.first_free(ws, first, exclude={ws.current[first]})

    ws.recolour(first, c)

    for v in reversed(order[2:]):
        ws.recolour(v, task.target[v])

    if task.conflicts(first, c, second, task.target[second]):
        ws.recolour(first, task.first_free(ws, first, exclude={c}))

    ws.recolour(second, task.target[second])
    ws.recolour(first, task.target[first])


def _digon_then_arc(ws, task, order):
    """order[0] order[1] is a digon and order[1] -> order[2] a one-way arc."""
    first = order[0]

    ws.recolour(first, task.first_free(ws, first, avoid_targets=True, exclude={ws.current[first]}))
    tree_exact(ws, task.restrict(ws, task.vertices - {first}))
    ws.recolour(first, task.target[first])


def schedule_cycle(inst, a, b):
    require_mode(inst, LIST_MODE, "cycle")

    if not is_cycle(inst.graph):
        raise PreconditionError("cycle scheduler needs a cycle graph")

    require_list_sizes(inst, "cycle", lambda d: CYCLE_LIST_SIZE, str(CYCLE_LIST_SIZE))

    return run_scheduler(inst, a, b, cycle, "cycle", (3 * inst.n) // 2)
