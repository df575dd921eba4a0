from recolor.colormodel.instance import LIST_MODE
from recolor.graphcore.decomposition import edmonds_gallai
from recolor.graphcore.matching import matching_number
from recolor.schedulers.workspace import (
    recolour_directly,
    require_2d_plus_1,
    require_mode,
    reverse_run,
    run_scheduler,
)


def orderswap(ws, task):
    """
    At most floor(3n/2) steps with lists of size 2deg+1. Vertices whose colour must go down
    (at most half of them, after swapping roles if needed) are parked when their colour is
    a neighbour's target; then target values are assigned from the largest down.
    """
    if task.is_edgeless():
        recolour_directly(ws, task)
        return

    descending = [v for v in task.sorted_vertices() if ws.current[v] > task.target[v]]

    if 2 * len(descending) > len(task):
        reverse_run(ws, task, orderswap)
        return

    for v in descending:
        if task.hits(ws, v, ws.current[v], current=False):
            ws.recolour(v, task.first_free(ws, v, avoid_targets=True))

    for value in sorted({task.target[v] for v in task.vertices}, reverse=True):
        for v in task.sorted_vertices():
            if task.target[v] == value:
                ws.recolour(v, value)


def biglists_eg(ws, task):
    """
    n + mu steps: park the Edmonds-Gallai set V2 off every neighbour's current and target
    colour, order-swap each component of G - V2 (factor-critical or perfectly matchable),
    then finish V2.
    """
    decomposition = edmonds_gallai(task.inst.graph, task.vertices)
    hub = sorted(decomposition.v2)

    for v in hub:
        if task.hits(ws, v, ws.current[v], current=False):
            ws.recolour(v, task.first_free(ws, v, avoid_targets=True))

    rest = task.restrict(ws, task.vertices - decomposition.v2)
    for component in rest.components():
        orderswap(ws, rest.restrict(ws, component))

    for v in hub:
        ws.recolour(v, task.target[v])


def schedule_biglists_orderswap(inst, a, b):
    require_mode(inst, LIST_MODE, "orderswap")
    require_2d_plus_1(inst, "orderswap")

    return run_scheduler(inst, a, b, orderswap, "orderswap", (3 * inst.n) // 2)


def schedule_biglists_eg(inst, a, b):
    require_mode(inst, LIST_MODE, "biglists-eg")
    require_2d_plus_1(inst, "biglists-eg")

    bound = inst.n + matching_number(inst.graph)
    return run_scheduler(inst, a, b, biglists_eg, "biglists-eg", bound)
