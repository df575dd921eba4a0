from recolor.colormodel.instance import LIST_MODE
from recolor.graphcore.matching import matching_number, saturated_by_every_maximum_matching
from recolor.schedulers.workspace import (
    each_component,
    recolour_directly,
    require_d_plus_2,
    require_mode,
    reverse_run,
    run_scheduler,
)


def greedy_2n(ws, task):
    """
    Settles one colour class of the target per round: pick c in the target colours with
    no more current holders than target holders in the task, move the current holders
    off c, give c to its target class, then drop that class and strike c nearby.
    """
    while task.vertices:
        if task.is_edgeless():
            recolour_directly(ws, task)
            return

        vertices = task.sorted_vertices()
        colours = sorted({task.target[v] for v in vertices})

        c = next(
            c
            for c in colours
            if sum(1 for v in vertices if ws.current[v] == c) <= sum(1 for v in vertices if task.target[v] == c)
        )

        for v in vertices:
            if ws.current[v] == c and task.target[v] != c:
                ws.recolour(v, task.first_free(ws, v, exclude={c}))

        settled = [v for v in vertices if task.target[v] == c]
        for v in settled:
            ws.recolour(v, c)

        task = task.restrict(ws, task.vertices - set(settled))


def _factor2_component(ws, task):
    if task.is_edgeless():
        recolour_directly(ws, task)
        return

    g = task.inst.graph
    mu = task.matching_number()

    v = next((v for v in task.sorted_vertices() if saturated_by_every_maximum_matching(g, v, task.vertices, mu)), None)

    # factor-critical: n = 2mu + 1, so 2n - 1 <= n + 2mu
    if v is None:
        greedy_2n(ws, task)
        return

    c, hits = next((c, hits) for c in task.lists[v] if len(hits := task.hits(ws, v, c)) <= 1)

    if hits and hits[0][1] == "target":
        reverse_run(ws, task, _factor2_component)
        return

    if hits:
        w, _ = hits[0]
        ws.recolour(w, task.first_free(ws, w, exclude={ws.current[w]}))

    ws.recolour(v, c)
    list_factor2(ws, task.restrict(ws, task.vertices - {v}))
    ws.recolour(v, task.target[v])


list_factor2 = each_component(_factor2_component)


def schedule_greedy_2n(inst, a, b):
    require_mode(inst, LIST_MODE, "greedy-2n")
    require_d_plus_2(inst, "greedy-2n")

    return run_scheduler(inst, a, b, greedy_2n, "greedy-2n", 2 * inst.n - 1)


def schedule_list_factor2(inst, a, b):
    require_mode(inst, LIST_MODE, "list-factor2")
    require_d_plus_2(inst, "list-factor2")

    bound = inst.n + 2 * matching_number(inst.graph)
    return run_scheduler(inst, a, b, list_factor2, "list-factor2", bound)
