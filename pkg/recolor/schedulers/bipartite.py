from recolor.colormodel.instance import LIST_MODE
from recolor.graphcore.matching import matching_number
from recolor.graphcore.structure import complete_bipartition
from recolor.schedulers.schedule import PreconditionError, SchedulerError
from recolor.schedulers.splitting import find_split, run_split
from recolor.schedulers.workspace import (
    recolour_directly,
    require_d_plus_2,
    require_mode,
    reverse_run,
    run_scheduler,
)


def complete_bipartite(ws, task):
    """
    n + mu steps on K_{p,q}. With a strongly connected shift digraph the current colours
    of the small side U are the targets of the large side and vice versa. If the large
    side is big enough, park U off both colour sets of the large side, recolour it, then
    U. Otherwise settle one target colour c of U that at most one vertex of the large side
    currently holds, and recurse without the vertices that now have c.
    """
    if task.is_edgeless():
        recolour_directly(ws, task)
        return

    parts = find_split(ws, task)
    if parts is not None:
        run_split(ws, task, parts, complete_bipartite)
        return

    sides = complete_bipartition(task.inst.graph, task.vertices)
    if sides is None:
        raise SchedulerError("complete bipartite scheduler reached a part that is not complete bipartite")

    small, large = sorted(sides, key=len)
    small, large = sorted(small), sorted(large)

    current_small = {ws.current[u] for u in small}
    target_small = {task.target[u] for u in small}

    if len(large) >= len(current_small) + len(target_small) - 1:
        blocked = {ws.current[w] for w in large} | {task.target[w] for w in large}

        for u in small:
            ws.recolour(u, task.first_free(ws, u, exclude=blocked))
        for w in large:
            ws.recolour(w, task.target[w])
        for u in small:
            ws.recolour(u, task.target[u])

        return

    if len(large) > 2 * len(target_small) - 1:
        reverse_run(ws, task, complete_bipartite)
        return

    c = next(c for c in sorted(target_small) if sum(1 for w in large if ws.current[w] == c) <= 1)

    for w in large:
        if ws.current[w] == c:
            ws.recolour(w, task.first_free(ws, w, exclude={c}))

    settled = [u for u in small if task.target[u] == c]
    for u in settled:
        ws.recolour(u, c)

    complete_bipartite(ws, task.restrict(ws, task.vertices - set(settled)))


def schedule_complete_bipartite(inst, a, b):
    require_mode(inst, LIST_MODE, "complete-bipartite")

    if complete_bipartition(inst.graph) is None:
        raise PreconditionError("complete-bipartite scheduler needs a complete bipartite graph")

    require_d_plus_2(inst, "complete-bipartite")

    bound = inst.n + matching_number(inst.graph)
    return run_scheduler(inst, a, b, complete_bipartite, "complete-bipartite", bound)
