from recolor.colormodel.instance import LIST_MODE
from recolor.graphcore.matching import matching_number, saturated_by_every_maximum_matching
from recolor.graphcore.structure import blocks, cut_vertices, is_cactus, is_cycle, is_forest
from recolor.schedulers.cycles import cycle
from recolor.schedulers.schedule import PreconditionError, SchedulerError
from recolor.schedulers.splitting import find_split, run_split
from recolor.schedulers.trees import tree_exact
from recolor.schedulers.workspace import (
    each_component,
    require_d_plus_2,
    require_mode,
    run_scheduler,
)


def _budget(task, vertices):
    return len(vertices) + matching_number(task.inst.graph, vertices)


def _cactus_component(ws, task):
    """
    n + mu steps on a cactus. Trees and cycles have their own schedulers. Otherwise, in
    order: split along a non-strongly-connected shift digraph; park a vertex covered by
    every maximum matching on a colour no neighbour uses now or later, and recurse without
    it; or take apart a cycle endblock with whichever move is predicted to fit the bound.
    """
    g = task.inst.graph

    if is_forest(g, task.vertices):
        tree_exact(ws, task)
        return

    if is_cycle(g, task.vertices):
        cycle(ws, task)
        return

    parts = find_split(ws, task)
    if parts is not None:
        run_split(ws, task, parts, cactus)
        return

    mu = task.matching_number()

    for v in task.sorted_vertices():
        if not saturated_by_every_maximum_matching(g, v, task.vertices, mu):
            continue

        options = task.free_colours(ws, v, avoid_targets=True)
        if options:
            c = ws.current[v] if ws.current[v] in options else options[0]

            ws.recolour(v, c)
            cactus(ws, task.restrict(ws, task.vertices - {v}))
            ws.recolour(v, task.target[v])
            return

    budget = len(task) + mu
    plans = [plan for plan in _endblock_plans(ws, task) if plan[0] <= budget]

    if not plans:
        raise SchedulerError(f"no endblock move fits within {budget} steps")

    _, run = min(plans, key=lambda plan: plan[0])
    run()


def _endblock_plans(ws, task):
    """Yields (predicted steps, runner) for each endblock move that can be started."""
    g = task.inst.graph
    cuts = cut_vertices(g, task.vertices)

    for block in blocks(g, task.vertices):
        if len(block) < 3 or len(block & cuts) != 1:
            continue

        (x,) = block & cuts

        for p1 in sorted(g.adjacency[x] & block):
            path = _block_path(g, block, x, p1)

            for plan in (
                _shift_along(ws, task, x, path),
                _cut_off_path(ws, task, x, path),
                _path_last(ws, task, x, path, strict=True),
                _path_last(ws, task, x, path, strict=False),
            ):
                if plan is not None:
                    yield plan


def _block_path(g, block, x, p1):
    order = [x, p1]

    while len(order) < len(block):
        order.append(next(w for w in sorted(g.adjacency[order[-1]] & block) if w != order[-2]))

    return order[1:]


def _arc(ws, task, u, v):
    return task.conflicts(u, task.target[u], v, ws.current[v])


def _park_cut_vertex(ws, task, x, avoid):
    """A colour for x clashing with no current neighbour colour nor the targets of `avoid`; current colour preferred."""
    options = [
        c for c in task.free_colours(ws, x) if not any(task.conflicts(x, c, p, task.target[p]) for p in avoid)
    ]

    if not options:
        return None

    return ws.current[x] if ws.current[x] in options else options[0]


def _shift_along(ws, task, x, path):
    """
    The arcs of the endblock run x -> p1 -> ... -> p_last -> x. Park x, recolour the path
    from its far end down to its second vertex, and recurse on the rest, where p1 is left
    hanging off x.
    """
    if any(_arc(ws, task, path[i], path[i - 1]) for i in range(1, len(path))):
        return None

    c = _park_cut_vertex(ws, task, x, [path[-1]])
    if c is None:
        return None

    moved = path[1:]
    rest = task.vertices - set(moved)
    steps = int(c != ws.current[x]) + sum(1 for p in moved if ws.current[p] != task.target[p])

    def run():
        ws.recolour(x, c)
        for p in reversed(moved):
            ws.recolour(p, task.target[p])
        cactus(ws, task.restrict(ws, rest))

    return steps + _budget(task, rest), run


def _cut_off_path(ws, task, x, path):
    """Park x off both path ends' targets, recolour the path as a tree, then the rest."""
    c = _park_cut_vertex(ws, task, x, [path[0], path[-1]])
    if c is None:
        return None

    inside = frozenset(path)
    rest = task.vertices - inside
    steps = int(c != ws.current[x]) + task.distance_lower_bound(ws.current, inside)

    def run():
        ws.recolour(x, c)
        tree_exact(ws, task.restrict(ws, inside))
        cactus(ws, task.restrict(ws, rest))

    return steps + _budget(task, rest), run


def _path_last(ws, task, x, path, strict):
    """
    Park the path ends whose colour clashes with the target of x, recolour the rest of
    the graph, then the path as a tree. `strict` parking also keeps each end off the
    target of its path neighbour, which breaks the digon on that edge.
    """
    predicted = list(ws.current)
    parks = []

    for q, neighbour in ((path[0], path[1]), (path[-1], path[-2])):
        if not task.conflicts(q, predicted[q], x, task.target[x]):
            continue

        options = [
            c
            for c in task.lists[q]
            if c != predicted[q]
            and not any(task.conflicts(q, c, w, predicted[w]) for w in task.inst.graph.adjacency[q])
            and not task.conflicts(q, c, x, task.target[x])
            and not (strict and task.conflicts(q, c, neighbour, task.target[neighbour]))
        ]

        if not options:
            return None

        predicted[q] = options[0]
        parks.append((q, options[0]))

    inside = frozenset(path)
    rest = task.vertices - inside
    steps = len(parks) + task.distance_lower_bound(predicted, inside)

    def run():
        for q, c in parks:
            ws.recolour(q, c)
        cactus(ws, task.restrict(ws, rest))
        tree_exact(ws, task.restrict(ws, inside))

    return steps + _budget(task, rest), run


cactus = each_component(_cactus_component)


def schedule_cactus(inst, a, b):
    require_mode(inst, LIST_MODE, "cactus")

    if not is_cactus(inst.graph):
        raise PreconditionError("cactus scheduler needs every block to be an edge or a cycle")

    require_d_plus_2(inst, "cactus")

    bound = inst.n + matching_number(inst.graph)
    return run_scheduler(inst, a, b, cactus, "cactus", bound)
