from recolor.colormodel.instance import LIST_MODE
from recolor.graphcore.graph import components
from recolor.graphcore.structure import is_forest
from recolor.schedulers.schedule import PreconditionError, SchedulerError
from recolor.schedulers.workspace import (
    Task,
    each_component,
    park_cover_and_finish,
    recolour_directly,
    require_d_plus_2,
    require_mode,
    run_scheduler,
)


def _tree_component(ws, task):
    """
    Geodesic on a tree: mu(D) + (number of vertices whose colour changes) steps.

    A vertex already at its target splits the tree; an edge missing one arc can be cut,
    recolouring the side whose target is blocked first; otherwise every edge is a digon,
    and a minimum vertex cover is parked, the rest recoloured, then the cover finished.
    """
    if len(task) == 1:
        recolour_directly(ws, task)
        return

    if len(task.edges()) != len(task) - 1:
        raise SchedulerError("tree scheduler reached a part that is not a tree")

    settled = next((v for v in task.sorted_vertices() if ws.current[v] == task.target[v]), None)
    if settled is not None:
        tree_exact(ws, task.restrict(ws, task.vertices - {settled}))
        return

    for u, v in task.edges():
        for x, y in ((u, v), (v, u)):
            if not task.conflicts(x, task.target[x], y, ws.current[y]):
                cut = _EdgeRemoved(task.inst.graph, x, y)
                side_x = next(c for c in components(cut, task.vertices) if x in c)

                _tree_component(ws, task.restrict(ws, side_x))
                _tree_component(ws, task.restrict(ws, task.vertices - side_x))
                return

    park_cover_and_finish(ws, task)


class _EdgeRemoved:
    """Adjacency view of a graph with one edge deleted, enough for `components`."""

    def __init__(self, g, x, y):
        self.n = g.n
        self.adjacency = tuple(
            nbrs - {y} if v == x else nbrs - {x} if v == y else nbrs for v, nbrs in enumerate(g.adjacency)
        )


tree_exact = each_component(_tree_component)


def schedule_tree_exact(inst, a, b):
    require_mode(inst, LIST_MODE, "tree-exact")

    if not is_forest(inst.graph):
        raise PreconditionError("tree-exact needs a forest")

    require_d_plus_2(inst, "tree-exact")

    a = inst.check_colouring(a, "alpha")
    b = inst.check_colouring(b, "beta")
    bound = Task.initial(inst, b).distance_lower_bound(a)

    return run_scheduler(inst, a, b, tree_exact, "tree-exact", bound)
