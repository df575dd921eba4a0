import networkx as nx

from recolor.colormodel.digraph import shift_digraph
from recolor.schedulers.workspace import Task, Workspace


def shift_arcs(ws, task):
    """Colour-shift digraph from the current colouring to the task target, on the task vertices."""
    return shift_digraph(task.inst, ws.current, task.target, task.vertices).networkx(task.vertices)


def find_split(ws, task):
    """
    (V1, V2) with no arc from V1 to V2, or None when the colour-shift digraph is strongly
    connected. V1 is the sink strongly connected component holding the least vertex.
    """
    d = shift_arcs(ws, task)

    if d.number_of_nodes() <= 1 or nx.is_strongly_connected(d):
        return None

    condensation = nx.condensation(d)
    sinks = [
        frozenset(condensation.nodes[x]["members"]) for x in condensation.nodes if condensation.out_degree(x) == 0
    ]

    v1 = min(sinks, key=min)
    return v1, task.vertices - v1


def run_split(ws, task, parts, first, second=None):
    """Recolours V1 with the current colours of V2 struck, then V2 with the targets of V1 struck."""
    v1, v2 = parts
    second = first if second is None else second

    first(ws, task.restrict(ws, v1))
    second(ws, task.restrict(ws, v2))


def split_by_scc(inst, a, b):
    a = inst.check_colouring(a, "alpha")
    b = inst.check_colouring(b, "beta")

    return find_split(Workspace(inst, a), Task.initial(inst, b))
