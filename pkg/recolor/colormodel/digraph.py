import networkx as nx

from recolor.colormodel.instance import hamming
from recolor.graphcore.graph import Graph
from recolor.graphcore.matching import matching_number


class ColourShiftDigraph:
    """
    D_{a,b}: arc v -> w on an edge vw whenever b(v) clashes with a(w), so w has to leave
    a(w) before v can take b(v). A digon forces one of its two ends to move twice.
    """

    def __init__(self, n, arcs):
        self.n = n
        self.arcs = frozenset(arcs)

    def digons(self):
        return sorted((v, w) for v, w in self.arcs if v < w and (w, v) in self.arcs)

    def digon_graph(self):
        return Graph(self.n, self.digons())

    def networkx(self, vertices=None):
        d = nx.DiGraph()
        d.add_nodes_from(range(self.n) if vertices is None else vertices)
        d.add_edges_from((v, w) for v, w in self.arcs if v in d and w in d)
        return d

    def reversed(self):
        return ColourShiftDigraph(self.n, {(w, v) for v, w in self.arcs})

    def toDict(self):
        return {"n": self.n, "arcs": sorted([list(a) for a in self.arcs])}

    def __eq__(self, other):
        return isinstance(other, ColourShiftDigraph) and (self.n, self.arcs) == (other.n, other.arcs)

    def __repr__(self):
        return f"ColourShiftDigraph(n={self.n}, arcs={sorted(self.arcs)})"


def colour_shift_digraph(inst, a, b):
    inst.check_colouring(a, "alpha")
    inst.check_colouring(b, "beta")

    return shift_digraph(inst, a, b)


def shift_digraph(inst, a, b, vertices=None):
    """Unchecked construction, optionally restricted to the edges inside `vertices`."""
    edges = inst.graph.sorted_edges() if vertices is None else inst.graph.edges_within(vertices)
    arcs = set()

    for u, v in edges:
        if inst.conflicts(u, b[u], v, a[v]):
            arcs.add((u, v))
        if inst.conflicts(v, b[v], u, a[u]):
            arcs.add((v, u))

    return ColourShiftDigraph(inst.n, arcs)


def digraph_mu(d):
    return matching_number(d.digon_graph())


def reconfig_lower_bound(inst, a, b):
    """mu(D_{a,b}) + number of vertices where a and b differ; never exceeds the true distance."""
    return digraph_mu(colour_shift_digraph(inst, a, b)) + hamming(a, b)
