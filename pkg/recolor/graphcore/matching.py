import itertools
import networkx as nx

from recolor.graphcore.graph import GraphError


class Matching:
    """A set of pairwise-disjoint edges of a host graph, stored as sorted pairs."""

    def __init__(self, edges=()):
        self.edges = frozenset((min(u, v), max(u, v)) for u, v in edges)

        self.partner = {}
        for u, v in self.edges:
            if u in self.partner or v in self.partner:
                raise GraphError(f"edges of a matching must be disjoint; ({u}, {v}) reuses a vertex")

            self.partner[u] = v
            self.partner[v] = u

    @classmethod
    def checked(cls, g, edges):
        matching = edges if isinstance(edges, Matching) else cls(edges)

        for u, v in matching.edges:
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                raise GraphError(f"({u}, {v}) is not an edge of the host graph, so not a matching of it")

        return matching

    def saturates(self, v):
        return v in self.partner

    def sorted_edges(self):
        return sorted(self.edges)

    def toDict(self):
        return [list(e) for e in self.sorted_edges()]

    def __iter__(self):
        return iter(self.sorted_edges())

    def __len__(self):
        return len(self.edges)

    def __contains__(self, edge):
        u, v = edge
        return (min(u, v), max(u, v)) in self.edges

    def __eq__(self, other):
        return isinstance(other, Matching) and self.edges == other.edges

    def __hash__(self):
        return hash(self.edges)

    def __repr__(self):
        return f"Matching({self.sorted_edges()})"


def _restricted(g, vertices):
    if vertices is None:
        return g.networkx

    return g.networkx.subgraph(vertices)


def max_matching(g, vertices=None):
    """Maximum-cardinality matching (blossom algorithm) of g, or of g restricted to `vertices`."""
    h = _restricted(g, vertices)

    if h.number_of_edges() == 0:
        return Matching()

    return Matching(nx.max_weight_matching(h, maxcardinality=True))


def matching_number(g, vertices=None):
    return len(max_matching(g, vertices))


def brute_force_matching_number(g, vertices=None):
    """Largest set of disjoint edges found by trying edge subsets from the largest size down."""
    edges = g.sorted_edges() if vertices is None else g.edges_within(vertices)
    limit = len(vertices if vertices is not None else range(g.n)) // 2

    for size in range(min(limit, len(edges)), 0, -1):
        for subset in itertools.combinations(edges, size):
            touched = set()
            for u, v in subset:
                if u in touched or v in touched:
                    break
                touched.update((u, v))
            else:
                return size

    return 0


def saturated_by_every_maximum_matching(g, v, vertices=None, mu=None):
    """True iff mu(G - v) = mu(G) - 1, i.e. every maximum matching covers v."""
    vertices = set(range(g.n) if vertices is None else vertices)
    mu = matching_number(g, vertices) if mu is None else mu

    return matching_number(g, vertices - {v}) == mu - 1
