import ujson
import networkx as nx

from functools import cached_property


class GraphError(ValueError):
    pass


class Graph:
    """
    Simple undirected graph on the vertices 0..n-1.

    Graphs are immutable once built. Edges are stored as sorted pairs (u, v) with u < v,
    and `adjacency[v]` is the frozenset of neighbours of v.
    """

    def __init__(self, n, edges=()):
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise GraphError(f"a graph needs at least one vertex, got n={n!r}")

        adjacency = [set() for _ in range(n)]
        normalized = set()

        for edge in edges:
            u, v = (int(x) for x in edge)

            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")

            normalized.add((min(u, v), max(u, v)))
            adjacency[u].add(v)
            adjacency[v].add(u)

        self.n = n
        self.edges = frozenset(normalized)
        self.adjacency = tuple(frozenset(nbrs) for nbrs in adjacency)

    @classmethod
    def cast(cls, obj):
        if isinstance(obj, cls):
            return obj

        if isinstance(obj, nx.Graph):
            return cls.from_networkx(obj)

        if isinstance(obj, dict):
            return cls.from_dict(obj)

        assert False, f"obj has type {type(obj)} which is not compatible with cast()"

    @classmethod
    def from_networkx(cls, g):
        order = sorted(g.nodes())
        index = {v: i for i, v in enumerate(order)}
        return cls(len(order), [(index[u], index[v]) for u, v in g.edges()])

    @classmethod
    def from_graph6(cls, line):
        if isinstance(line, str):
            line = line.strip().encode()

        return cls.from_networkx(nx.from_graph6_bytes(line.strip()))

    @classmethod
    def from_dict(cls, data):
        return cls(data["n"], data.get("edges", []))

    @classmethod
    def complete(cls, n):
        return cls(n, [(u, v) for u in range(n) for v in range(u + 1, n)])

    @classmethod
    def path(cls, n):
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n):
        assert n >= 3, n
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete_bipartite(cls, p, q):
        return cls(p + q, [(u, p + w) for u in range(p) for w in range(q)])

    def toDict(self):
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    def to_graph6(self):
        return nx.to_graph6_bytes(self.networkx, header=False).decode().strip()

    @cached_property
    def networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.sorted_edges())
        return g

    def sorted_edges(self):
        return sorted(self.edges)

    def neighbours(self, v):
        return self.adjacency[v]

    def degree(self, v):
        return len(self.adjacency[v])

    def has_edge(self, u, v):
        return v in self.adjacency[u]

    def max_degree(self):
        return max(len(nbrs) for nbrs in self.adjacency)

    def degree_one_neighbours(self, v, within=None):
        """Neighbours of v, ascending, that are leaves (of the subgraph induced by `within` when given)."""
        within = frozenset(range(self.n)) if within is None else frozenset(within)

        return sorted(w for w in self.adjacency[v] & within if len(self.adjacency[w] & within) == 1)

    def edges_within(self, vertices):
        vertices = frozenset(vertices)
        return [(u, v) for (u, v) in self.sorted_edges() if u in vertices and v in vertices]

    def induced(self, vertices):
        """
        Returns (subgraph, labels): the subgraph induced by `vertices`, relabelled to
        0..k-1 in increasing order, and labels[i] = original vertex of new vertex i.
        """
        labels = sorted(vertices)
        index = {v: i for i, v in enumerate(labels)}
        edges = [(index[u], index[v]) for (u, v) in self.edges_within(labels)]

        return Graph(len(labels), edges), labels

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def components(g, vertices=None):
    """Connected components of g (or of g restricted to `vertices`), ordered by least vertex."""
    vertices = range(g.n) if vertices is None else vertices
    remaining = set(vertices)
    result = []

    for root in sorted(remaining):
        if root not in remaining:
            continue

        component = {root}
        stack = [root]
        remaining.discard(root)

        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if w in remaining:
                    remaining.discard(w)
                    component.add(w)
                    stack.append(w)

        result.append(frozenset(component))

    return result


def load_edge_list(path):
    with open(path) as f:
        data = ujson.load(f)

    if isinstance(data, list):
        n = 1 + max((max(e) for e in data), default=0)
        return Graph(n, data)

    return Graph.from_dict(data)


def read_graph6_lines(path):
    graphs = []

    with open(path) as f:
        for line in f:
            line = line.strip()

            if line:
                graphs.append(Graph.from_graph6(line))

    return graphs
