import itertools


class VertexCover:
    def __init__(self, vertices=()):
        self.vertices = frozenset(vertices)

    def covers(self, g, vertices=None):
        edges = g.sorted_edges() if vertices is None else g.edges_within(vertices)
        return all(u in self.vertices or v in self.vertices for u, v in edges)

    def sorted_vertices(self):
        return sorted(self.vertices)

    def __iter__(self):
        return iter(self.sorted_vertices())

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.vertices

    def __repr__(self):
        return f"VertexCover({self.sorted_vertices()})"


def _local_adjacency(g, vertices):
    vertices = frozenset(range(g.n) if vertices is None else vertices)
    return {v: set(g.adjacency[v] & vertices) for v in vertices}


def _greedy_matching_size(adjacency):
    used = set()
    size = 0

    for v in sorted(adjacency):
        if v in used:
            continue
        for w in sorted(adjacency[v]):
            if w not in used:
                used.update((v, w))
                size += 1
                break

    return size


def vertex_cover_number(g, vertices=None):
    """
    Exact tau by branch and bound. Branches on a maximum-degree vertex v (either v is in
    the cover, or all of N(v) is), pruned with a maximal-matching lower bound.
    """
    adjacency = _local_adjacency(g, vertices)
    best = [len([v for v in adjacency if adjacency[v]])]

    def remove(adj, removed):
        return {v: nbrs - removed for v, nbrs in adj.items() if v not in removed}

    def branch(adj, taken):
        adj = {v: nbrs for v, nbrs in adj.items() if nbrs}

        if not adj:
            best[0] = min(best[0], taken)
            return

        if taken + _greedy_matching_size(adj) >= best[0]:
            return

        v = max(sorted(adj), key=lambda x: len(adj[x]))

        # a degree-one vertex is never worse covered through its neighbour
        leaf = next((x for x in sorted(adj) if len(adj[x]) == 1), None)
        if leaf is not None:
            (w,) = adj[leaf]
            branch(remove(adj, {w}), taken + 1)
            return

        branch(remove(adj, {v}), taken + 1)

        nbrs = set(adj[v])
        branch(remove(adj, nbrs | {v}), taken + len(nbrs))

    branch(adjacency, 0)

    return best[0]


def min_vertex_cover(g, vertices=None):
    """
    A minimum vertex cover; among all minimum covers, the lexicographically least one
    (comparing sorted vertex tuples), so results are deterministic.
    """
    adjacency = _local_adjacency(g, vertices)
    edges = [(u, v) for u in adjacency for v in adjacency[u] if u < v]

    if not edges:
        return VertexCover()

    tau = vertex_cover_number(g, vertices)
    candidates = sorted(v for v in adjacency if adjacency[v])

    for subset in itertools.combinations(candidates, tau):
        chosen = set(subset)
        if all(u in chosen or v in chosen for u, v in edges):
            return VertexCover(chosen)

    assert False, "branch and bound reported a cover size that no subset attains"


def in_some_minimum_cover(g, v, vertices=None, tau=None):
    """True iff tau(G - v) = tau(G) - 1."""
    vertices = set(range(g.n) if vertices is None else vertices)
    tau = vertex_cover_number(g, vertices) if tau is None else tau

    return vertex_cover_number(g, vertices - {v}) == tau - 1


def brute_force_independence_number(g, vertices=None):
    adjacency = _local_adjacency(g, vertices)
    order = sorted(adjacency)

    for size in range(len(order), 0, -1):
        for subset in itertools.combinations(order, size):
            chosen = set(subset)
            if all(not (adjacency[v] & chosen) for v in subset):
                return size

    return 0


