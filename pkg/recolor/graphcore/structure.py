import networkx as nx

from recolor.graphcore.graph import components


def _vertex_set(g, vertices):
    return frozenset(range(g.n) if vertices is None else vertices)


def _edge_count(g, vertices):
    return len(g.edges_within(vertices))


def is_forest(g, vertices=None):
    vertices = _vertex_set(g, vertices)
    return _edge_count(g, vertices) == len(vertices) - len(components(g, vertices))


def is_tree(g, vertices=None):
    vertices = _vertex_set(g, vertices)
    return len(components(g, vertices)) == 1 and is_forest(g, vertices)


def is_cycle(g, vertices=None):
    vertices = _vertex_set(g, vertices)

    return (
        len(vertices) >= 3
        and len(components(g, vertices)) == 1
        and all(len(g.adjacency[v] & vertices) == 2 for v in vertices)
    )


def is_bipartite(g, vertices=None):
    return nx.is_bipartite(g.networkx.subgraph(_vertex_set(g, vertices)))


def is_cactus(g, vertices=None):
    """Every block of every component is a single edge or a cycle."""
    h = g.networkx.subgraph(_vertex_set(g, vertices))

    for block in nx.biconnected_component_edges(h):
        block = list(block)
        block_vertices = {x for e in block for x in e}

        if len(block) != 1 and len(block) != len(block_vertices):
            return False

    return True


def is_regular(g, d=None):
    degrees = {g.degree(v) for v in range(g.n)}
    return len(degrees) == 1 and (d is None or degrees == {d})


def complete_bipartition(g, vertices=None):
    """
    The two sides (side containing the least vertex first) when the graph induced by
    `vertices` is complete bipartite with both sides non-empty, else None.
    """
    vertices = _vertex_set(g, vertices)
    h = g.networkx.subgraph(vertices)

    if h.number_of_edges() == 0 or not nx.is_connected(h) or not nx.is_bipartite(h):
        return None

    colouring = nx.bipartite.color(h)
    first = colouring[min(vertices)]

    side_a = frozenset(v for v in vertices if colouring[v] == first)
    side_b = vertices - side_a

    if h.number_of_edges() != len(side_a) * len(side_b):
        return None

    return side_a, side_b


def blocks(g, vertices=None):
    """Biconnected blocks as vertex sets, ordered by their least vertex."""
    h = g.networkx.subgraph(_vertex_set(g, vertices))
    return sorted((frozenset(b) for b in nx.biconnected_components(h)), key=min)


def cut_vertices(g, vertices=None):
    h = g.networkx.subgraph(_vertex_set(g, vertices))
    return frozenset(nx.articulation_points(h))
