import itertools
import networkx as nx

from functools import lru_cache
from tqdm import tqdm

from recolor.graphcore.graph import Graph, GraphError

MAX_ENUMERATION_ORDER = 8


@lru_cache(maxsize=None)
def _atlas_by_order():
    by_order = {}

    for h in nx.graph_atlas_g():
        by_order.setdefault(h.number_of_nodes(), []).append(h)

    return by_order


def _isomorphism_key(h):
    degrees = tuple(sorted(d for _, d in h.degree()))
    return degrees, nx.weisfeiler_lehman_graph_hash(h, iterations=3)


def _extend_by_one_vertex(smaller, verbose=False):
    """
    Every graph on n+1 vertices arises from some graph on n vertices by adding a vertex,
    so extending each representative by all neighbour subsets and discarding isomorphic
    duplicates gives one representative per class.
    """
    representatives = []
    buckets = {}

    for h in tqdm(smaller, disable=not verbose):
        n = h.number_of_nodes()

        for size in range(n + 1):
            for nbrs in itertools.combinations(range(n), size):
                candidate = nx.Graph(h)
                candidate.add_node(n)
                candidate.add_edges_from((n, w) for w in nbrs)

                bucket = buckets.setdefault(_isomorphism_key(candidate), [])
                if any(nx.is_isomorphic(candidate, other) for other in bucket):
                    continue

                bucket.append(candidate)
                representatives.append(candidate)

    return representatives


@lru_cache(maxsize=None)
def _all_graphs(n, verbose=False):
    if n < 1 or n > MAX_ENUMERATION_ORDER:
        raise GraphError(f"graph enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got n={n}")

    atlas = _atlas_by_order()
    if n in atlas:
        return tuple(atlas[n])

    return tuple(_extend_by_one_vertex(_all_graphs(n - 1), verbose=verbose))


def enumerate_graphs(n, connected_only=False, verbose=False):
    """Yields one Graph per isomorphism class on n vertices (optionally connected ones only)."""
    for h in _all_graphs(n, verbose):
        if connected_only and not nx.is_connected(h):
            continue

        yield Graph.from_networkx(h)
