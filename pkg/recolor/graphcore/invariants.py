import networkx as nx

from fractions import Fraction

from recolor.graphcore.graph import GraphError


def degeneracy(g):
    if g.n == 0:
        raise GraphError("degeneracy is undefined on the empty graph")

    return max(nx.core_number(g.networkx).values())


def mad(g):
    """
    Exact maximum average degree, max over induced subgraphs H of 2|E(H)|/|V(H)|.
    Subsets are swept as bitmasks, with edge counts built from the subset minus its
    lowest vertex; intended for n up to about 20.
    """
    if g.n == 0:
        raise GraphError("mad is undefined on the empty graph")

    neighbour_masks = [sum(1 << w for w in g.adjacency[v]) for v in range(g.n)]

    edge_counts = [0] * (1 << g.n)
    best = Fraction(0)

    for mask in range(1, 1 << g.n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low

        edge_counts[mask] = edge_counts[rest] + bin(neighbour_masks[v] & rest).count("1")

        if edge_counts[mask]:
            density = Fraction(2 * edge_counts[mask], bin(mask).count("1"))
            best = max(best, density)

    return best


def clique_number(g):
    return max(len(clique) for clique in nx.find_cliques(g.networkx))


def optimal_colouring(g):
    """
    An exact chi(g)-colouring as a tuple of colours 1..chi, found by DSATUR-ordered
    backtracking for k = omega(g), omega(g)+1, ... until a k-colouring exists.
    """
    order_key = lambda v: (-g.degree(v), v)

    for k in range(clique_number(g), g.n + 1):
        colouring = _colour_with(g, k, order_key)
        if colouring is not None:
            return tuple(colouring)

    assert False, "every graph has an n-colouring"


def _colour_with(g, k, order_key):
    colouring = [0] * g.n

    def saturation(v):
        return len({colouring[w] for w in g.adjacency[v] if colouring[w]})

    def backtrack(coloured, used):
        if coloured == g.n:
            return True

        uncoloured = [v for v in range(g.n) if not colouring[v]]
        v = min(uncoloured, key=lambda x: (-saturation(x), order_key(x)))
        blocked = {colouring[w] for w in g.adjacency[v]}

        # colours above used+1 are interchangeable with used+1
        for c in range(1, min(k, used + 1) + 1):
            if c in blocked:
                continue

            colouring[v] = c
            if backtrack(coloured + 1, max(used, c)):
                return True
            colouring[v] = 0

        return False

    return colouring if backtrack(0, 0) else None


def chromatic_number(g):
    return max(optimal_colouring(g))
