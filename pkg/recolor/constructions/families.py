import math

from recolor.constructions.auxiliary import ConstructionError
from recolor.graphcore.graph import Graph
from recolor.graphcore.matching import matching_number
from recolor.graphcore.structure import is_tree


def gen_path(n):
    if not isinstance(n, int) or n < 1:
        raise ConstructionError(f"path needs an integer n >= 1, got {n!r}")

    return Graph.path(n)


def gen_path_colouring(n):
    """Colours 1, 2, 3, 1, 2, 3, ... along P_n; in four colours it is a centre of the reconfiguration graph."""
    return tuple((i % 3) + 1 for i in range(n))


def gen_comb(n):
    """
    The comb on n vertices: spine v_1..v_m (vertices 0..m-1, m = ceil(n/2)) with a pendant
    w_i (vertex m + i - 1) on each spine vertex; for odd n the last spine vertex has none.
    Returns the graph and a colouring in three colours that is a centre of its
    five-colour reconfiguration graph.
    """
    if not isinstance(n, int) or n < 2:
        raise ConstructionError(f"comb needs an integer n >= 2, got {n!r}")

    m = (n + 1) // 2
    pendants = n // 2

    edges = [(i, i + 1) for i in range(m - 1)] + [(i, m + i) for i in range(pendants)]

    spine = {1: 2, 2: 3, 3: 1, 0: 3}
    leaf = {1: 1, 2: 1, 3: 2, 0: 2}

    a = [spine[i % 4] for i in range(1, m + 1)] + [leaf[i % 4] for i in range(1, pendants + 1)]

    return Graph(n, edges), tuple(a)


def path_formulas(n):
    """(diameter, radius) of the reconfiguration graph of P_n with k >= 4 colours."""
    return (3 * n) // 2, math.ceil((4 * n - 1) / 3)


def comb_formulas(n):
    """(diameter, radius) for the n-vertex comb with k >= 5 colours."""
    return (3 * n) // 2, math.ceil((5 * n - 1) / 4)


def tree_formulas(t):
    """(diameter, radius lower bound) for the tree t with lists of size deg + 2 or more."""
    if not is_tree(t):
        raise ConstructionError("tree formulas need a tree")

    mu = matching_number(t)
    return t.n + mu, t.n + math.ceil(mu / 2)
