import math

from recolor.colormodel.instance import CORR_MODE, LIST_MODE, CorrespondenceCover, Instance
from recolor.constructions.auxiliary import ConstructionError, checked_matching
from recolor.graphcore.graph import Graph
from recolor.graphcore.matching import matching_number


def gen_list_gadget(g, m=None):
    """
    Lists of size deg(v) + 2 on which every pair of colourings differing everywhere and
    swapping along a maximum matching m needs exactly n + mu steps.

    Each matched edge uv (u < v), in edge order, gets a shared block {s, s + 1}; every
    vertex then gets fresh private colours up to its list size. a(u), a(v) = s, s + 1 and
    b swaps them; an unmatched vertex goes from its first private colour to its second.
    """
    m = checked_matching(g, m)

    if len(m) != matching_number(g):
        raise ConstructionError(f"list gadget needs a maximum matching; got {len(m)} edges, mu = {matching_number(g)}")

    lists = [[] for _ in range(g.n)]
    a, b = [None] * g.n, [None] * g.n
    fresh = 1

    for u, v in m:
        lists[u] += [fresh, fresh + 1]
        lists[v] += [fresh, fresh + 1]

        a[u], a[v] = fresh, fresh + 1
        b[u], b[v] = fresh + 1, fresh
        fresh += 2

    for v in range(g.n):
        private = g.degree(v) + 2 - len(lists[v])
        lists[v] += list(range(fresh, fresh + private))

        if a[v] is None:
            a[v], b[v] = fresh, fresh + 1

        fresh += private

    inst = Instance(g, LIST_MODE, lists=lists)
    return inst, inst.check_colouring(a, "alpha"), inst.check_colouring(b, "beta")


def gen_corr_gadget(g):
    """Every edge matches 1 with 2 and 2 with 1; going from all-1 to all-2 takes n + tau steps."""
    cover = CorrespondenceCover(
        [g.degree(v) + 2 for v in range(g.n)],
        {(u, v): [(1, 2), (2, 1)] for u, v in g.sorted_edges()},
    )

    return Instance(g, CORR_MODE, cover=cover), (1,) * g.n, (2,) * g.n


def gen_central_colouring(g, lists):
    """
    Gives each vertex its least colour appearing in no neighbour's list. Every other
    colouring is then reachable by recolouring each differing vertex once, so the result
    has eccentricity n when all lists have two or more colours.
    """
    if isinstance(lists, Instance):
        lists = lists.lists

    colouring = []

    for v in range(g.n):
        taken = set().union(*(lists[w] for w in g.adjacency[v]))
        private = sorted(set(lists[v]) - taken)

        if not private:
            raise ConstructionError(f"vertex {v} has no colour outside its neighbours' lists")

        colouring.append(private[0])

    return tuple(colouring)


def gen_frozen_regular(k):
    if k < 1:
        raise ConstructionError(f"frozen clique needs k >= 1, got {k}")

    return Graph.complete(k + 1), tuple(range(1, k + 2))


def gen_c4_example():
    inst = Instance.uniform(Graph.cycle(4), 4)
    return inst, (1, 2, 3, 4), (2, 3, 4, 1)


def gen_star_example(c):
    """
    K_{1,3c+3} in four colours. The leaves are split into three groups of c + 1 holding
    2, 3 and 4, and all must end on 1 while the centre moves from 1 to 4.
    """
    if not isinstance(c, int) or c < 0:
        raise ConstructionError(f"star example needs an integer c >= 0, got {c!r}")

    leaves = 3 * c + 3
    g = Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    a = (1,) + tuple(1 + math.ceil(i / (c + 1)) for i in range(1, leaves + 1))
    b = (4,) + (1,) * leaves

    return Instance.uniform(g, 4), a, b
