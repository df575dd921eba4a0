import itertools

from recolor.graphcore.graph import Graph, GraphError
from recolor.graphcore.invariants import chromatic_number, optimal_colouring
from recolor.graphcore.matching import Matching, max_matching


class ConstructionError(ValueError):
    pass


def checked_matching(g, m):
    """`m` as a Matching of g (a maximum matching when None); ConstructionError otherwise."""
    if m is None:
        return max_matching(g)

    try:
        return Matching.checked(g, m)
    except GraphError as e:
        raise ConstructionError(str(e)) from e


def gen_hat_graph(g, m=None):
    """
    g plus an edge between the partners of the ends of every edge wx whose ends are
    matched to two different vertices. A proper colouring of it swapped along m is still
    proper on g, which is what forces every matched pair to move twice.
    """
    m = checked_matching(g, m)
    edges = set(g.edges)

    for w, x in g.sorted_edges():
        if w in m.partner and x in m.partner and m.partner[w] != x:
            p, q = m.partner[w], m.partner[x]
            if p != q:
                edges.add((min(p, q), max(p, q)))

    return Graph(g.n, edges)


def contraction_classes(g, m):
    """Vertex classes of g with every m-edge contracted, numbered by least vertex."""
    classes = sorted([sorted(e) for e in m] + [[v] for v in range(g.n) if v not in m.partner], key=min)
    index = {v: i for i, members in enumerate(classes) for v in members}

    return classes, index


def gen_tilde_graph(g, m=None):
    m = checked_matching(g, m)
    classes, index = contraction_classes(g, m)

    edges = {(index[u], index[v]) for u, v in g.edges if index[u] != index[v]}
    return Graph(len(classes), edges)


def product_colouring(g, m=None):
    """
    Proper colouring of the hat graph from an optimal colouring c of g: v gets the pair
    (c(v), c(partner)), an unmatched vertex pretending its partner has the least colour
    other than c(v). Pairs are numbered 1.. in lexicographic order, so at most
    chi(g)(chi(g) - 1) colours appear.
    """
    m = checked_matching(g, m)
    c = optimal_colouring(g)
    q = max(max(c), 2)

    pairs = [(i, j) for i, j in itertools.product(range(1, q + 1), repeat=2) if i != j]
    number = {pair: idx + 1 for idx, pair in enumerate(pairs)}

    colouring = []
    for v in range(g.n):
        if v in m.partner:
            other = c[m.partner[v]]
        else:
            other = next(j for j in range(1, q + 1) if j != c[v])

        colouring.append(number[(c[v], other)])

    return tuple(colouring)


def gen_hard_pair_k(g, k, m=None):
    """
    Two proper k-colourings at distance at least n + mu: a is an optimal colouring of the
    hat graph, b swaps a across every matched edge, and an unmatched vertex moves to the
    least colour avoiding a(v) and b on its neighbours.
    """
    m = checked_matching(g, m)
    hat = gen_hat_graph(g, m)
    chi = chromatic_number(hat)

    if not (k >= chi + 1 or (k >= chi and k >= g.max_degree() + 2)):
        raise ConstructionError(
            f"hard pair needs k >= chi(hat) + 1 = {chi + 1}, or k >= chi(hat) = {chi} together with "
            f"k >= max degree + 2 = {g.max_degree() + 2}; got k = {k}"
        )

    a = optimal_colouring(hat)
    b = [a[m.partner[v]] if v in m.partner else None for v in range(g.n)]

    for v in range(g.n):
        if b[v] is None:
            used = {a[v]} | {b[w] for w in g.adjacency[v] if b[w] is not None}
            b[v] = next(c for c in range(1, k + 1) if c not in used)

    return tuple(a), tuple(b)


def gen_tilde_pair(g, m=None):
    """
    (k, a, b) with k = 2 chi(tilde graph): a contracted edge in class colour i takes
    {2i - 1, 2i} (lower endpoint first) and swaps it in b; an unmatched vertex goes from
    2i to 2i - 1. Every vertex changes and every matched edge is a digon.
    """
    m = checked_matching(g, m)
    classes, index = contraction_classes(g, m)
    t = optimal_colouring(gen_tilde_graph(g, m))

    a, b = [None] * g.n, [None] * g.n

    for members in classes:
        i = t[index[members[0]]]

        if len(members) == 2:
            lo, hi = members
            a[lo], a[hi] = 2 * i - 1, 2 * i
            b[lo], b[hi] = 2 * i, 2 * i - 1
        else:
            (v,) = members
            a[v], b[v] = 2 * i, 2 * i - 1

    return 2 * max(t), tuple(a), tuple(b)


def gen_matching_choice_graph(p):
    """
    Two copies of K_p joined by perfect matchings to the two sides of K_{p,p}; vertices
    A = 0..p-1, X = p..2p-1, Y = 2p..3p-1, B = 3p..4p-1. Returns the graph, the matching
    made of the two joins, and (p even) the matching inside each K_p and across K_{p,p}.
    """
    if not isinstance(p, int) or p < 2:
        raise ConstructionError(f"matching-choice graph needs an integer p >= 2, got {p!r}")

    A, X, Y, B = (list(range(s * p, (s + 1) * p)) for s in range(4))

    edges = [(u, v) for side in (A, B) for u, v in itertools.combinations(side, 2)]
    edges += [(x, y) for x in X for y in Y]
    edges += list(zip(A, X)) + list(zip(B, Y))

    g = Graph(4 * p, edges)
    joins = Matching(list(zip(A, X)) + list(zip(B, Y)))

    split = None
    if p % 2 == 0:
        inside = [(side[i], side[i + 1]) for side in (A, B) for i in range(0, p, 2)]
        split = Matching(inside + list(zip(X, Y)))

    return g, joins, split
