from recolor.colormodel.instance import (
    CORR_MODE,
    LIST_MODE,
    CorrespondenceCover,
    Instance,
    colouring_to_cover,
    list_to_cover,
)
from recolor.constructions import ConstructionError, gen_corr_gadget, gen_hard_pair_k, gen_list_gadget

RANDOM_RULES = ("d+2", "2d+1")
LIST_RULES = RANDOM_RULES + ("uniform-k", "gadget", "hard-pair")

LIST_SIZE = {
    "d+2": lambda d: d + 2,
    "2d+1": lambda d: 2 * d + 1,
}


def list_sizes(g, rule):
    return [LIST_SIZE[rule](g.degree(v)) for v in range(g.n)]


def random_lists(g, rule, rng, pool=None):
    """Lists of the sizes `rule` asks for, drawn without replacement from 1..pool (default 2 max degree + 2)."""
    sizes = list_sizes(g, rule)
    pool = max(pool or 2 * g.max_degree() + 2, max(sizes))

    lists = [rng.sample(range(1, pool + 1), f) for f in sizes]
    return Instance(g, LIST_MODE, lists=lists)


def random_cover(g, rule, rng):
    """
    A cover with list sizes set by `rule`. Each edge gets a random matching: a full one
    (as large as the smaller list allows) half of the time, otherwise of random size.
    """
    sizes = list_sizes(g, rule)
    matchings = {}

    for u, v in g.sorted_edges():
        largest = min(sizes[u], sizes[v])
        size = largest if rng.random() < 0.5 else rng.randint(0, largest)

        lefts = rng.sample(range(1, sizes[u] + 1), size)
        rights = rng.sample(range(1, sizes[v] + 1), size)
        matchings[(u, v)] = list(zip(lefts, rights))

    return Instance(g, CORR_MODE, cover=CorrespondenceCover(sizes, matchings))


def uniform_k(g, rule, k=None):
    if k is not None:
        return k

    d = g.max_degree()

    if rule == "hard-pair":
        return max(2 * d, d + 2)

    return d + 2


def sample_instances(g, config, rng):
    """
    Yields (instance, pair) for graph g under `config.list_rule`; pair is the colouring
    pair the rule is about, or None when the whole reconfiguration graph is the subject.
    """
    rule = config.list_rule
    assert rule in LIST_RULES, rule

    if rule in RANDOM_RULES:
        for _ in range(config.samples_per_graph):
            if config.mode == LIST_MODE:
                yield random_lists(g, rule, rng, config.colour_pool), None
            else:
                yield random_cover(g, rule, rng), None

    elif rule == "uniform-k":
        inst = Instance.uniform(g, uniform_k(g, rule, config.uniform_k))
        yield (inst if config.mode == LIST_MODE else list_to_cover(inst)), None

    elif rule == "gadget":
        if config.mode == LIST_MODE:
            inst, a, b = gen_list_gadget(g)
        else:
            inst, a, b = gen_corr_gadget(g)

        yield inst, (a, b)

    else:
        k = uniform_k(g, rule, config.uniform_k)

        try:
            a, b = gen_hard_pair_k(g, k)
        except ConstructionError:
            return

        inst = Instance.uniform(g, k)

        if config.mode == CORR_MODE:
            a, b = colouring_to_cover(inst, a), colouring_to_cover(inst, b)
            inst = list_to_cover(inst)

        yield inst, (a, b)
