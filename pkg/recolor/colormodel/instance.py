import ujson

from typing import Tuple

from recolor.graphcore.graph import Graph

Colouring = Tuple[int, ...]

LIST_MODE = "list"
CORR_MODE = "corr"


class InstanceError(ValueError):
    pass


class ColouringError(ValueError):
    pass


class CorrespondenceCover:
    """
    Colours of v are the indices 1..list_sizes[v]. For an edge uv with u < v,
    matchings[(u, v)] is a set of pairs (i, j): colour i at u conflicts with colour j at v.
    """

    def __init__(self, list_sizes, matchings):
        self.list_sizes = tuple(int(f) for f in list_sizes)
        self.matchings = {}
        self._partners = {}

        for (u, v), pairs in matchings.items():
            if u > v:
                u, v = v, u
                pairs = [(j, i) for i, j in pairs]

            pairs = frozenset((int(i), int(j)) for i, j in pairs)

            lefts = [i for i, _ in pairs]
            rights = [j for _, j in pairs]
            if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
                raise InstanceError(f"matching on edge ({u}, {v}) is not injective")

            for i, j in pairs:
                if not (1 <= i <= self.list_sizes[u] and 1 <= j <= self.list_sizes[v]):
                    raise InstanceError(f"pair ({i}, {j}) on edge ({u}, {v}) is out of range")

            self.matchings[(u, v)] = pairs
            self._partners[(u, v)] = dict(pairs)
            self._partners[(v, u)] = {j: i for i, j in pairs}

    def partner(self, v, c, w):
        """The colour of w that conflicts with colour c at v, or None."""
        return self._partners.get((v, w), {}).get(c)

    def pairs(self, u, v):
        if u < v:
            return self.matchings.get((u, v), frozenset())

        return frozenset((j, i) for i, j in self.matchings.get((v, u), frozenset()))


class Instance:
    """
    A graph plus either a list assignment (list mode) or a correspondence cover (corr mode).
    Together they define the reconfiguration graph whose vertices are proper colourings.
    """

    def __init__(self, graph, mode=LIST_MODE, lists=None, cover=None):
        self.graph = graph
        self.mode = mode

        if mode == LIST_MODE:
            if lists is None or cover is not None:
                raise InstanceError("list mode needs lists and no cover")
            if len(lists) != graph.n:
                raise InstanceError(f"expected {graph.n} lists, got {len(lists)}")

            self.lists = tuple(tuple(sorted({int(c) for c in l})) for l in lists)
            self.cover = None

            for v, l in enumerate(self.lists):
                if not l:
                    raise InstanceError(f"list of vertex {v} is empty")
                if l[0] < 0:
                    raise InstanceError(f"list of vertex {v} contains a negative colour")

        elif mode == CORR_MODE:
            if cover is None or lists is not None:
                raise InstanceError("correspondence mode needs a cover and no lists")
            if len(cover.list_sizes) != graph.n:
                raise InstanceError(f"expected {graph.n} list sizes, got {len(cover.list_sizes)}")

            for v, f in enumerate(cover.list_sizes):
                if f < 1:
                    raise InstanceError(f"vertex {v} has list size {f}")
            for u, v in cover.matchings:
                if not graph.has_edge(u, v):
                    raise InstanceError(f"cover has a matching on non-edge ({u}, {v})")

            self.lists = tuple(tuple(range(1, f + 1)) for f in cover.list_sizes)
            self.cover = cover

        else:
            raise InstanceError(f"unknown mode {mode!r}")

        self._list_sets = tuple(frozenset(l) for l in self.lists)

    @classmethod
    def uniform(cls, graph, k):
        return cls(graph, LIST_MODE, lists=[range(1, k + 1)] * graph.n)

    @property
    def n(self):
        return self.graph.n

    def colours(self, v):
        return self.lists[v]

    def has_colour(self, v, c):
        return c in self._list_sets[v]

    def conflicts(self, v, c, w, d):
        """Whether colour c at v and colour d at w clash across the edge vw."""
        if self.mode == LIST_MODE:
            return c == d

        return self.cover.partner(v, c, w) == d

    def conflicting_colour(self, v, c, w):
        """The colour of w ruled out by colour c at its neighbour v, or None."""
        if self.mode == LIST_MODE:
            return c if self.has_colour(w, c) else None

        return self.cover.partner(v, c, w)

    def check_colouring(self, c, name="colouring"):
        """Raises ColouringError unless c is a total, in-range, proper colouring."""
        if len(c) != self.n:
            raise ColouringError(f"{name} has {len(c)} entries for {self.n} vertices")

        for v in range(self.n):
            if not self.has_colour(v, c[v]):
                raise ColouringError(f"{name} gives vertex {v} colour {c[v]}, which is not in its list")

        for u, v in self.graph.sorted_edges():
            if self.conflicts(u, c[u], v, c[v]):
                raise ColouringError(f"{name} is improper on edge ({u}, {v})")

        return tuple(c)

    def toDict(self, alpha=None, beta=None):
        data = self.graph.toDict()
        data["mode"] = self.mode

        if self.mode == LIST_MODE:
            data["lists"] = [list(l) for l in self.lists]
        else:
            data["listSizes"] = list(self.cover.list_sizes)
            data["matchings"] = [
                {"u": u, "v": v, "pairs": sorted([list(p) for p in pairs])}
                for (u, v), pairs in sorted(self.cover.matchings.items())
            ]

        if alpha is not None:
            data["alpha"] = list(alpha)
        if beta is not None:
            data["beta"] = list(beta)

        return data

    @classmethod
    def from_dict(cls, data):
        """Returns (instance, alpha, beta); alpha and beta are None when absent."""
        try:
            graph = Graph.from_dict(data)
            mode = data.get("mode", LIST_MODE)

            if mode == LIST_MODE:
                instance = cls(graph, LIST_MODE, lists=data["lists"])
            else:
                matchings = {(m["u"], m["v"]): m["pairs"] for m in data.get("matchings", [])}
                cover = CorrespondenceCover(data["listSizes"], matchings)
                instance = cls(graph, mode, cover=cover)
        except KeyError as e:
            raise InstanceError(f"instance JSON is missing the field {e}") from e

        alpha = tuple(data["alpha"]) if data.get("alpha") is not None else None
        beta = tuple(data["beta"]) if data.get("beta") is not None else None

        return instance, alpha, beta

    @classmethod
    def from_path(cls, path):
        with open(path) as f:
            return cls.from_dict(ujson.load(f))

    def __eq__(self, other):
        return isinstance(other, Instance) and self.toDict() == other.toDict()

    def __repr__(self):
        return f"Instance(mode={self.mode}, n={self.n}, edges={len(self.graph.edges)})"


def is_proper(inst, c):
    """True iff c has no edge conflict; colours outside a vertex's list raise ColouringError."""
    if len(c) != inst.n:
        raise ColouringError(f"colouring has {len(c)} entries for {inst.n} vertices")

    for v in range(inst.n):
        if not inst.has_colour(v, c[v]):
            raise ColouringError(f"vertex {v} has colour {c[v]}, which is not in its list")

    return not any(inst.conflicts(u, c[u], v, c[v]) for u, v in inst.graph.edges)


def available_colours(inst, v, current, forbidden_extra=(), colours=None):
    """
    Colours of v, ascending, that clash with no neighbour's current colour and avoid
    forbidden_extra. `colours` narrows the candidates to a sub-list of L(v).
    """
    forbidden_extra = set(forbidden_extra)
    nbrs = inst.graph.adjacency[v]

    return [
        c
        for c in (inst.colours(v) if colours is None else colours)
        if c not in forbidden_extra and not any(inst.conflicts(v, c, w, current[w]) for w in nbrs)
    ]


def list_to_cover(inst):
    """
    Re-expresses a list instance as a correspondence cover: colour i of v is the i-th
    smallest entry of L(v), and equal colours across an edge are matched. Colourings
    translate through `colouring_to_cover` and `colouring_from_cover`.
    """
    if inst.mode != LIST_MODE:
        raise InstanceError("list_to_cover expects a list-mode instance")

    index = [{c: i + 1 for i, c in enumerate(l)} for l in inst.lists]
    matchings = {}

    for u, v in inst.graph.sorted_edges():
        shared = sorted(set(inst.lists[u]) & set(inst.lists[v]))
        matchings[(u, v)] = [(index[u][c], index[v][c]) for c in shared]

    cover = CorrespondenceCover([len(l) for l in inst.lists], matchings)
    return Instance(inst.graph, CORR_MODE, cover=cover)


def colouring_to_cover(inst, c):
    return tuple(inst.lists[v].index(c[v]) + 1 for v in range(inst.n))


def colouring_from_cover(inst, c):
    return tuple(inst.lists[v][c[v] - 1] for v in range(inst.n))


def hamming(a, b):
    return sum(1 for x, y in zip(a, b) if x != y)
