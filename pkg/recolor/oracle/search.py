import random
import numpy as np

from dataclasses import dataclass, field
from typing import List, Optional, Tuple
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components
from tqdm import tqdm

from recolor.infra.config.settings import budget_from_env
from recolor.oracle.space import BudgetExceeded, StateSpace

WORD_BITS = 64


@dataclass
class OracleResult:
    value: Optional[int]
    explored_states: int
    witness: Optional[List[Tuple[int, int]]] = field(default=None)

    @property
    def infinite(self):
        return self.value is None

    def toDict(self):
        data = {"value": "inf" if self.infinite else self.value, "explored_states": self.explored_states}

        if self.witness is not None:
            data["witness"] = [list(step) for step in self.witness]

        return data


def _resolve_budget(budget):
    return budget_from_env() if budget is None else budget


def exact_distance(inst, a, b, budget=None):
    """
    Shortest recolouring sequence from a to b, by bidirectional breadth-first search.

    The smaller frontier is expanded one whole level at a time. Every state generated is
    tested against everything the other side has visited, and the best meeting point of
    the level is kept, so the first level that meets yields a shortest sequence.
    """
    budget = _resolve_budget(budget)
    a = inst.check_colouring(a, "alpha")
    b = inst.check_colouring(b, "beta")

    space = StateSpace(inst)
    ka, kb = space.encode(a), space.encode(b)

    if ka == kb:
        return OracleResult(0, 1, [])

    # forward: key -> (previous key, v, new colour); backward: key -> (next key, v, colour in next)
    sides = [
        {"depth": {ka: 0}, "parent": {ka: None}, "frontier": [ka]},
        {"depth": {kb: 0}, "parent": {kb: None}, "frontier": [kb]},
    ]

    while sides[0]["frontier"] and sides[1]["frontier"]:
        which = 0 if len(sides[0]["frontier"]) <= len(sides[1]["frontier"]) else 1
        this, other = sides[which], sides[1 - which]

        best = None
        frontier = []

        for x in this["frontier"]:
            for y, v, c, old in space.neighbours(x):
                if y in this["depth"]:
                    continue

                this["depth"][y] = this["depth"][x] + 1
                this["parent"][y] = (x, v, c) if which == 0 else (x, v, old)
                frontier.append(y)

                explored = len(sides[0]["depth"]) + len(sides[1]["depth"])
                if explored > budget:
                    raise BudgetExceeded(explored, budget)

                if y in other["depth"]:
                    total = this["depth"][y] + other["depth"][y]
                    if best is None or total < best[0]:
                        best = (total, y)

        this["frontier"] = frontier

        if best is not None:
            total, meet = best
            witness = _witness(sides[0]["parent"], sides[1]["parent"], meet)
            assert len(witness) == total, (len(witness), total)

            explored = len(sides[0]["depth"]) + len(sides[1]["depth"])
            return OracleResult(total, explored, witness)

    explored = len(sides[0]["depth"]) + len(sides[1]["depth"])
    return OracleResult(None, explored, None)


def _witness(forward, backward, meet):
    head = []
    key = meet

    while forward[key] is not None:
        key, v, c = forward[key]
        head.append((v, c))

    head.reverse()

    tail = []
    key = meet

    while backward[key] is not None:
        key, v, c = backward[key]
        tail.append((v, c))

    return head + tail


def is_frozen(inst, a):
    a = inst.check_colouring(a, "alpha")
    space = StateSpace(inst)

    return next(space.neighbours(space.encode(a), list(a)), None) is None


def enumerate_colourings(inst, budget=None):
    return list(StateSpace(inst).colourings(_resolve_budget(budget)))


def count_colourings(inst, budget=None):
    return sum(1 for _ in StateSpace(inst).colourings(_resolve_budget(budget)))


def eccentricity(inst, a, budget=None):
    """Largest distance from a to any proper colouring; infinite when some colouring is unreachable."""
    budget = _resolve_budget(budget)
    a = inst.check_colouring(a, "alpha")

    space = StateSpace(inst)
    start = space.encode(a)

    depth = {start: 0}
    frontier = [start]
    level = 0

    while frontier:
        nxt = []

        for x in frontier:
            for y, *_ in space.neighbours(x):
                if y not in depth:
                    depth[y] = level + 1
                    nxt.append(y)

                    if len(depth) > budget:
                        raise BudgetExceeded(len(depth), budget)

        if nxt:
            level += 1
        frontier = nxt

    total = sum(1 for _ in space.colourings(budget))
    explored = len(depth) + total

    return OracleResult(level if len(depth) == total else None, explored, None)


class ReconfigurationGraph:
    """The full reconfiguration graph, enumerated up front and held as a CSR adjacency matrix."""

    def __init__(self, inst, budget=None):
        budget = _resolve_budget(budget)

        self.inst = inst
        self.space = StateSpace(inst)
        self.states = list(self.space.colourings(budget))
        self.index = {self.space.encode(c): i for i, c in enumerate(self.states)}

        rows, cols = [], []

        for i, c in enumerate(self.states):
            key = self.space.encode(c)
            for y, *_ in self.space.neighbours(key, list(c)):
                rows.append(i)
                cols.append(self.index[y])

        N = len(self.states)
        data = np.ones(len(rows), dtype=np.int8)
        self.adjacency = csr_matrix((data, (rows, cols)), shape=(N, N))

    def __len__(self):
        return len(self.states)

    def components(self):
        if len(self) == 0:
            return 0
        count, _ = connected_components(self.adjacency, directed=False)
        return count

    def is_connected(self):
        return self.components() <= 1

    def eccentricities(self, batch_size=256, verbose=False):
        """
        Eccentricity of every state, by breadth-first search from `batch_size` sources at once.

        Each state carries a row of uint64 words with one bit per source; a level of the
        search ORs together the rows of the neighbours. Assumes the graph is connected.
        """
        N = len(self)
        ecc = np.zeros(N, dtype=np.int64)

        if N <= 1:
            return ecc

        indptr, indices = self.adjacency.indptr, self.adjacency.indices
        starts = indptr[:-1]
        isolated = indptr[1:] == indptr[:-1]
        batch_size = max(WORD_BITS, (batch_size // WORD_BITS) * WORD_BITS)

        offsets = range(0, N, batch_size)
        for offset in tqdm(offsets, disable=not verbose):
            sources = np.arange(offset, min(offset + batch_size, N))
            words = (len(sources) + WORD_BITS - 1) // WORD_BITS

            frontier = np.zeros((N, words), dtype=np.uint64)
            bits = np.arange(len(sources))
            frontier[sources, bits // WORD_BITS] = np.left_shift(np.uint64(1), (bits % WORD_BITS).astype(np.uint64))
            visited = frontier.copy()

            level = 0
            while True:
                gathered = np.vstack([frontier[indices], np.zeros((1, words), dtype=np.uint64)])
                nxt = np.bitwise_or.reduceat(gathered, np.minimum(starts, len(indices)), axis=0)
                nxt[isolated] = 0
                nxt &= ~visited

                if not nxt.any():
                    break

                level += 1
                visited |= nxt
                frontier = nxt

                reached = np.bitwise_or.reduce(nxt, axis=0)
                mask = np.unpackbits(reached.astype("<u8").view(np.uint8), bitorder="little")[: len(sources)]
                ecc[sources[mask.astype(bool)]] = level

        return ecc


def _extremal(inst, reduce, budget=None, batch_size=256, verbose=False):
    graph = ReconfigurationGraph(inst, budget)
    N = len(graph)

    if N <= 1:
        return OracleResult(0, N, None)

    if not graph.is_connected():
        return OracleResult(None, N, None)

    ecc = graph.eccentricities(batch_size, verbose=verbose)
    return OracleResult(int(reduce(ecc)), N, None)


def diameter(inst, budget=None, batch_size=256, verbose=False):
    return _extremal(inst, np.max, budget, batch_size, verbose)


def radius(inst, budget=None, batch_size=256, verbose=False):
    return _extremal(inst, np.min, budget, batch_size, verbose)


def is_connected_reconfig(inst, budget=None):
    return ReconfigurationGraph(inst, budget).is_connected()


def sampled_distances(inst, pairs, budget=None):
    return [exact_distance(inst, a, b, budget) for a, b in pairs]


def random_colouring_pairs(inst, count, rng=None, budget=None):
    """
    `count` pairs of proper colourings, each built greedily in a random vertex order with
    random colour choices; a vertex with no free colour restarts the attempt.
    """
    rng = rng or random.Random(0)
    pairs = []
    attempts = 0
    budget = _resolve_budget(budget)

    while len(pairs) < count:
        a = _random_colouring(inst, rng)
        b = _random_colouring(inst, rng)
        attempts += 1

        if a is not None and b is not None:
            pairs.append((a, b))
        elif attempts > budget:
            raise BudgetExceeded(attempts, budget)

    return pairs


def _random_colouring(inst, rng):
    order = list(range(inst.n))
    rng.shuffle(order)
    colouring = [None] * inst.n

    for v in order:
        options = [
            c
            for c in inst.colours(v)
            if not any(colouring[w] is not None and inst.conflicts(v, c, w, colouring[w]) for w in inst.graph.adjacency[v])
        ]

        if not options:
            return None

        colouring[v] = rng.choice(options)

    return tuple(colouring)
