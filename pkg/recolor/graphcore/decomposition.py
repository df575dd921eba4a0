from dataclasses import dataclass
from typing import Tuple, FrozenSet

from recolor.graphcore.graph import components
from recolor.graphcore.matching import matching_number


@dataclass(frozen=True)
class EGDecomposition:
    """
    Edmonds-Gallai partition: v1 holds the vertices avoided by some maximum matching,
    v2 their outside neighbours, v3 the rest.
    """

    v1: FrozenSet[int]
    v2: FrozenSet[int]
    v3: FrozenSet[int]
    components_of_v1: Tuple[FrozenSet[int], ...]

    def matching_number(self, n):
        return (n - len(self.components_of_v1) + len(self.v2)) // 2

    def toDict(self):
        return {
            "v1": sorted(self.v1),
            "v2": sorted(self.v2),
            "v3": sorted(self.v3),
            "componentsOfV1": [sorted(c) for c in self.components_of_v1],
        }


def edmonds_gallai(g, vertices=None):
    vertices = frozenset(range(g.n) if vertices is None else vertices)
    mu = matching_number(g, vertices)

    v1 = frozenset(v for v in vertices if matching_number(g, vertices - {v}) == mu)
    v2 = frozenset(w for v in v1 for w in g.adjacency[v] & vertices if w not in v1)
    v3 = vertices - v1 - v2

    return EGDecomposition(v1, v2, v3, tuple(components(g, v1)))


def is_factor_critical(g, vertices=None):
    vertices = frozenset(range(g.n) if vertices is None else vertices)

    if len(vertices) % 2 == 0:
        return False

    half = (len(vertices) - 1) // 2
    return all(matching_number(g, vertices - {v}) == half for v in vertices)
