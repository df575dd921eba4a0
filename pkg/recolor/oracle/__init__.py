from .space import BudgetExceeded, StateSpace
from .search import (
    OracleResult,
    ReconfigurationGraph,
    exact_distance,
    eccentricity,
    diameter,
    radius,
    is_frozen,
    is_connected_reconfig,
    enumerate_colourings,
    count_colourings,
    sampled_distances,
    random_colouring_pairs,
)
