from .instance import (
    Colouring,
    CorrespondenceCover,
    Instance,
    InstanceError,
    ColouringError,
    LIST_MODE,
    CORR_MODE,
    is_proper,
    available_colours,
    list_to_cover,
    colouring_to_cover,
    colouring_from_cover,
    hamming,
)
from .digraph import ColourShiftDigraph, colour_shift_digraph, digraph_mu, reconfig_lower_bound
