from .schedule import (
    RecolourSchedule,
    PreconditionError,
    HypothesisError,
    NotApplicableError,
    SchedulerError,
    validate_schedule,
)
from .splitting import split_by_scc
from .greedy import schedule_greedy_2n, schedule_list_factor2
from .biglists import schedule_biglists_orderswap, schedule_biglists_eg
from .correspondence import schedule_corr_biglists, schedule_corr_factor2, schedule_corr_sparse, sparse_hypothesis
from .trees import schedule_tree_exact
from .cycles import schedule_cycle
from .bipartite import schedule_complete_bipartite
from .cactus import schedule_cactus
from .dispatch import SCHEDULERS, ALGORITHMS, auto_schedule, schedule, candidate_schedulers
