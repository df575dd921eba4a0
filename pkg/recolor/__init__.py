from .graphcore import Graph, Matching
from .colormodel import Instance, CorrespondenceCover, reconfig_lower_bound
from .oracle import exact_distance, diameter, radius, is_frozen
from .schedulers import RecolourSchedule, schedule, validate_schedule
