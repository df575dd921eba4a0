from .report import SweepReport
from .sampling import random_lists, random_cover, sample_instances
from .sweep import hunt, check_regular_cereceda, conjectured_bound, cross_check
