import os

from dataclasses import dataclass
from dotenv import load_dotenv

from recolor.utils.utils import timestamp

from .core_config import DefaultVal

load_dotenv()

DEFAULT_BUDGET = 10_000_000


def budget_from_env(default=DEFAULT_BUDGET):
    value = os.getenv("RECOLOR_BUDGET")

    if value is None or value.strip() == "":
        return default

    budget = int(value)
    assert budget > 0, f"RECOLOR_BUDGET must be positive, got {value}"

    return budget


@dataclass
class RunSettings:
    """Where a run writes its reports, and which worker this process is. Run() starts from these defaults."""

    overwrite: bool = DefaultVal(False)

    root: str = DefaultVal(os.path.join(os.getcwd(), "experiments"))
    experiment: str = DefaultVal("default")

    name: str = DefaultVal(timestamp(daydir=True))

    rank: int = DefaultVal(0)
    nranks: int = DefaultVal(1)

    @property
    def run_directory(self):
        return os.path.join(self.root, self.experiment, self.name)


@dataclass
class OracleSettings:
    budget: int = DefaultVal(budget_from_env())
    eccentricity_batch: int = DefaultVal(256)


@dataclass
class SweepSettings:
    """
    Parameters of a conjecture sweep.

    Attributes:
        nmax (int): Largest graph order enumerated.
        mode (str): "list" or "corr".
        list_rule (str): One of "d+2", "2d+1", "uniform-k", "gadget", "hard-pair".
        uniform_k (int): Colour count for the uniform-k and hard-pair rules. None means max degree + 2
            (max(2 * max degree, max degree + 2) for hard-pair).
        samples_per_graph (int): Random assignments drawn per graph.
        seed (int): Base seed; every task derives its own generator from (seed, task index).
        colour_pool (int): Size of the pool lists are drawn from. None means 2 * max degree + 2.
        exhaustive_nmax (int): Above this order, distances are sampled instead of taking full diameters.
        sampled_pairs (int): Colouring pairs drawn per instance when sampling.
        connected_only (bool): Restrict enumeration to connected graphs.
        dmax (int): Largest degree considered by the regular-graph sweep.
    """

    nmax: int = DefaultVal(4)
    mode: str = DefaultVal("list")
    list_rule: str = DefaultVal("d+2")
    uniform_k: int = DefaultVal(None)
    samples_per_graph: int = DefaultVal(3)
    seed: int = DefaultVal(12345)
    colour_pool: int = DefaultVal(None)
    exhaustive_nmax: int = DefaultVal(6)
    sampled_pairs: int = DefaultVal(8)
    connected_only: bool = DefaultVal(True)
    dmax: int = DefaultVal(2)
