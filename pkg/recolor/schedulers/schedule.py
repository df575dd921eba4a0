from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from recolor.colormodel.instance import ColouringError


class PreconditionError(ValueError):
    pass


class HypothesisError(PreconditionError):
    pass


class NotApplicableError(PreconditionError):
    pass


class SchedulerError(RuntimeError):
    """A scheduler tried a step that breaks properness or its own bookkeeping. Always a bug."""


@dataclass
class RecolourSchedule:
    steps: List[Tuple[int, int]] = field(default_factory=list)
    theorem: str = "manual"
    bound: Optional[int] = None

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def apply(self, colouring):
        colouring = list(colouring)
        for v, c in self.steps:
            colouring[v] = c
        return tuple(colouring)

    def reversed(self, start):
        """The same walk traversed backwards, given the colouring it starts from."""
        colourings = [tuple(start)]
        for v, c in self.steps:
            colourings.append(colourings[-1][:v] + (c,) + colourings[-1][v + 1 :])

        steps = [(v, colourings[i][v]) for i, (v, _) in reversed(list(enumerate(self.steps)))]
        return RecolourSchedule(steps, self.theorem, self.bound)

    def toDict(self):
        return {"steps": [list(step) for step in self.steps], "theorem": self.theorem, "bound": self.bound}

    @classmethod
    def from_dict(cls, data):
        if isinstance(data, list):
            data = {"steps": data}

        steps = [(int(v), int(c)) for v, c in data.get("steps", [])]
        return cls(steps, data.get("theorem", "manual"), data.get("bound"))

    @classmethod
    def cast(cls, obj):
        if isinstance(obj, cls):
            return obj

        if isinstance(obj, (dict, list)):
            return cls.from_dict(obj)

        assert False, f"obj has type {type(obj)} which is not compatible with cast()"


def validate_schedule(inst, a, b, schedule):
    """
    Replays `schedule` from a and returns (ok, diagnostic). The diagnostic names the first
    offending step; violations are reported, never raised.
    """
    schedule = RecolourSchedule.cast(schedule)

    try:
        a = inst.check_colouring(a, "alpha")
        b = inst.check_colouring(b, "beta")
    except ColouringError as e:
        return False, str(e)

    current = list(a)

    for idx, (v, c) in enumerate(schedule.steps):
        if not 0 <= v < inst.n:
            return False, f"step {idx}: vertex {v} does not exist"

        if current[v] == c:
            return False, f"step {idx}: vertex {v} already has colour {c}"

        if not inst.has_colour(v, c):
            return False, f"step {idx}: colour {c} is not available at vertex {v}"

        for w in sorted(inst.graph.adjacency[v]):
            if inst.conflicts(v, c, w, current[w]):
                return False, f"step {idx}: recolouring vertex {v} to {c} clashes with vertex {w}"

        current[v] = c

    if tuple(current) != b:
        wrong = [v for v in range(inst.n) if current[v] != b[v]]
        return False, f"schedule ends away from beta at vertices {wrong}"

    return True, "ok"
