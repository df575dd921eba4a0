import ujson

from dataclasses import dataclass, field
from typing import Dict, List

RELATIONS = {
    "<=": lambda observed, bound: observed is not None and observed <= bound,
    ">=": lambda observed, bound: observed is None or observed >= bound,
    "==": lambda observed, bound: observed == bound,
}


def as_json_value(value):
    return "inf" if value is None else value


def check(record, quantity, observed, bound, relation="<=", instance=None, tight=True, proven=True):
    """
    Compares `observed` (None meaning infinite) against `bound` and files the result in
    `record`: a failed comparison becomes a violation carrying `instance` (the record's
    own instance by default), or a finding when the bound is not `proven`. With `tight`
    an exact hit marks the record tight.
    """
    entry = {"quantity": quantity, "bound": bound, "observed": as_json_value(observed), "relation": relation}
    record["checks"].append(entry)

    if not RELATIONS[relation](observed, bound):
        record["violations" if proven else "findings"].append({"instance": instance or record["instance"], **entry})
        return False

    if tight and observed == bound:
        record["nearTight"] = True

    return True


def new_record(task, rule, instance, sample=0):
    return {
        "task": task,
        "sample": sample,
        "rule": rule,
        "instance": instance,
        "checks": [],
        "violations": [],
        "nearTight": False,
        "findings": [],
        "budgetExceeded": False,
    }


@dataclass
class SweepReport:
    """
    Merged outcome of a sweep. `records` holds one entry per task, in task order; the
    remaining fields summarize them. The sweep passed iff `violations` is empty.
    """

    instances_checked: int = 0
    violations: List[dict] = field(default_factory=list)
    near_tight: List[dict] = field(default_factory=list)
    findings: List[dict] = field(default_factory=list)
    timing: Dict[str, float] = field(default_factory=dict)
    budget_exceeded: int = 0
    records: List[dict] = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations

    def add(self, record):
        self.records.append(record)
        self.instances_checked += 1

        self.violations.extend(record["violations"])
        self.findings.extend(record["findings"])
        self.budget_exceeded += int(record["budgetExceeded"])

        if record["nearTight"]:
            self.near_tight.append(record["instance"])

    def merge(self, records):
        for record in sorted(records, key=lambda r: (r["task"], r.get("sample", 0))):
            self.add(record)

        return self

    def toDict(self):
        return {
            "instancesChecked": self.instances_checked,
            "passed": self.passed,
            "violations": self.violations,
            "nearTight": self.near_tight,
            "findings": self.findings,
            "timing": self.timing,
            "budgetExceeded": self.budget_exceeded,
        }

    def summary(self):
        return (
            f"{self.instances_checked} instances, {len(self.violations)} violations, "
            f"{len(self.near_tight)} tight, {len(self.findings)} findings, "
            f"{self.budget_exceeded} over budget"
        )

    def save(self, f):
        """Line-delimited JSON: one line per task record, then the summary."""
        for record in self.records:
            f.write(ujson.dumps(record) + "\n")

        f.write(ujson.dumps({"summary": self.toDict()}) + "\n")

    @classmethod
    def from_lines(cls, lines):
        report = cls()

        for line in lines:
            line = line.strip()
            if not line:
                continue

            data = ujson.loads(line)

            if "summary" in data:
                report.timing = data["summary"].get("timing", {})
            else:
                report.add(data)

        return report

    @classmethod
    def from_path(cls, path):
        with open(path) as f:
            return cls.from_lines(f)
