import dataclasses

from typing import Any
from dataclasses import dataclass, fields


@dataclass
class DefaultVal:
    """Marks a field default, so a config can tell defaults from values a caller assigned."""

    val: Any

    def __hash__(self):
        return hash(repr(self.val))

    def __eq__(self, other):
        return isinstance(other, DefaultVal) and self.val == other.val


@dataclass
class CoreConfig:
    def __post_init__(self):
        # field name -> True for every field given explicitly
        self.assigned = {}

        for field in fields(self):
            value = getattr(self, field.name)

            if isinstance(value, DefaultVal) or value is None:
                setattr(self, field.name, field.default.val)

            if not isinstance(value, DefaultVal):
                self.assigned[field.name] = True

    def assign_defaults(self):
        for field in fields(self):
            setattr(self, field.name, field.default.val)
            self.assigned[field.name] = True

    def configure(self, ignore_unrecognized=True, **kw_args):
        """Sets every key it recognizes; returns the set of keys it ignored."""
        return {key for key, value in kw_args.items() if not self.set(key, value, ignore_unrecognized)}

    def set(self, key, value, ignore_unrecognized=False):
        if hasattr(self, key):
            setattr(self, key, value)
            self.assigned[key] = True
            return True

        if not ignore_unrecognized:
            raise Exception(f"Unrecognized key `{key}` for {type(self)}")

        return False

    def export(self):
        return dataclasses.asdict(self)
