import os
import ujson
import dataclasses

from dataclasses import dataclass

from utility.utils.save_metadata import get_metadata_only
from .core_config import CoreConfig


@dataclass
class BaseConfig(CoreConfig):
    @classmethod
    def from_existing(cls, *sources):
        """
        Merges the assigned fields of each source, left to right, into a new config.
        Fields a source never assigned do not override earlier sources.
        """
        kw_args = {}
        valid = {field.name for field in dataclasses.fields(cls)}

        for source in sources:
            if source is None:
                continue

            values = dataclasses.asdict(source)
            kw_args.update({k: values[k] for k in source.assigned if k in valid and k in values})

        return cls(**kw_args)

    @classmethod
    def from_dict(cls, args):
        """Returns (config, ignored keys)."""
        obj = cls()
        ignored = obj.configure(ignore_unrecognized=True, **args)

        return obj, ignored

    @classmethod
    def from_path(cls, path):
        """Loads a saved config, or the config block of a sweep's .meta file."""
        with open(path) as f:
            args = ujson.load(f)

        if "config" in args and isinstance(args["config"], dict):
            args = args["config"]

        return cls.from_dict(args)

    def save(self, path, overwrite=False):
        assert overwrite or not os.path.exists(path), path

        args = self.export()
        args["meta"] = dict(get_metadata_only())

        with open(path, "w") as f:
            f.write(ujson.dumps(args, indent=4) + "\n")
