import os

from contextlib import contextmanager

from recolor.infra.config import RunConfig
from recolor.utils.utils import create_directory, print_message


class Run:
    """
    Process-wide stack of RunConfigs. Attribute lookups fall through to the innermost
    config, so `Run().rank` is the rank of whatever context the caller is running in.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)

            base = RunConfig()
            base.assign_defaults()
            cls._instance.stack = [base]

        return cls._instance

    @property
    def config(self):
        return self.stack[-1]

    def __getattr__(self, name):
        if hasattr(self.config, name):
            return getattr(self.config, name)

        raise AttributeError(name)

    @contextmanager
    def context(self, config, inherit_config=True):
        if inherit_config:
            config = RunConfig.from_existing(self.config, config)

        self.stack.append(config)

        try:
            yield
        finally:
            self.stack.pop()

    def open(self, filename, mode="r"):
        """Opens `filename` under the run directory; writing never replaces an existing file unless overwrite is set."""
        path = os.path.join(self.run_directory, filename)

        if not os.path.exists(os.path.dirname(path)):
            create_directory(os.path.dirname(path))

        if ("w" in mode or "a" in mode) and not self.overwrite:
            assert not os.path.exists(path), f"{path} exists; pass overwrite to replace it"

        return open(path, mode=mode)

    def print(self, *args):
        print_message(f"[{self.rank}]", "\t\t", *args)

    def print_main(self, *args):
        if self.rank == 0:
            self.print(*args)
