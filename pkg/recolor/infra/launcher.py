import os
import queue
import random
import traceback

import numpy as np
import multiprocessing as mp

from dataclasses import dataclass

from recolor.infra.config import BaseConfig, RunConfig, RunSettings
from recolor.infra.run import Run
from recolor.utils.utils import print_message

POLL_SECONDS = 1.0


class WorkerError(RuntimeError):
    pass


@dataclass
class WorkerFailure:
    traceback: str


class Launcher:
    """
    Runs `callee(config, *args)` once per rank, each rank in its own process.

    Every return value is collected as (rank, value) and the list is sorted by rank,
    so the result never depends on which worker finishes first.
    """

    def __init__(self, callee, run_config=None, return_all=False, verbose=False):
        self.callee = callee
        self.return_all = return_all
        self.verbose = verbose

        self.run_config = RunConfig.from_existing(Run().config, run_config)
        self.nranks = self.run_config.nranks

    def launch(self, custom_config, *args):
        assert isinstance(custom_config, BaseConfig)
        assert isinstance(custom_config, RunSettings)

        ctx = mp.get_context("spawn")
        return_value_queue = ctx.Queue()

        all_procs = []
        for new_rank in range(0, self.nranks):
            new_config = type(custom_config).from_existing(
                custom_config, self.run_config, RunConfig(rank=new_rank)
            )

            args_ = (self.callee, return_value_queue, new_config, *args)
            all_procs.append(ctx.Process(target=setup_new_process, args=args_))

        for proc in all_procs:
            print_message("#> Starting worker...", condition=self.verbose)
            proc.start()

        try:
            return_values = self._collect(all_procs, return_value_queue)
        except WorkerError:
            for proc in all_procs:
                proc.terminate()
                proc.join()
            raise

        for proc in all_procs:
            proc.join()

        failed = [proc.exitcode for proc in all_procs if proc.exitcode != 0]
        assert not failed, f"worker processes exited with codes {failed}"

        return_values = [val for rank, val in sorted(return_values, key=lambda x: x[0])]

        return return_values if self.return_all else return_values[0]

    def _collect(self, procs, return_value_queue):
        """
        Waits for one (rank, value) per worker. A worker that raised sends a WorkerFailure
        instead; one that died without sending anything is caught by its exit code.
        """
        return_values = []

        while len(return_values) < len(procs):
            try:
                rank, value = return_value_queue.get(timeout=POLL_SECONDS)
            except queue.Empty:
                dead = [(rank, proc.exitcode) for rank, proc in enumerate(procs) if proc.exitcode not in (None, 0)]

                if dead:
                    raise WorkerError(f"worker (rank, exit code) {dead} exited without returning a value")

                continue

            if isinstance(value, WorkerFailure):
                raise WorkerError(f"worker {rank} raised:\n{value.traceback}")

            return_values.append((rank, value))

        return return_values

    def launch_without_fork(self, custom_config, *args):
        assert isinstance(custom_config, BaseConfig)
        assert isinstance(custom_config, RunSettings)
        assert self.nranks == 1

        new_config = type(custom_config).from_existing(
            custom_config, self.run_config, RunConfig(rank=0, nranks=1)
        )
        return_val = run_process_without_mp(self.callee, new_config, *args)

        return return_val if not self.return_all else [return_val]


def set_seed(seed):
    random.seed(seed)
    np.random.seed(seed)


def run_process_without_mp(callee, config, *args):
    set_seed(config.seed if hasattr(config, "seed") else 12345)

    with Run().context(config, inherit_config=False):
        return_val = callee(config, *args)
        return return_val


def setup_new_process(callee, return_value_queue, config, *args):
    """
    Entry point of a worker process: seeds the generators, pushes the worker's config
    on the Run() stack and ships (rank, return value) back through the queue.
    """
    set_seed(config.seed if hasattr(config, "seed") else 12345)

    os.environ["RECOLOR_RANK"] = str(config.rank)

    with Run().context(config, inherit_config=False):
        try:
            return_val = callee(config, *args)
        except Exception:
            return_value_queue.put((config.rank, WorkerFailure(traceback.format_exc())))
            raise

    return_value_queue.put((config.rank, return_val))
