from recolor.utils.utils import dotdict
import sys
import git
import time
import ujson
import socket

VERSION = "recolor-v0.1"


def get_metadata_only():
    args = dotdict()

    args.hostname = socket.gethostname()
    try:
        repo = git.Repo(search_parent_directories=True)
        args.git_branch = repo.active_branch.name
        args.git_hash = repo.head.object.hexsha
        args.git_commit_datetime = str(repo.head.object.committed_datetime)
    except (git.exc.InvalidGitRepositoryError, git.exc.NoSuchPathError, TypeError, ValueError):
        # detached heads and bare checkouts have no active branch
        pass
    args.current_datetime = time.strftime("%b %d, %Y ; %l:%M%p %Z (%z)")
    args.cmd = " ".join(sys.argv)
    args.version = VERSION

    return args


def get_sweep_metadata(config, report):
    """Provenance of a sweep report: host and commit, the exported config, and the report summary."""
    args = get_metadata_only()

    args.config = config.export()
    args.summary = report.summary()
    args.timing = dict(report.timing)
    args.passed = report.passed

    return args


def format_metadata(metadata):
    assert type(metadata) in [dict, dotdict]

    return ujson.dumps(dict(metadata), indent=4)
