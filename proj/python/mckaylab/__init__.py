"""Exact character tables, McKay graphs and classical-group verifiers."""

import json as _json
import os as _os

from ._core import (
    InvariantError,
    IoError,
    ValidationError,
    __version__,
    commands,
    conjugate,
    dimension,
    partition_count,
    partitions,
    sn_character,
    support,
)
from . import _core

__all__ = [
    "InvariantError",
    "IoError",
    "ValidationError",
    "__version__",
    "commands",
    "conjugate",
    "default_parameters",
    "dimension",
    "partition_count",
    "partitions",
    "run",
    "sn_character",
    "support",
]


def default_parameters(command):
    """Normalized default parameters of an experiment."""
    return _json.loads(_core.default_parameters(command))


def run(command, params=None, *, seed=1, workers=1, cache_dir=None, paranoid=False):
    """Run an experiment and return its document: {"manifest": ..., "result": ...}.

    cache_dir defaults to $MCKAY_CACHE_DIR when set.
    """
    if cache_dir is None:
        cache_dir = _os.environ.get("MCKAY_CACHE_DIR") or None
    text = _core.run(
        command,
        _json.dumps(params or {}),
        seed,
        workers,
        None if cache_dir is None else str(cache_dir),
        paranoid,
    )
    return _json.loads(text)
