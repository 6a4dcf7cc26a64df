"""Aspect-based opinion mining over product reviews."""

from __future__ import annotations

import os
from pathlib import Path

from ._core import (
    Error,
    InvalidArgument,
    ParseError,
    Pipeline as _Pipeline,
    ResourceError,
    f_consistent_with_rounding,
    f_measure,
    mine,
    paired_t_test,
    parse_pretagged,
    percent_half_up,
    tokenize,
)
from ._core import default_data_dir as _compiled_data_dir

__all__ = [
    "Error",
    "InvalidArgument",
    "ParseError",
    "Pipeline",
    "ResourceError",
    "data_dir",
    "f_consistent_with_rounding",
    "f_measure",
    "mine",
    "paired_t_test",
    "parse_pretagged",
    "percent_half_up",
    "tokenize",
]


def data_dir() -> str:
    """Resource directory: $ASPECTMINER_DATA, the installed copy, or the build tree."""
    env = os.environ.get("ASPECTMINER_DATA")
    if env:
        return env
    packaged = Path(__file__).with_name("data")
    if packaged.is_dir():
        return str(packaged)
    return _compiled_data_dir()


class Pipeline(_Pipeline):
    def __init__(self, data_dir_path: str | None = None):
        super().__init__(data_dir_path or data_dir())
