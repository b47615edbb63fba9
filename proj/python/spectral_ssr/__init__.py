"""Spectral sparse representation.

Sample matrices are passed one sample per row. Graph weights are square
symmetric arrays. Labels are lists of ints starting at 0.
"""

import os as _os

_os.environ.setdefault(
    "SSR_DATA_DIR", _os.path.join(_os.path.dirname(__file__), "data")
)

from ._core import *  # noqa: E402,F401,F403
from ._core import SparseCodes, RhoReport, SsrError, ValidationError  # noqa: E402,F401

__version__ = "0.1.0"
