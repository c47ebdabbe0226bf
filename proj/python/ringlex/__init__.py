"""Linear lexicodes over Z4 and F2+uF2.

Results come back as plain dicts and lists with the same keys as the
`ringlex` command's JSON output.
"""

import json
import os

from . import _ringlex
from ._ringlex import (
    DEFAULT_CAP,
    CapExceeded,
    InvalidBasis,
    NonMultiplicative,
    ParseError,
    RinglexError,
    UndefinedDistance,
    UnsupportedMetric,
    gilbert_check,
    gray_words,
    rand_basis,
)

__all__ = [
    "DEFAULT_CAP",
    "CapExceeded",
    "InvalidBasis",
    "NonMultiplicative",
    "ParseError",
    "RinglexError",
    "UndefinedDistance",
    "UnsupportedMetric",
    "analyze",
    "build",
    "cli",
    "gilbert_check",
    "gray_words",
    "rand_basis",
    "verify_fixtures",
]


def build(ring, n, basis, criterion, delta=None, cap=DEFAULT_CAP):
    """Greedy lexicode; basis is a list of vector strings or "canonical"."""
    if isinstance(basis, str):
        basis = [basis]
    return json.loads(_ringlex.build(ring, n, list(basis), criterion, delta, cap))


def analyze(ring, n, generators, dual=True, rho=False, gray=False, gilbert=False, cap=DEFAULT_CAP):
    return json.loads(_ringlex.analyze(ring, n, list(generators), dual, rho, gray, gilbert, cap))


_PACKAGED_FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def verify_fixtures(fixtures="", table="", row=""):
    """Per-row outcomes for the bundled tables (or those in `fixtures`)."""
    if not fixtures and os.path.isdir(_PACKAGED_FIXTURES):
        fixtures = _PACKAGED_FIXTURES
    return json.loads(_ringlex.verify_fixtures(fixtures, str(table), str(row)))


def cli(*args):
    """Runs the command-line tool in process; returns (exit code, stdout, stderr)."""
    return _ringlex.cli([str(a) for a in args])
