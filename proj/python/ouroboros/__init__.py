"""Verification and exploration tools for Ouroboros functions.

Report-producing functions return plain dicts decoded from the same JSON
the command-line tool writes.
"""

import json as _json

from . import _core
from ._core import (
    EvaluationError,
    InvalidArgument,
    ParseError,
    differentiate,
    evaluate,
    expected_value,
    normalize,
    prop2_mu,
)

__version__ = _core.__version__

__all__ = [
    "EvaluationError",
    "InvalidArgument",
    "ParseError",
    "check_expectation",
    "check_linear_exact",
    "check_prop3",
    "check_residual",
    "check_sampled",
    "differentiate",
    "evaluate",
    "expected_value",
    "explore",
    "linear_case_exact",
    "normalize",
    "prop2_mu",
    "run_cli",
    "verify_prop4",
]


def check_linear_exact(coeffs, tol=1e-12):
    return _json.loads(_core.check_linear_exact(list(coeffs), tol))


def check_sampled(expr, n=0, radius=10.0, seed=0, count=200, tol=1e-9):
    return _json.loads(_core.check_sampled(expr, n, radius, seed, count, tol))


def check_residual(expr, eq, n=0, beta=0, radius=2.0, seed=0, count=100):
    return _json.loads(_core.check_residual(expr, eq, n, beta, radius, seed, count))


def check_prop3(coeffs):
    return _json.loads(_core.check_prop3(list(coeffs)))


def verify_prop4(n):
    return _json.loads(_core.verify_prop4(n))


def check_expectation(values, probs, tol=1e-12):
    return _json.loads(_core.check_expectation(list(values), list(probs), tol))


def explore(n=2, degree=2, starts=20, seed=0, samples=0, mean_init=False):
    return _json.loads(_core.explore(n, degree, starts, seed, samples, mean_init))


def linear_case_exact(n):
    return _json.loads(_core.linear_case_exact(n))


def run_cli(args):
    """Run a command line in-process. Returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
