"""Exact characteristic polynomials, minimal polynomials and exponents of digraph families.

Polynomials are lists of Python ints, constant term first.
"""

import json

from ._core import (
    Digraph,
    Error,
    charpoly,
    closed_form,
    exponent,
    format_polynomial,
    is_non_derogatory,
    is_primitive,
    is_squarefree,
    minimal_polynomial,
    parse_polynomial,
)
from ._core import verify as _verify

__all__ = [
    "Digraph",
    "Error",
    "charpoly",
    "closed_form",
    "error_kind",
    "exponent",
    "format_polynomial",
    "is_non_derogatory",
    "is_primitive",
    "is_squarefree",
    "minimal_polynomial",
    "parse_polynomial",
    "verify",
]


def verify(table="all", n=None, cap=12, threads=0):
    """Run the table sweep and return the report rows as dicts (summaries have kind == "summary")."""
    return [json.loads(line) for line in _verify(table, n, cap, threads).splitlines() if line]


def error_kind(err):
    """The ErrorKind name carried by an Error, e.g. "InvalidParameter"."""
    return str(err).split(":", 1)[0]
