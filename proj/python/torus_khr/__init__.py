"""Superpolynomials of (m, n) torus knots.

Exponents of q and t are stored doubled, so a term (a, q2, t2, c) stands for
c * a^a * q^(q2/2) * t^(t2/2).
"""

import json

from ._core import (
    CoefficientOverflow,
    Invariant,
    InternalError,
    KhrError,
    LinksUnsupported,
    PreconditionError,
    catalan_count,
    chi,
    euler_characteristic,
    hhh,
    invariant_p,
    path_stats,
    paths,
    rational_catalan,
    sweep,
)
from ._core import leaf_table_json as _leaf_table_json
from ._core import verify_json as _verify_json

__all__ = [
    "CoefficientOverflow",
    "Invariant",
    "InternalError",
    "KhrError",
    "LinksUnsupported",
    "PreconditionError",
    "catalan_count",
    "chi",
    "euler_characteristic",
    "hhh",
    "invariant_p",
    "leaf_table",
    "path_stats",
    "paths",
    "rational_catalan",
    "sweep",
    "verify",
]


def verify(m, n, suites="all", symmetry_warn=False):
    """Run the verification suites and return the report as a dict."""
    return json.loads(_verify_json(m, n, suites, symmetry_warn))


def leaf_table(m, n, profile="HHH"):
    """Leaf table of the sweep recursion, one dict per Dyck path."""
    return json.loads(_leaf_table_json(m, n, profile))
