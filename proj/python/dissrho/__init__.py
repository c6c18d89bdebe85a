"""Dissociation number and spectral radius of graphs."""

import json as _json

from ._dissrho import (
    ConvergenceError,
    Graph,
    ParseError,
    PreconditionError,
    canonical_form,
    diss,
    enumerate,
    is_isomorphic,
    run_cli,
    spectral_radius,
)
from ._dissrho import min_rho_search as _min_rho_search


def min_rho_search(n, k, trees=False, tol=1e-10, workers=1):
    """Minimum spectral radius over connected graphs (or trees) of order n with diss = k."""
    return _json.loads(_min_rho_search(n, k, trees, tol, workers))


__all__ = [
    "ConvergenceError",
    "Graph",
    "ParseError",
    "PreconditionError",
    "canonical_form",
    "diss",
    "enumerate",
    "is_isomorphic",
    "min_rho_search",
    "run_cli",
    "spectral_radius",
]
