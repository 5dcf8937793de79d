"""Exact rational-homotopy computations for graded algebra models.

The heavy lifting happens in the C++ extension; report-style results come
back as dicts (the extension emits JSON strings, unpacked here).
"""

import json as _json

from ._cdga import (
    Algebra,
    InputError,
    InternalError,
    Ring,
    catalog_model,
    csplit,
    parse_algebra,
)
from . import _cdga as _ext

__all__ = [
    "Algebra",
    "InputError",
    "InternalError",
    "Ring",
    "catalog",
    "catalog_model",
    "check",
    "cohomology",
    "csplit",
    "fat_weights",
    "lefschetz",
    "minimal_model",
    "parse_algebra",
    "pipeline",
    "sasaki_check",
    "weinstein_example",
]


def _unpack(text):
    return _json.loads(text)


def check(text):
    """Validate an algebra file; reports even when d*d != 0."""
    return _unpack(_ext.check(text))


def cohomology(algebra, max_degree):
    """Full cohomology table of an Algebra as a dict."""
    return _unpack(algebra.cohomology(max_degree))


def minimal_model(algebra, max_degree):
    """(model Algebra, certificate dict) for the staged minimal model."""
    model, report = algebra.minimal_model(max_degree)
    return model, _unpack(report)


def lefschetz(ring, cls=""):
    return _unpack(ring.lefschetz(cls))


def sasaki_check(betti, dimension):
    return _unpack(_ext.sasaki_check(betti, dimension))


def fat_weights(weights):
    ws = [str(w) for w in weights]
    return _unpack(_ext.fat_weights(ws))


def catalog(name=""):
    return _unpack(_ext.catalog(name))


def pipeline(base, fiber_degree=3, weights=(), omega="", max_degree=-1):
    ws = [str(w) for w in weights]
    return _unpack(_ext.pipeline(base, fiber_degree, ws, omega, max_degree))


def weinstein_example(degree):
    return _unpack(_ext.weinstein_example(degree))
