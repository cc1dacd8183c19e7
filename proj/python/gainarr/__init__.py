"""Gain graphs, their hyperplane arrangements and freeness checks."""

import json

from ._gainarr import (
    GainarrError,
    GainGraph,
    __version__,
    chi,
    chi_string,
    exp2_lines,
    exp2_q_powers,
    family,
    is_free,
    raney,
    run_cli,
    signed_predicates,
)
from . import _gainarr


def certificate(graph, kind="bias", mode="if"):
    """Freeness certificate (verdict, exponents, witness or refutation) as a dict."""
    return json.loads(_gainarr._certificate(graph, kind, mode))


def free3(graph):
    """Three-vertex freeness of the cone and the bias arrangement."""
    return json.loads(_gainarr._free3(graph))


__all__ = [
    "GainarrError",
    "GainGraph",
    "certificate",
    "chi",
    "chi_string",
    "exp2_lines",
    "exp2_q_powers",
    "family",
    "free3",
    "is_free",
    "raney",
    "run_cli",
    "signed_predicates",
]
