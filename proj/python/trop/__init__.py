"""Exact computations with tropical Plucker vectors, positroids and plabic graphs."""

import json
from fractions import Fraction

from . import _trop
from ._trop import InvalidInput, fvector_bound, graphic_k4_bases, is_matroid, is_positroid, ksubsets, web_trip

__all__ = [
    "InvalidInput",
    "classify",
    "counterexample_svg",
    "fvector_bound",
    "graphic_k4_bases",
    "is_matroid",
    "is_positive_tropical_plucker",
    "is_positroid",
    "is_tropical_plucker",
    "ksubsets",
    "phi",
    "psi",
    "regular_subdivision",
    "trop_phi",
    "trop_psi",
    "verify_counterexample",
    "web_trip",
]


def _out(values):
    return [Fraction(v) for v in values]


def _in(values):
    return [str(Fraction(v)) for v in values]


def trop_phi(k, n, X):
    """Tropical Plucker vector (lex order over k-subsets) from k(n-k) face values, row by row."""
    return _out(_trop.trop_phi(k, n, _in(X)))


def trop_psi(k, n, P):
    return _out(_trop.trop_psi(k, n, _in(P)))


def phi(k, n, x):
    return _out(_trop.phi(k, n, _in(x)))


def psi(k, n, p):
    return _out(_trop.psi(k, n, _in(p)))


def is_tropical_plucker(k, n, P):
    return json.loads(_trop.is_tropical_plucker(k, n, _in(P)))


def is_positive_tropical_plucker(k, n, P):
    return json.loads(_trop.is_positive_tropical_plucker(k, n, _in(P)))


def regular_subdivision(k, n, P):
    return json.loads(_trop.regular_subdivision(k, n, _in(P)))["cells"]


def classify(k, n, P):
    return json.loads(_trop.classify(k, n, _in(P)))


def verify_counterexample():
    return json.loads(_trop.verify_counterexample())


def counterexample_svg():
    return _trop.counterexample_svg()
