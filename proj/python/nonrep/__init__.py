"""Non-repetitive colorings: words, morphic tree certificates, graph searches."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    ConfigError,
    DomainError,
    apply_morphism,
    directed_violation,
    directedness_threshold,
    find_squares,
    generate_powerfree_ternary,
    morphism_images,
    power_free_violation,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "apply_morphism",
    "certify",
    "directed_violation",
    "directedness_threshold",
    "find_squares",
    "generate_powerfree_ternary",
    "graph",
    "max_exponent",
    "morphism_images",
    "pi_k",
    "power_free_violation",
    "run_suite",
    "verify_coloring",
]


def max_exponent(word, min_period=1, alphabet=None):
    num, den = _core.max_exponent(word, min_period, alphabet)
    return Fraction(num, den)


def certify(morphism="g2", factor_len=None):
    """Certificate document for g2 or g5 as a dict; `overall` is the verdict."""
    return json.loads(_core.certify(morphism, factor_len))


def graph(family, *args):
    """Graph as a dict: graph("path", n), graph("stacked", i), graph("outeru", i),
    or graph("plus4", h, m) with h a graph dict."""
    if family == "path":
        text = _core.path_graph(*args)
    elif family == "stacked":
        text = _core.stacked_triangulation(*args)
    elif family == "outeru":
        text = _core.outerplanar_u(*args)
    elif family == "plus4":
        h, m = args
        text = _core.plus4_gadget(json.dumps(h), m)
    else:
        raise ValueError(f"unknown family {family!r}")
    return json.loads(text)


def verify_coloring(g, colors, k, max_path=None):
    if max_path is None:
        max_path = max(g["vertices"], 2 * k)
    return _core.verify_coloring(json.dumps(g), list(colors), k, max_path)


def pi_k(g, k, **budget):
    return _core.pi_k(json.dumps(g), k, **budget)


def run_suite(*only):
    return json.loads(_core.run_suite(list(only)))
