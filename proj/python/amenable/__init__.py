"""Double Schubert polynomials and flagged formulas for amenable elements."""

import json

from ._core import (
    a_code,
    amenable_elements,
    canonical_omega,
    check_formula,
    classify,
    formula,
    is_amenable,
    is_vexillary,
    lemma_names,
    length,
    locus,
    parse_word,
    schubert,
    shape,
    tableau,
)
from . import _core


def sweep(type, n, exact=False, seed=1, sample=0, all_forms=False):
    """Compare formulas with the oracle over the amenable elements of rank n."""
    return json.loads(_core.sweep_json(type, n, exact, seed, sample, all_forms))


def lemmas(trials=100, seed=1, only=()):
    return json.loads(_core.lemmas_json(trials, seed, list(only)))


def appendix_b():
    return json.loads(_core.appendix_b_json())


__all__ = [
    "a_code", "amenable_elements", "appendix_b", "canonical_omega", "check_formula", "classify",
    "formula", "is_amenable", "is_vexillary", "lemma_names", "lemmas", "length", "locus",
    "parse_word", "schubert", "shape", "sweep", "tableau",
]
