"""Finite biquandles, cocycle conditions and state-sum invariants."""

import json as _json

from ._bqinv import (
    Biquandle,
    Cocycle,
    Diagram,
    Error,
    __version__,
    apply_h_move,
    canonical_word,
    check_condition_i,
    check_condition_ii,
    check_condition_iii,
    coloring_count,
    colorings,
    eval_word,
    f_star,
    state_sum,
    verify_biquandle,
)


def diagram(doc):
    """Build a Diagram from a dict in the diagram file format."""
    return Diagram.from_json(_json.dumps(doc))


def cocycle(doc):
    """Build a Cocycle from a dict in the cocycle file format."""
    return Cocycle.from_json(_json.dumps(doc))


__all__ = [
    "Biquandle",
    "Cocycle",
    "Diagram",
    "Error",
    "__version__",
    "apply_h_move",
    "canonical_word",
    "check_condition_i",
    "check_condition_ii",
    "check_condition_iii",
    "cocycle",
    "coloring_count",
    "colorings",
    "diagram",
    "eval_word",
    "f_star",
    "state_sum",
    "verify_biquandle",
]
