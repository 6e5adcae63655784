"""Exact invariants of surfaces built from four lines in the plane.

Rationals cross the boundary as "p/q" strings; the helpers here turn them
into fractions.Fraction.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    DegenerateChain,
    InvalidConfiguration,
    NotPositiveDefinite,
    lr_to_weight,
    weight_to_lr,
)

__all__ = [
    "DegenerateChain",
    "InvalidConfiguration",
    "NotPositiveDefinite",
    "acc_demo",
    "chain_det",
    "cycle_det",
    "delta_fast",
    "fraction_to_chain",
    "invariants",
    "limit_volume",
    "lr_to_weight",
    "min_limit_point",
    "search",
    "volume_oracle",
    "weight_to_lr",
]


def _text(x):
    return str(Fraction(x))


def _matrix(m):
    if isinstance(m, str):
        return m
    return ";".join(",".join(str(int(v)) for v in row) for row in m)


def _coefficients(b):
    if isinstance(b, str):
        return b
    return ",".join(_text(v) for v in b)


def fraction_to_chain(x):
    return [Fraction(v) for v in _core.fraction_to_chain(_text(x))]


def chain_det(marks):
    return Fraction(_core.chain_det([_text(v) for v in marks]))


def cycle_det(marks):
    return Fraction(_core.cycle_det([_text(v) for v in marks]))


def invariants(matrix, b=(0, 0, 0, 0), context="general"):
    """The invariant report as a dict; rationals stay "p/q" strings."""
    return json.loads(_core.invariants_json(_matrix(matrix), _coefficients(b), context))


def volume_oracle(matrix, b=(0, 0, 0, 0)):
    return Fraction(_core.volume_oracle(_matrix(matrix), _coefficients(b)))


def delta_fast(matrix):
    return Fraction(_core.delta_fast(_matrix(matrix)))


def search(set="S0", case=0, cap=None, jobs=1):
    if cap is None:
        cap = 8 if set == "S1" else 12
    return json.loads(_core.search_json(set, case, cap, jobs))


def limit_volume(matrix, b, row, line=0):
    return Fraction(_core.limit_volume(_matrix(matrix), _coefficients(b), row, line))


def min_limit_point(cap=8):
    return Fraction(_core.min_limit_point(cap))


def acc_demo(series, order, x):
    return Fraction(_core.acc_demo(series, list(order), list(x)))
