"""Exact weight patterns, singular vectors and lifting checks for |1|-graded sl(n).

Every function returns plain Python data decoded from the same JSON the
command-line tool prints. Weights are written "3 2 | 1 0"; rationals are
strings such as "-3/2".
"""

import json

from . import _core
from ._core import ContractError

__all__ = [
    "ContractError",
    "cover",
    "e_action",
    "one_way",
    "orbit",
    "pair_order",
    "pattern",
    "pattern_dot",
    "scan",
    "selftest",
    "singular",
    "translate",
    "weight",
]


def pattern(weight, pairs=False):
    return json.loads(_core.pattern(weight, "json", pairs))


def pattern_dot(weight):
    return _core.pattern(weight, "dot", False)


def orbit(weight):
    return json.loads(_core.orbit(weight))["elements"]


def weight(w):
    return json.loads(_core.weight(w))


def e_action(w):
    return _core.e_action(w)


def pair_order(u, v):
    return _core.pair_order(u, v)


def singular(n, p, k, w, variant="holonomic", target="invariant"):
    return json.loads(_core.singular(n, p, k, str(w), variant, target))


def scan(n, p, k, start, stop, variant="holonomic", target="invariant"):
    return json.loads(_core.scan(n, p, k, start, stop, variant, target))


def cover(n, p, w, vector):
    return json.loads(_core.cover(n, p, str(w), vector))


def translate(labels, f, e):
    return json.loads(_core.translate(list(labels), f, e))


def one_way(labels, e1, e2, f1, f2, e=None, f=None):
    return json.loads(_core.one_way(list(labels), e1, e2, f1, f2, e, f))


def selftest(golden_dir=None, only=()):
    return json.loads(_core.selftest(golden_dir or _core.default_golden_dir(), list(only)))
