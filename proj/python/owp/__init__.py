"""Python access to the owp factorization toolkit.

Functions take and return plain Python values; documents are the same JSON
objects the ``owp`` command line reads and writes.
"""

import json

from . import _owp
from ._owp import ConstructionError, ParseError, parse_cycle_type


class Unsupported(Exception):
    """Raised by construct() when no construction applies."""


def construct(n, cycle_type):
    ok, payload = _owp.construct(n, cycle_type)
    if not ok:
        raise Unsupported(payload)
    return json.loads(payload)


def verify(document):
    return json.loads(_owp.verify(json.dumps(document)))


def search(n, cycle_type, max_seconds=None, all=False):
    return json.loads(_owp.search(n, cycle_type, max_seconds, all))


def pair_search(ell, max_seconds=None):
    return json.loads(_owp.pair_search(ell, max_seconds))


def profile(matching):
    return json.loads(_owp.profile(json.dumps(matching)))


def double(undirected):
    return json.loads(_owp.double(json.dumps(undirected)))


__all__ = [
    "ConstructionError",
    "ParseError",
    "Unsupported",
    "construct",
    "double",
    "pair_search",
    "parse_cycle_type",
    "profile",
    "search",
    "verify",
]
