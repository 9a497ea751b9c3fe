"""Exact arithmetic for degenerations and contractions of algebras and forms.

Every function mirrors the CLI's JSON encodings: rationals are "p/q" strings,
structure vectors are sparse one-based entry lists, and matrices are row
arrays.  Inputs and outputs are plain Python dicts/lists.
"""

import json

from orbitkit import _core

__version__ = "0.1.0"

__all__ = [
    "act",
    "catalog",
    "contract",
    "degen_check",
    "invariants",
    "qf_blocks",
    "qf_diagonalize",
    "qf_limit",
    "qf_represents",
    "trace_form",
    "verify_certificate",
    "verify_paper",
    "witt",
]


def catalog(name):
    """Structure vector of a named algebra: f2:s, f3:c, split3:s, a0, a4, a5."""
    return json.loads(_core.catalog(name))


def invariants(algebra):
    return json.loads(_core.invariants(json.dumps(algebra)))


def trace_form(algebra):
    return json.loads(_core.trace_form(json.dumps(algebra)))


def act(algebra, matrix):
    return json.loads(_core.act(json.dumps(algebra), json.dumps(matrix)))


def contract(algebra, family):
    return json.loads(_core.contract(json.dumps(algebra), json.dumps(family)))


def verify_certificate(from_algebra, family, to_algebra, matcher=None):
    return _core.verify_certificate(
        json.dumps(from_algebra),
        json.dumps(family),
        json.dumps(to_algebra),
        "" if matcher is None else json.dumps(matcher),
    )


def degen_check(from_algebra, to_algebra):
    return json.loads(_core.degen_check(json.dumps(from_algebra), json.dumps(to_algebra)))


def qf_diagonalize(form):
    return json.loads(_core.qf_diagonalize(json.dumps(form)))


def qf_blocks(form):
    return json.loads(_core.qf_blocks(json.dumps(form)))


def qf_represents(form, target, height=20):
    return json.loads(_core.qf_represents(json.dumps(form), json.dumps(target), height))


def qf_limit(form, family):
    return json.loads(_core.qf_limit(json.dumps(form), json.dumps(family)))


def witt(form):
    return json.loads(_core.witt(json.dumps(form)))


def verify_paper(seed=1):
    """Run the complete reproduction suite and return its report."""
    return json.loads(_core.verify_paper(seed))
