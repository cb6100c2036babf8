"""Exact-arithmetic verifier for averaging bialgebra structures.

Thin wrapper around the C++ extension: documents go in as JSON text or dicts
(or embedded fixture names like ``FIX-A3``), reports come back as dicts.
"""

import json as _json

from _avgbi import (  # noqa: F401
    InputError,
    ParseError,
    ValidationError,
    cli,
)
import _avgbi as _ext

__all__ = [
    "check",
    "construct",
    "search",
    "canonicalize",
    "paper_diff",
    "fixtures",
    "fixture",
    "cli",
    "ParseError",
    "InputError",
    "ValidationError",
]


def _as_text(doc):
    if isinstance(doc, dict):
        return _json.dumps(doc)
    return doc


def check(doc, kind, lambda_=None):
    """Run one axiom suite; returns the machine report as a dict."""
    return _json.loads(_ext.check(_as_text(doc), kind, lambda_))


def construct(kind, doc, lambda_=None, force=False):
    """Build a derived structure; returns the canonical document as a dict."""
    return _json.loads(_ext.construct(kind, _as_text(doc), lambda_, force))


def search(template, force=False, partitions=1):
    """Brute-force enumeration over a search template; returns document dicts."""
    return [_json.loads(t) for t in _ext.search(_as_text(template), force, partitions)]


def canonicalize(doc):
    """Parse and re-emit a document in canonical form."""
    return _json.loads(_ext.canonicalize(_as_text(doc)))


def paper_diff(constructed, printed):
    """Entry-level diff of the shared sections of two documents."""
    return _json.loads(_ext.paper_diff(_as_text(constructed), _as_text(printed)))


def fixtures():
    """Names of the embedded fixture corpus."""
    return sorted(_ext.fixtures().keys())


def fixture(name):
    """One embedded fixture as a dict."""
    return _json.loads(_ext.fixtures()[name])
