"""Exact classification of wreath-product representations extending to
symplectic reflection algebras.

Thin wrapper around the C++ extension ``_srefl_core``: the heavy functions
return canonical JSON strings, which are decoded here into plain dicts.
"""

import json as _json

from _srefl_core import (  # noqa: F401
    mn_character,
    partition_dimension,
)
from _srefl_core import classify_json, group_json, mckay_json, verify_json

__all__ = [
    "group",
    "mckay",
    "classify",
    "verify",
    "partition_dimension",
    "mn_character",
]


def group(spec):
    """Character table and conjugacy-class data for C<m>, D<q>, T, O or I."""
    return _json.loads(group_json(spec))


def mckay(spec):
    """McKay graph and its affine Dynkin diagram."""
    return _json.loads(mckay_json(spec))


def classify(spec, n):
    """Extendable families of irreducible S_n wr Gamma^n representations."""
    return _json.loads(classify_json(spec, n))


def verify(spec, n, mode="exact"):
    """Run the matrix-level oracle over every candidate and compare with the
    classifier.  ``mode`` is ``"exact"`` or ``"float"``."""
    if mode not in ("exact", "float"):
        raise ValueError("mode must be 'exact' or 'float'")
    return _json.loads(verify_json(spec, n, mode))
