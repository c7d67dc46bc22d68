"""Explicit-word kernels, compiled when possible.

The Cython extension is preferred; set ``BRITTON_PURE_PYTHON=1`` to force the
pure-Python implementation.  ``BACKEND`` names the one in use.
"""

from __future__ import annotations

import os
from array import array

from . import _pykernels

if os.environ.get("BRITTON_PURE_PYTHON"):
    _impl = None
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = None

BACKEND = "python" if _impl is None else "cython"


def _as_array(word):
    if isinstance(word, array) and word.typecode == "q":
        return word
    return array("q", word)


if _impl is None:
    def free_reduce(word) -> list[int]:
        return _pykernels.free_reduce(word)

    def fingerprint(word, base: int) -> tuple[int, int]:
        return _pykernels.fingerprint(word, base)

    def cancel_length(left, right) -> int:
        return _pykernels.cancel_length(left, right)
else:
    def free_reduce(word) -> list[int]:
        return _impl.free_reduce(_as_array(word)).tolist()

    def fingerprint(word, base: int) -> tuple[int, int]:
        return _impl.fingerprint(_as_array(word), base)

    def cancel_length(left, right) -> int:
        return _impl.cancel_length(_as_array(left), _as_array(right))

free_reduce.__doc__ = "Stack-scan free reduction of an explicit word."
fingerprint.__doc__ = "Forward and inverse-word fingerprints of an explicit word."
cancel_length.__doc__ = "Number of letters cancelling at the junction ``left | right``."
