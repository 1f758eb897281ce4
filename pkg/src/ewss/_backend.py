"""Kernel backend selection.

The bit-packed GF(2) elimination kernels exist twice: a numba @njit
version and a pure-numpy version with identical signatures.  The env
variable EWSS_BACKEND picks one ("numba" or "numpy"); default is numba
when importable, numpy otherwise.
"""

from __future__ import annotations

import os
import warnings

_CHOICES = ("numba", "numpy")


def _select() -> str:
    requested = os.environ.get("EWSS_BACKEND", "").strip().lower()
    if requested and requested not in _CHOICES:
        raise ValueError(
            f"EWSS_BACKEND must be one of {_CHOICES}, got {requested!r}"
        )
    if requested == "numpy":
        return "numpy"
    try:
        import numba  # noqa: F401
    except ImportError:
        if requested == "numba":
            raise
        warnings.warn("numba not importable, falling back to numpy kernels")
        return "numpy"
    return "numba"


BACKEND = _select()

if BACKEND == "numba":
    from . import _kernels_numba as kernels
else:
    from . import _kernels_numpy as kernels

rref = kernels.rref
matmul_acc = kernels.matmul_acc
reduce_mod = kernels.reduce_mod
