"""Row-reduction kernel with a compiled core and a pure-numpy fallback.

The backend is picked once at import: the Cython extension when it is built,
otherwise the numpy implementation.  `QFROB_KERNEL=numpy|cython` forces the
choice, and `set_backend` switches at runtime (used by the equivalence tests
and the benchmark).  Both backends implement the same contract:

    echelon(mat, p, reduced=True) -> (rows, pivot_columns)
    rank(mat, p) -> int
    reduce_rows(ech, pivots, x, p) -> ndarray
"""

import os

from . import numpy_backend

_BACKENDS = {"numpy": numpy_backend}

try:
    from . import cython_backend

    _BACKENDS["cython"] = cython_backend
except ImportError:  # extension not built
    cython_backend = None

_forced = os.environ.get("QFROB_KERNEL")
if _forced:
    if _forced not in _BACKENDS:
        raise ImportError(f"QFROB_KERNEL={_forced!r} is not available "
                          f"(choices: {sorted(_BACKENDS)})")
    _active = _forced
else:
    _active = "cython" if "cython" in _BACKENDS else "numpy"


def available_backends():
    return sorted(_BACKENDS)


def backend_name():
    return _active


def set_backend(name):
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r} "
                         f"(choices: {sorted(_BACKENDS)})")
    _active = name


def get_backend():
    return _BACKENDS[_active]
