"""Selects the compiled kernels when available, pure Python otherwise.

Set MULTINOM_BACKEND=python or MULTINOM_BACKEND=c before import to force a
backend (the default, "auto", prefers the compiled one).
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

_NAMES = ("c", "python")


def available():
    """Names of the backends that can be used in this installation."""
    return _NAMES if _ckernels is not None else ("python",)


def get(name):
    """Kernel module for a backend name ("c", "python", or "auto")."""
    if name == "python":
        return _pykernels
    if name == "c":
        if _ckernels is None:
            raise ValueError("compiled kernels are not available in this installation")
        return _ckernels
    if name == "auto":
        return _ckernels if _ckernels is not None else _pykernels
    raise ValueError(f"unknown backend {name!r} (expected c, python, or auto)")


def _select():
    forced = os.environ.get("MULTINOM_BACKEND", "auto") or "auto"
    return get(forced), ("c" if get(forced) is _ckernels else "python")


active, active_name = _select()
