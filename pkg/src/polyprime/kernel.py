"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``POLYPRIME_PURE=1`` to force the pure-Python kernel. Both kernels
implement the identical contract (see ``_kernel_py``), so the choice only
affects speed, never results.
"""

import os

from polyprime import _kernel_py

try:
    from polyprime import _speedups
except ImportError:
    _speedups = None

_KERNELS = {"python": _kernel_py}
if _speedups is not None:
    _KERNELS["c"] = _speedups


def get_kernel(name=None):
    """Return a kernel module by backend name, or the default selection."""
    if name is None:
        if os.environ.get("POLYPRIME_PURE") or _speedups is None:
            return _kernel_py
        return _speedups
    try:
        return _KERNELS[name]
    except KeyError:
        raise ValueError(f"unknown kernel backend {name!r}; have {sorted(_KERNELS)}") from None


def available_backends():
    return tuple(sorted(_KERNELS))


def backend_name():
    return get_kernel().BACKEND
