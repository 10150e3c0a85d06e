"""Kernel backend selection.

The compiled extension is used when it imports; set ``RAMSEYKERN_PURE=1`` to
force the pure-Python kernels.
"""

import os

from . import _pykernels

if os.environ.get("RAMSEYKERN_PURE", "") not in ("", "0"):
    kernels = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as kernels
        BACKEND = "cython"
    except ImportError:
        kernels = _pykernels
        BACKEND = "python"


def available_backends():
    """Name -> kernel module, for every backend importable here."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
        out["cython"] = _ckernels
    except ImportError:
        pass
    return out
