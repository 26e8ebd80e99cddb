"""Select the compiled kernel when available, else the pure-Python one.

Set ``SL2AFFINE_PURE=1`` to force the pure-Python implementation.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("SL2AFFINE_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        _impl = _compiled
        BACKEND = "cython"

Straightener = _impl.Straightener
Eliminator = _impl.Eliminator
base_relation = _impl.base_relation

BRACKET = _kernels_py.BRACKET
FORM = _kernels_py.FORM
add_into = _impl.add_into
prune = _impl.prune
