"""Kernel dispatch: compiled extension when available, pure Python otherwise.

Set the environment variable ``ARROWWEIGHT_PURE=1`` to force the pure
implementation (used by the benchmark and by parity tests).
"""

from __future__ import annotations

import os

from . import _kernels_pure

if os.environ.get("ARROWWEIGHT_PURE"):
    _impl = _kernels_pure
else:
    try:
        from . import _kernels_c as _impl
    except ImportError:
        _impl = _kernels_pure

IMPLEMENTATION = _impl.IMPLEMENTATION
enumerate_colorings_kernel = _impl.enumerate_colorings_kernel
verify_weight_kernel = _impl.verify_weight_kernel
