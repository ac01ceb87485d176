"""Kernel selection: compiled extension when available, pure Python otherwise.

Set FFHYPER_KERNEL=python to force the fallback (used by the benchmark and by
tests that compare the two backends).
"""

import os

from . import _pykernel

if os.environ.get("FFHYPER_KERNEL", "").lower() == "python":
    _impl = _pykernel
else:
    try:
        from . import _ckernel as _impl
    except ImportError:
        _impl = _pykernel

BACKEND = _impl.BACKEND
polymul = _impl.polymul
poly_reduce = _impl.poly_reduce
polymul_reduce = _impl.polymul_reduce
