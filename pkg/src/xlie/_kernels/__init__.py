"""Mod-p matrix kernels with a compiled fast path.

Importing this package picks the compiled extension when it is available
and falls back to the pure-Python implementation otherwise.  Set
XLIE_PURE_KERNELS=1 to force the fallback (useful for benchmarks and for
debugging the kernels themselves).
"""

import os

if os.environ.get("XLIE_PURE_KERNELS") == "1":
    from xlie._kernels.pure import BACKEND, matmul_mod, rref_mod
else:
    try:
        from xlie._kernels._fast import BACKEND, matmul_mod, rref_mod
    except ImportError:
        from xlie._kernels.pure import BACKEND, matmul_mod, rref_mod

__all__ = ["BACKEND", "matmul_mod", "rref_mod"]
