"""Backend selection for the series product kernel.

The compiled extension is used when it imports; setting the environment
variable ``PARTKIT_PURE_PYTHON=1`` forces the pure-Python fallback.
"""
import os

from . import _kernel_py

BACKEND = "python"
apply_factors = _kernel_py.apply_factors

if not os.environ.get("PARTKIT_PURE_PYTHON"):
    try:
        from ._kernel import apply_factors  # noqa: F811
    except ImportError:
        pass
    else:
        BACKEND = "compiled"

__all__ = ["BACKEND", "apply_factors"]
