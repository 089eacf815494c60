"""Backend selection for the EA hot loop.

The compiled extension is used when it imports; setting ``EVO_MT_PURE=1``
forces the pure-Python kernels.
"""
import os

from . import _kernels as python_backend
from ._kernels import Lcg

compiled_backend = None
if os.environ.get("EVO_MT_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

backend = compiled_backend or python_backend
BACKEND = "compiled" if compiled_backend is not None else "python"

levenshtein = backend.levenshtein
evolve_core = backend.evolve_core

__all__ = ["BACKEND", "Lcg", "backend", "compiled_backend", "evolve_core",
           "levenshtein", "python_backend"]
