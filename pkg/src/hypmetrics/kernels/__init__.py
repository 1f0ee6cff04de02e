"""Hot numerical kernels with a compiled core and a pure-python fallback.

The compiled extension is optional; if it failed to build (no compiler, no
Cython) the numpy implementation is used instead.  ``BACKEND`` reports which
one was picked at import time.
"""

try:
    from hypmetrics.kernels._fast import BACKEND, circle_min_product
except ImportError:  # pragma: no cover - depends on build environment
    from hypmetrics.kernels._ref import BACKEND, circle_min_product

__all__ = ["BACKEND", "circle_min_product"]
