"""Dumont differential system toolkit.

Thin wrapper over the C++ core: grammar derivatives, coefficient triangles,
permutation statistics, Jacobi elliptic series and the identity verifier.
"""

from ._core import expand, series, stats, triangle, verify, verify_ids

__all__ = ["expand", "series", "stats", "triangle", "verify", "verify_ids"]
__version__ = "1.0.0"
