"""Exact integer determinants and their signs for small dense matrices.

Matrices are plain sequences of equal-length integer rows.  The empty (0x0)
matrix has determinant 1.  Signs are always exact: the fast fixed-width
kernel is only used when a magnitude pre-check guarantees no overflow,
otherwise everything runs in Python's arbitrary-precision integers.

The kernel backend is chosen at import: the compiled extension when it built,
the pure-Python twin otherwise.  ``SOSPRED_PURE=1`` in the environment forces
the pure backend; ``select_backend`` switches at runtime (used by the
benchmark and the performance tests).
"""

import math
import os

from . import _detsign_py

try:
    from . import _detsign as _native
except ImportError:
    _native = None

_kernel = _detsign_py if (os.environ.get("SOSPRED_PURE") or _native is None) else _native


def select_backend(name: str) -> None:
    """Switch the sign kernel: 'native', 'pure', or 'auto'."""
    global _kernel
    if name == "pure":
        _kernel = _detsign_py
    elif name == "native":
        if _native is None:
            raise RuntimeError("compiled kernel not available")
        _kernel = _native
    elif name == "auto":
        _kernel = _native if _native is not None else _detsign_py
    else:
        raise ValueError(f"unknown backend {name!r}")


def backend_name() -> str:
    return _kernel.BACKEND


def native_available() -> bool:
    return _native is not None


def _det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _det3(m):
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _det_bareiss(m):
    # Fraction-free elimination: every division below is exact and all
    # intermediates are minors of the input, so they stay small.
    k = len(m)
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for i in range(k - 1):
        if a[i][i] == 0:
            for j in range(i + 1, k):
                if a[j][i] != 0:
                    a[i], a[j] = a[j], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for j in range(i + 1, k):
            for c in range(i + 1, k):
                a[j][c] = (a[j][c] * a[i][i] - a[j][i] * a[i][c]) // prev
            a[j][i] = 0
        prev = a[i][i]
    return sign * a[k - 1][k - 1]


def determinant_exact(m) -> int:
    """Exact determinant of a square integer matrix (0x0 -> 1)."""
    k = len(m)
    if any(len(row) != k for row in m):
        raise ValueError("matrix must be square")
    if k == 0:
        return 1
    if k == 1:
        return m[0][0]
    if k == 2:
        return _det2(m)
    if k == 3:
        return _det3(m)
    return _det_bareiss(m)


def sign_of_determinant(m) -> int:
    """Exact sign (-1, 0, +1) of the determinant of a square integer matrix."""
    k = len(m)
    if k == 0:
        return 1
    if k == 1:
        v = m[0][0]
        return (v > 0) - (v < 0)
    if k <= 4:
        flat = [e for row in m for e in row]
        if len(flat) != k * k:
            raise ValueError("matrix must be square")
        try:
            return _kernel.det_sign(flat)
        except OverflowError:
            pass
    d = determinant_exact(m)
    return (d > 0) - (d < 0)


def hadamard_bound(mu: int, size: int) -> int:
    """Integer upper bound on |det| for a size x size matrix, |entry| <= mu.

    Returns ceil(mu**size * size**(size/2)).
    """
    if mu < 0:
        raise ValueError("mu must be nonnegative")
    if size < 1:
        raise ValueError("size must be at least 1")
    root = math.isqrt(size**size)
    if root * root < size**size:
        root += 1
    return mu**size * root
