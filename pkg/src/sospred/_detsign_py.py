"""Pure-Python twin of the compiled determinant-sign kernel.

Same interface as ``sospred._detsign``; Python integers never overflow, so
there are no magnitude limits here.
"""

BACKEND = "pure"

MU_LIMITS: dict[int, int] = {}


def _det3(a, b, c, d, e, f, g, h, i):
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def det_sign(flat):
    """Sign of det for a flattened k*k matrix, k in {2, 3, 4}."""
    n = len(flat)
    if n == 4:
        d = flat[0] * flat[3] - flat[1] * flat[2]
    elif n == 9:
        d = _det3(*flat)
    elif n == 16:
        (m0, m1, m2, m3, m4, m5, m6, m7,
         m8, m9, m10, m11, m12, m13, m14, m15) = flat
        d = (m0 * _det3(m5, m6, m7, m9, m10, m11, m13, m14, m15)
             - m1 * _det3(m4, m6, m7, m8, m10, m11, m12, m14, m15)
             + m2 * _det3(m4, m5, m7, m8, m9, m11, m12, m13, m15)
             - m3 * _det3(m4, m5, m6, m8, m9, m10, m12, m13, m14))
    else:
        raise ValueError("det_sign handles 2x2, 3x3 and 4x4 matrices only")
    return (d > 0) - (d < 0)
