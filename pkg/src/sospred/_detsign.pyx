# cython: language_level=3, boundscheck=False, wraparound=False
"""Fixed-width determinant-sign kernel for 2x2 .. 4x4 integer matrices.

All arithmetic runs in 128-bit integers.  Entry magnitudes are pre-checked
against per-size limits that make the widest intermediate provably fit;
inputs outside the limits raise OverflowError and the caller falls back to
arbitrary precision.
"""

cdef extern from *:
    ctypedef long long i128 "__int128"

# Largest |entry| for which every intermediate of the expansion below is
# guaranteed to fit __int128.
cdef long long _MU2 = 1ll << 62
cdef long long _MU3 = 1ll << 41
cdef long long _MU4 = 1ll << 30

BACKEND = "native"

MU_LIMITS = {2: int(_MU2), 3: int(_MU3), 4: int(_MU4)}


cdef inline int _sgn(i128 x) noexcept:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


cdef inline i128 _det3(long long a, long long b, long long c,
                       long long d, long long e, long long f,
                       long long g, long long h, long long i) noexcept:
    return (<i128> a) * ((<i128> e) * i - (<i128> f) * h) \
         - (<i128> b) * ((<i128> d) * i - (<i128> f) * g) \
         + (<i128> c) * ((<i128> d) * h - (<i128> e) * g)


def det_sign(flat):
    """Sign of det for a flattened k*k matrix, k in {2, 3, 4}.

    Raises OverflowError when an entry exceeds the fixed-width limit for
    that size (or does not fit 64 bits at all).
    """
    cdef Py_ssize_t n = len(flat)
    cdef long long m[16]
    cdef long long mu = 0, v
    cdef Py_ssize_t idx
    cdef i128 d

    for idx in range(n):
        v = flat[idx]          # raises OverflowError beyond 64 bits
        m[idx] = v
        if v < 0:
            if v == <long long> (-9223372036854775807ll - 1):
                raise OverflowError("entry magnitude does not fit")
            v = -v
        if v > mu:
            mu = v

    if n == 4:
        if mu > _MU2:
            raise OverflowError("entries exceed 2x2 fixed-width limit")
        d = (<i128> m[0]) * m[3] - (<i128> m[1]) * m[2]
        return _sgn(d)
    if n == 9:
        if mu > _MU3:
            raise OverflowError("entries exceed 3x3 fixed-width limit")
        return _sgn(_det3(m[0], m[1], m[2], m[3], m[4], m[5], m[6], m[7], m[8]))
    if n == 16:
        if mu > _MU4:
            raise OverflowError("entries exceed 4x4 fixed-width limit")
        d = (<i128> m[0]) * _det3(m[5], m[6], m[7], m[9], m[10], m[11], m[13], m[14], m[15]) \
          - (<i128> m[1]) * _det3(m[4], m[6], m[7], m[8], m[10], m[11], m[12], m[14], m[15]) \
          + (<i128> m[2]) * _det3(m[4], m[5], m[7], m[8], m[9], m[11], m[12], m[13], m[15]) \
          - (<i128> m[3]) * _det3(m[4], m[5], m[6], m[8], m[9], m[10], m[12], m[13], m[14])
        return _sgn(d)
    raise ValueError("det_sign handles 2x2, 3x3 and 4x4 matrices only")
