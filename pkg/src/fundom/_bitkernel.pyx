# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled binary-cube kernels; same contract as ``_bitkernel_py``."""

from array import array

from libc.stdlib cimport free, malloc


def orbit_reps(int n, gen_maps):
    """Orbit representative (minimum mask) for every mask in {0,1}^n."""
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef Py_ssize_t sp, start, m, t
    cdef int gi, b, base
    cdef long long* stack
    reps_arr = array("q", [-1]) * size
    cdef long long[::1] reps = reps_arr
    cdef int k = len(gen_maps)
    if k == 0:
        for start in range(size):
            reps[start] = start
        return reps_arr
    maps_arr = array("i", [p for gm in gen_maps for p in gm])
    cdef int[::1] maps = maps_arr
    stack = <long long*> malloc(size * sizeof(long long))
    if stack is NULL:
        raise MemoryError()
    try:
        for start in range(size):
            if reps[start] >= 0:
                continue
            reps[start] = start
            sp = 1
            stack[0] = start
            while sp:
                sp -= 1
                m = stack[sp]
                for gi in range(k):
                    base = gi * n
                    t = 0
                    for b in range(n):
                        if m & ((<Py_ssize_t>1) << b):
                            t |= (<Py_ssize_t>1) << maps[base + b]
                    if reps[t] < 0:
                        reps[t] = start
                        stack[sp] = t
                        sp += 1
    finally:
        free(stack)
    return reps_arr


def cone_members(int n, normals):
    """Byte per mask: 1 iff every normal has nonnegative dot with the mask.

    Coefficients must fit comfortably in int64; the dispatcher routes
    oversized normals to the pure backend.
    """
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    member = bytearray(b"\x01") * size
    cdef unsigned char[::1] mem = member
    cdef int h = n >> 1
    cdef Py_ssize_t lo_mask = ((<Py_ssize_t>1) << h) - 1
    cdef long long[::1] lo, hi
    cdef Py_ssize_t mask
    for normal in normals:
        lo_arr = _subset_sums(normal[:h])
        hi_arr = _subset_sums(normal[h:])
        lo = lo_arr
        hi = hi_arr
        for mask in range(size):
            if mem[mask] and lo[mask & lo_mask] + hi[mask >> h] < 0:
                mem[mask] = 0
    return member


def _subset_sums(coeffs):
    cdef int width = len(coeffs)
    table_arr = array("q", [0]) * ((<Py_ssize_t>1) << width)
    cdef long long[::1] table = table_arr
    cdef Py_ssize_t bit, m
    cdef long long c
    cdef int i
    for i in range(width):
        c = coeffs[i]
        bit = (<Py_ssize_t>1) << i
        for m in range(bit):
            table[bit | m] = table[m] + c
    return table_arr
