# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels; see twep._kernels_py for the reference semantics.

Packed words are limited to 64 registers, far above the enumeration caps
that gate the callers (n <= 12 for weight scans, n <= 10 for splitter
scans).
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64


cdef u64* _to_array(list values) except NULL:
    cdef Py_ssize_t k = len(values)
    cdef u64* out = <u64*> malloc(sizeof(u64) * (k if k else 1))
    if out is NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(k):
        out[i] = <u64> values[i]
    return out


def min_weight_excluding_span(list span_x, list span_z, list comp_x, list comp_z):
    cdef int nc = len(comp_x)
    cdef int ns = len(span_x)
    if nc == 0:
        raise ValueError("complement basis is empty: nothing outside the span")
    if nc + ns > 62:
        raise ValueError("basis too large for the compiled kernel")
    cdef u64* bx = _to_array(comp_x)
    cdef u64* bz = _to_array(comp_z)
    cdef u64* sx = _to_array(span_x)
    cdef u64* sz = _to_array(span_z)
    cdef u64 cx = 0, cz = 0, vx, vz, idx, inner
    cdef u64 n_outer = (<u64> 1) << nc
    cdef u64 n_inner = (<u64> 1) << ns
    cdef int best = 1 << 30
    cdef int w, j
    try:
        with nogil:
            for idx in range(1, n_outer):
                j = __builtin_ctzll(idx)
                cx ^= bx[j]
                cz ^= bz[j]
                vx = cx
                vz = cz
                w = __builtin_popcountll(vx | vz)
                if w < best:
                    best = w
                for inner in range(1, n_inner):
                    j = __builtin_ctzll(inner)
                    vx ^= sx[j]
                    vz ^= sz[j]
                    w = __builtin_popcountll(vx | vz)
                    if w < best:
                        best = w
    finally:
        free(bx)
        free(bz)
        free(sx)
        free(sz)
    return best


cdef inline u64 _interleave_key(u64 x, u64 z, int n) nogil:
    cdef u64 key = 0
    cdef int i
    for i in range(n - 1, -1, -1):
        key = (key << 2) | (((x >> i) & 1) | (((z >> i) & 1) << 1))
    return key


def best_splitter(list span_x, list span_z, list comp_x, list comp_z,
                  list err_x, list err_z, int n):
    cdef int nc = len(comp_x)
    cdef int ns = len(span_x)
    cdef Py_ssize_t ne = len(err_x)
    if nc == 0:
        raise ValueError("complement basis is empty: nothing outside the span")
    if nc + ns > 62 or n > 31:
        raise ValueError("instance too large for the compiled kernel")
    cdef u64* bx = _to_array(comp_x)
    cdef u64* bz = _to_array(comp_z)
    cdef u64* sx = _to_array(span_x)
    cdef u64* sz = _to_array(span_z)
    cdef u64* ex = _to_array(err_x)
    cdef u64* ez = _to_array(err_z)
    cdef u64 cx = 0, cz = 0, vx, vz, idx, inner, key
    cdef u64 n_outer = (<u64> 1) << nc
    cdef u64 n_inner = (<u64> 1) << ns
    cdef Py_ssize_t anti, e
    cdef Py_ssize_t best_m = ne + 1
    cdef bint have_key = False
    cdef u64 best_key = 0, best_x = 0, best_z = 0
    cdef int j
    try:
        with nogil:
            for idx in range(1, n_outer):
                j = __builtin_ctzll(idx)
                cx ^= bx[j]
                cz ^= bz[j]
                anti = 0
                for e in range(ne):
                    anti += __builtin_popcountll((cx & ez[e]) ^ (cz & ex[e])) & 1
                if anti < ne - anti:
                    anti = ne - anti
                if anti > best_m:
                    continue
                if anti < best_m:
                    best_m = anti
                    have_key = False
                vx = cx
                vz = cz
                key = _interleave_key(vx, vz, n)
                if not have_key or key < best_key:
                    have_key = True
                    best_key = key
                    best_x = vx
                    best_z = vz
                for inner in range(1, n_inner):
                    j = __builtin_ctzll(inner)
                    vx ^= sx[j]
                    vz ^= sz[j]
                    key = _interleave_key(vx, vz, n)
                    if key < best_key:
                        best_key = key
                        best_x = vx
                        best_z = vz
        anti = 0
        for e in range(ne):
            anti += __builtin_popcountll((best_x & ez[e]) ^ (best_z & ex[e])) & 1
    finally:
        free(bx)
        free(bz)
        free(sx)
        free(sz)
        free(ex)
        free(ez)
    return int(best_x), int(best_z), int(ne - anti), int(anti)
