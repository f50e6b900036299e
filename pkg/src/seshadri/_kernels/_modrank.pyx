# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Prime-field row reduction, compiled path.

Same contract as ``pyref.modrank``: rank over GF(prime) of an integer
matrix given row-wise.  Products are taken through 128-bit intermediates,
so any prime below 2^63 is safe.
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"


cdef inline u64 mulmod(u64 a, u64 b, u64 p) nogil:
    return <u64>((<u128>a * b) % p)


cdef u64 powmod(u64 a, u64 e, u64 p) nogil:
    cdef u64 r = 1
    a = a % p
    while e:
        if e & 1:
            r = mulmod(r, a, p)
        a = mulmod(a, a, p)
        e >>= 1
    return r


def modrank(rows, prime):
    if prime < 2:
        raise ValueError("prime must be at least 2")
    if prime >= (1 << 63):
        raise ValueError("prime too large for the compiled kernel")
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return 0
    cdef Py_ssize_t ncols = len(rows[0])
    if ncols == 0:
        return 0
    cdef u64 p = prime
    cdef u64 *m = <u64 *>malloc(nrows * ncols * sizeof(u64))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, r, col, rank, pivot
    cdef u64 f, inv, sub
    try:
        for i in range(nrows):
            row = rows[i]
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            for j in range(ncols):
                m[i * ncols + j] = row[j] % prime
        rank = 0
        for col in range(ncols):
            pivot = -1
            for r in range(rank, nrows):
                if m[r * ncols + col]:
                    pivot = r
                    break
            if pivot < 0:
                continue
            if pivot != rank:
                for j in range(col, ncols):
                    f = m[rank * ncols + j]
                    m[rank * ncols + j] = m[pivot * ncols + j]
                    m[pivot * ncols + j] = f
            inv = powmod(m[rank * ncols + col], p - 2, p)
            for r in range(rank + 1, nrows):
                f = m[r * ncols + col]
                if f == 0:
                    continue
                f = mulmod(f, inv, p)
                for j in range(col, ncols):
                    sub = mulmod(f, m[rank * ncols + j], p)
                    m[r * ncols + j] = (m[r * ncols + j] + p - sub) % p
            rank += 1
            if rank == nrows:
                break
        return rank
    finally:
        free(m)
