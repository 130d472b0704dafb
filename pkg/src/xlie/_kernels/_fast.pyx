# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p matrix kernels.

Same contract as the pure module: entries in [0, p) with p prime and
p < 2**31, shapes nonempty.  Intermediate products fit in int64.
"""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"


cdef long long _inv_mod(long long a, long long p):
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def rref_mod(rows, long long p):
    """Reduced row echelon form over F_p.  Returns (new rows, pivot columns)."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(rows[0])
    cdef Py_ssize_t i, j, c, r, pivot
    cdef long long inv, f, v
    cdef long long *buf = <long long *> malloc(nrows * ncols * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                buf[i * ncols + j] = row[j]
        pivots = []
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            pivot = -1
            for i in range(r, nrows):
                if buf[i * ncols + c] % p:
                    pivot = i
                    break
            if pivot < 0:
                continue
            if pivot != r:
                for j in range(ncols):
                    v = buf[r * ncols + j]
                    buf[r * ncols + j] = buf[pivot * ncols + j]
                    buf[pivot * ncols + j] = v
            inv = _inv_mod(buf[r * ncols + c], p)
            for j in range(ncols):
                buf[r * ncols + j] = (buf[r * ncols + j] * inv) % p
            for i in range(nrows):
                if i != r:
                    f = buf[i * ncols + c]
                    if f:
                        for j in range(c, ncols):
                            v = (buf[i * ncols + j] - f * buf[r * ncols + j]) % p
                            if v < 0:
                                v += p
                            buf[i * ncols + j] = v
            pivots.append(c)
            r += 1
        out = [[buf[i * ncols + j] for j in range(ncols)] for i in range(nrows)]
        return out, pivots
    finally:
        free(buf)


def matmul_mod(a, b, long long p):
    """Product of an (m x k) and a (k x n) matrix over F_p."""
    cdef Py_ssize_t m = len(a)
    cdef Py_ssize_t k = len(b)
    cdef Py_ssize_t n = len(b[0])
    cdef Py_ssize_t i, j, t
    cdef long long x
    cdef long long *bb = <long long *> malloc(k * n * sizeof(long long))
    cdef long long *acc = <long long *> malloc(n * sizeof(long long))
    if bb == NULL or acc == NULL:
        free(bb)
        free(acc)
        raise MemoryError()
    try:
        for i in range(k):
            row = b[i]
            for j in range(n):
                bb[i * n + j] = row[j]
        out = []
        for i in range(m):
            arow = a[i]
            for j in range(n):
                acc[j] = 0
            for t in range(k):
                x = arow[t]
                if x:
                    for j in range(n):
                        acc[j] = (acc[j] + x * bb[t * n + j]) % p
            out.append([acc[j] for j in range(n)])
        return out
    finally:
        free(bb)
        free(acc)
