# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled subset-XOR strata kernel; same contract as ``_purecore.strata``."""

from libc.stdlib cimport malloc, free

from .errors import BudgetExceededError

ctypedef unsigned long long u64


cdef struct Ctx:
    int n
    int max_dim
    int parity
    u64 wmask
    long long budget
    long long visited
    u64 *cols
    int *dims
    int *best


cdef inline u64 _canon(u64 m, u64 w):
    cdef u64 f
    if w == 0:
        return m
    f = m ^ w
    return f if f < m else m


cdef int _walk(Ctx *c, int start, u64 x, int d) except -1:
    cdef int j, nd
    cdef u64 k
    c.visited += 1
    if c.visited > c.budget:
        raise BudgetExceededError(
            f"more than {c.budget} candidate parameters (max_dim={c.max_dim})")
    if d % 2 == c.parity:
        k = _canon(x, c.wmask)
        if c.best[k] > d:
            c.best[k] = d
    for j in range(start, c.n):
        nd = d + c.dims[j]
        if nd > c.max_dim:
            break
        _walk(c, j + 1, x ^ c.cols[j], nd)
    return 0


cdef int _collect(Ctx *c, int start, u64 x, int d, u64 s, list hits) except -1:
    cdef int j, nd
    cdef u64 k
    if d % 2 == c.parity:
        k = _canon(x, c.wmask)
        if c.best[k] == d:
            hits.append((k, s))
    for j in range(start, c.n):
        nd = d + c.dims[j]
        if nd > c.max_dim:
            break
        _collect(c, j + 1, x ^ c.cols[j], nd, s | ((<u64>1) << j), hits)
    return 0


def strata(cols, dims, int max_dim, int parity, wmask, int nbits, long long budget):
    cdef Ctx c
    cdef Py_ssize_t i, size
    cdef list hits = []
    if len(cols) > 64 or nbits > 26:
        raise ValueError("compiled kernel handles at most 64 columns and 26 bits")
    size = (<Py_ssize_t>1) << nbits
    c.n = len(cols)
    c.max_dim = max_dim
    c.parity = parity
    c.wmask = wmask
    c.budget = budget
    c.visited = 0
    c.cols = <u64 *> malloc(max(c.n, 1) * sizeof(u64))
    c.dims = <int *> malloc(max(c.n, 1) * sizeof(int))
    c.best = <int *> malloc(size * sizeof(int))
    if not c.cols or not c.dims or not c.best:
        free(c.cols); free(c.dims); free(c.best)
        raise MemoryError()
    try:
        for i in range(c.n):
            c.cols[i] = cols[i]
            c.dims[i] = dims[i]
        for i in range(size):
            c.best[i] = max_dim + 1
        _walk(&c, 0, 0, 0)
        _collect(&c, 0, 0, 0, 0, hits)
        best = {}
        for i in range(size):
            if c.best[i] <= max_dim:
                best[i] = c.best[i]
    finally:
        free(c.cols); free(c.dims); free(c.best)
    hits.sort()
    return best, hits
