# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for the binomial Groebner engine.

Mirrors ``_kernel_py`` exactly: same classes, same scan order, same
results. Exponent vectors cross the boundary as Python tuples; the basis
is stored in flat C arrays so the rewrite loop runs without touching the
interpreter.
"""

from cpython.tuple cimport PyTuple_GET_ITEM, PyTuple_GET_SIZE
from libc.stdlib cimport free, malloc, realloc

BACKEND = "c"


cdef inline int _fill(long long* dst, tuple src, Py_ssize_t n) except -1:
    cdef Py_ssize_t i
    if PyTuple_GET_SIZE(src) != n:
        raise ValueError("exponent tuple has wrong length")
    for i in range(n):
        dst[i] = <long long> <object> PyTuple_GET_ITEM(src, i)
    return 0


cdef class Order:
    cdef long long* w
    cdef readonly Py_ssize_t nrows
    cdef readonly Py_ssize_t nvars

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        cdef Py_ssize_t nrows = len(rows)
        cdef Py_ssize_t nvars = len(rows[0]) if nrows else 0
        cdef Py_ssize_t r, i
        self.nrows = nrows
        self.nvars = nvars
        self.w = <long long*> malloc(nrows * nvars * sizeof(long long))
        if self.w == NULL and nrows * nvars:
            raise MemoryError()
        for r in range(nrows):
            row = rows[r]
            if len(row) != nvars:
                free(self.w)
                self.w = NULL
                raise ValueError("ragged weight matrix")
            for i in range(nvars):
                self.w[r * nvars + i] = row[i]

    def __dealloc__(self):
        if self.w != NULL:
            free(self.w)


def compare(Order order, tuple a, tuple b):
    """Three-way compare of exponent tuples under the weight-matrix order."""
    cdef Py_ssize_t n = order.nvars
    cdef Py_ssize_t r, i
    cdef long long s, wv
    cdef long long* diff
    if PyTuple_GET_SIZE(a) != n or PyTuple_GET_SIZE(b) != n:
        raise ValueError("exponent tuple has wrong length")
    if a == b:
        return 0
    diff = <long long*> malloc(n * sizeof(long long))
    if diff == NULL and n:
        raise MemoryError()
    try:
        for i in range(n):
            diff[i] = (<long long> <object> PyTuple_GET_ITEM(a, i)) - (
                <long long> <object> PyTuple_GET_ITEM(b, i))
        for r in range(order.nrows):
            s = 0
            for i in range(n):
                wv = order.w[r * n + i]
                if wv != 0 and diff[i] != 0:
                    s += wv * diff[i]
            if s > 0:
                return 1
            if s < 0:
                return -1
        return 0
    finally:
        free(diff)


cdef class Basis:
    cdef long long* leads
    cdef long long* tails
    cdef Py_ssize_t count
    cdef Py_ssize_t cap
    cdef readonly Py_ssize_t nvars

    def __init__(self, Py_ssize_t nvars):
        self.nvars = nvars
        self.count = 0
        self.cap = 16
        self.leads = <long long*> malloc(self.cap * nvars * sizeof(long long))
        self.tails = <long long*> malloc(self.cap * nvars * sizeof(long long))
        if (self.leads == NULL or self.tails == NULL) and nvars:
            raise MemoryError()

    def __dealloc__(self):
        if self.leads != NULL:
            free(self.leads)
        if self.tails != NULL:
            free(self.tails)

    def __len__(self):
        return self.count

    def append(self, tuple lead, tuple tail):
        cdef Py_ssize_t n = self.nvars
        cdef long long* nl
        cdef long long* nt
        if self.count == self.cap:
            self.cap *= 2
            nl = <long long*> realloc(self.leads, self.cap * n * sizeof(long long))
            nt = <long long*> realloc(self.tails, self.cap * n * sizeof(long long))
            if nl == NULL or nt == NULL:
                raise MemoryError()
            self.leads = nl
            self.tails = nt
        _fill(self.leads + self.count * n, lead, n)
        _fill(self.tails + self.count * n, tail, n)
        self.count += 1

    def normal_form(self, tuple mono, long long budget):
        """Fully rewrite ``mono``; returns None if ``budget`` steps were not enough."""
        cdef Py_ssize_t n = self.nvars
        cdef Py_ssize_t i, k
        cdef long long steps = 0
        cdef bint changed = True, ok
        cdef long long* m
        cdef long long* row
        m = <long long*> malloc(n * sizeof(long long))
        if m == NULL and n:
            raise MemoryError()
        try:
            _fill(m, mono, n)
            while changed:
                changed = False
                for i in range(self.count):
                    row = self.leads + i * n
                    ok = True
                    for k in range(n):
                        if row[k] > m[k]:
                            ok = False
                            break
                    if ok:
                        if steps >= budget:
                            return None
                        steps += 1
                        for k in range(n):
                            m[k] += self.tails[i * n + k] - row[k]
                        changed = True
                        break
            return tuple([m[k] for k in range(n)])
        finally:
            free(m)
