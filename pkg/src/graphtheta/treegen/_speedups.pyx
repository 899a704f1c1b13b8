# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled free-tree enumeration kernel.

Mirrors the API of ``graphtheta.treegen._pure`` (same sequences, same
order); only the inner successor/validity loops and the per-tree index
sums are moved to C.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free
from libc.math cimport sqrt
from libc.string cimport memcpy

BACKEND = "cython"


cdef class _SequenceIterator:
    cdef int n
    cdef int *seq
    cdef int *nxt
    cdef bint done

    def __cinit__(self, int n):
        self.n = n
        self.seq = <int *> PyMem_Malloc(n * sizeof(int))
        self.nxt = <int *> PyMem_Malloc(n * sizeof(int))
        if self.seq == NULL or self.nxt == NULL:
            raise MemoryError()
        self.done = False
        # path rooted at its center
        cdef int i, h = n // 2
        for i in range(h + 1):
            self.seq[i] = i
        for i in range(1, (n + 1) // 2):
            self.seq[h + i] = i

    def __dealloc__(self):
        PyMem_Free(self.seq)
        PyMem_Free(self.nxt)

    cdef int _split_point(self) nogil:
        # index of the second depth-1 vertex, or n
        cdef int i
        for i in range(2, self.n):
            if self.seq[i] == 1:
                return i
        return self.n

    cdef bint _rooted_successor(self, int p) nogil:
        # p < 0 means locate the rightmost non-trivial position
        cdef int i, q
        if p < 0:
            p = self.n - 1
            while self.seq[p] == 1:
                p -= 1
        if p == 0:
            return False
        q = p - 1
        while self.seq[q] != self.seq[p] - 1:
            q -= 1
        memcpy(self.nxt, self.seq, self.n * sizeof(int))
        for i in range(p, self.n):
            self.nxt[i] = self.nxt[i - p + q]
        memcpy(self.seq, self.nxt, self.n * sizeof(int))
        return True

    cdef bint _advance_to_free(self) nogil:
        # advance self.seq to the nearest centroid-rooted sequence
        cdef int m, i, fh, rh, flen, rlen, jump_level, h, cmp
        while True:
            m = self._split_point()
            flen = m - 1
            rlen = self.n - m + 1
            fh = 0
            for i in range(1, m):
                if self.seq[i] - 1 > fh:
                    fh = self.seq[i] - 1
            rh = 0
            for i in range(m, self.n):
                if self.seq[i] > rh:
                    rh = self.seq[i]
            if fh < rh:
                return True
            if fh == rh:
                if flen < rlen:
                    return True
                if flen == rlen:
                    # lexicographic: first subtree vs remainder
                    cmp = 0
                    # first elements: seq[1..m-1]-1 ; rest: 0, seq[m..n-1]
                    if flen > 0:
                        if self.seq[1] - 1 != 0:
                            cmp = 1 if self.seq[1] - 1 > 0 else -1
                        i = 1
                        while cmp == 0 and i < flen:
                            if self.seq[1 + i] - 1 != self.seq[m + i - 1]:
                                cmp = 1 if self.seq[1 + i] - 1 > self.seq[m + i - 1] else -1
                            i += 1
                    if cmp <= 0:
                        return True
            # not free-canonical: jump
            jump_level = self.seq[flen]
            if not self._rooted_successor(flen):
                return False
            if jump_level > 2:
                m = self._split_point()
                h = 0
                for i in range(1, m):
                    if self.seq[i] - 1 > h:
                        h = self.seq[i] - 1
                for i in range(h + 1):
                    self.seq[self.n - h - 1 + i] = i + 1

    def __iter__(self):
        return self

    def __next__(self):
        if self.done:
            raise StopIteration
        if not self._advance_to_free():
            self.done = True
            raise StopIteration
        cdef int i
        result = tuple([self.seq[i] for i in range(self.n)])
        if not self._rooted_successor(-1):
            self.done = True
        return result


def free_tree_sequences(int n):
    """Yield the canonical level sequence of every free tree of order n."""
    if n < 1:
        raise ValueError(f"tree order must be >= 1, got {n}")
    if n == 1:
        return iter([(0,)])
    if n == 2:
        return iter([(0, 1)])
    return _SequenceIterator(n)


cdef int _fill_degrees(object seq, int *deg, int *par) except -1:
    cdef int n = len(seq)
    cdef int i, d, top
    cdef int *depth = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int *stack = <int *> PyMem_Malloc(n * sizeof(int))
    if depth == NULL or stack == NULL:
        PyMem_Free(depth)
        PyMem_Free(stack)
        raise MemoryError()
    try:
        for i in range(n):
            depth[i] = seq[i]
            deg[i] = 0
        par[0] = -1
        stack[0] = 0
        top = 0
        for i in range(1, n):
            d = depth[i]
            while depth[stack[top]] >= d:
                top -= 1
            par[i] = stack[top]
            deg[i] += 1
            deg[stack[top]] += 1
            top += 1
            stack[top] = i
    finally:
        PyMem_Free(depth)
        PyMem_Free(stack)
    return 0


def degree_pairs(seq):
    """Degree pairs (d_child, d_parent) of all edges of the encoded tree."""
    cdef int n = len(seq)
    cdef int *deg = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int *par = <int *> PyMem_Malloc(n * sizeof(int))
    if deg == NULL or par == NULL:
        PyMem_Free(deg)
        PyMem_Free(par)
        raise MemoryError()
    try:
        _fill_degrees(seq, deg, par)
        return [(deg[i], deg[par[i]]) for i in range(1, n)]
    finally:
        PyMem_Free(deg)
        PyMem_Free(par)


def abc_abs_sums(seq):
    """Compensated (ABC, ABS) sums of the tree encoded by ``seq``.

    Neumaier-compensated accumulation; agrees with the pure backend's
    ``math.fsum`` to within one ulp.
    """
    cdef int n = len(seq)
    cdef int *deg = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int *par = <int *> PyMem_Malloc(n * sizeof(int))
    if deg == NULL or par == NULL:
        PyMem_Free(deg)
        PyMem_Free(par)
        raise MemoryError()
    cdef double abc = 0.0, abc_c = 0.0, ab = 0.0, ab_c = 0.0
    cdef double term, t, e
    cdef int i, a, b
    try:
        _fill_degrees(seq, deg, par)
        for i in range(1, n):
            a = deg[i]
            b = deg[par[i]]
            e = a + b - 2.0
            term = sqrt(e / (a * b))
            t = abc + term
            if abs(abc) >= abs(term):
                abc_c += (abc - t) + term
            else:
                abc_c += (term - t) + abc
            abc = t
            term = sqrt(e / (a + b))
            t = ab + term
            if abs(ab) >= abs(term):
                ab_c += (ab - t) + term
            else:
                ab_c += (term - t) + ab
            ab = t
        return (abc + abc_c, ab + ab_c)
    finally:
        PyMem_Free(deg)
        PyMem_Free(par)
