# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled path-consistency kernel; same contract as ``_pykernels``."""
from libc.stdlib cimport free, malloc

BACKEND = "cython"


def path_consistency(unsigned char[::1] cells, Py_ssize_t n, const unsigned char[::1] table,
                     const unsigned char[::1] conv):
    cdef Py_ssize_t i, j, k, a, b, ik, kj, head = 0, tail = 0, cap = n * n + 1
    cdef unsigned char t, cij
    cdef int ok = 1
    for i in range(n):
        cells[i * n + i] &= 0x80
        if cells[i * n + i] == 0:
            return False
    if n < 2:
        return True
    cdef Py_ssize_t *queue = <Py_ssize_t *> malloc(cap * sizeof(Py_ssize_t))
    cdef unsigned char *queued = <unsigned char *> malloc(n * n)
    if queue == NULL or queued == NULL:
        free(queue)
        free(queued)
        raise MemoryError()
    try:
        for i in range(n * n):
            queued[i] = 0
        for i in range(n):
            for j in range(i + 1, n):
                queue[tail] = i * n + j
                tail = (tail + 1) % cap
                queued[i * n + j] = 1
        while head != tail:
            i = queue[head] // n
            j = queue[head] % n
            head = (head + 1) % cap
            queued[i * n + j] = 0
            cij = cells[i * n + j]
            for k in range(n):
                if k == i or k == j:
                    continue
                ik = i * n + k
                t = cells[ik] & table[(cij << 8) | cells[j * n + k]]
                if t != cells[ik]:
                    if t == 0:
                        ok = 0
                        break
                    cells[ik] = t
                    cells[k * n + i] = conv[t]
                    if i < k:
                        a = i; b = k
                    else:
                        a = k; b = i
                    if not queued[a * n + b]:
                        queued[a * n + b] = 1
                        queue[tail] = a * n + b
                        tail = (tail + 1) % cap
                kj = k * n + j
                t = cells[kj] & table[(cells[k * n + i] << 8) | cij]
                if t != cells[kj]:
                    if t == 0:
                        ok = 0
                        break
                    cells[kj] = t
                    cells[j * n + k] = conv[t]
                    if k < j:
                        a = k; b = j
                    else:
                        a = j; b = k
                    if not queued[a * n + b]:
                        queued[a * n + b] = 1
                        queue[tail] = a * n + b
                        tail = (tail + 1) % cap
            if not ok:
                break
    finally:
        free(queue)
        free(queued)
    return bool(ok)
