# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled word kernels; same API as ``handlenum._kernel_py``."""

from libc.stdlib cimport malloc, free


cdef inline int _bit(int a) nogil:
    if a < 0:
        return 2 * (-a - 1) + 1
    return 2 * (a - 1)


def letter_bit(int letter):
    return _bit(letter)


cdef int _push(int* out, int n, int b) nogil:
    if n > 0 and out[n - 1] == -b:
        return n - 1
    out[n] = b
    return n + 1


cdef int _image(int* src, int m, int a, long long mask, int* out) nogil:
    cdef int n = 0, k, y, pre, post
    for k in range(m):
        y = src[k]
        if y == a or y == -a:
            n = _push(out, n, y)
            continue
        pre = (mask >> _bit(-y)) & 1
        post = (mask >> _bit(y)) & 1
        if pre:
            n = _push(out, n, -a)
        n = _push(out, n, y)
        if post:
            n = _push(out, n, a)
    return n


cdef int _cyclic_len(int* w, int n) nogil:
    cdef int i = 0, j = n
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return j - i


cdef int* _load(object letters, int* m):
    cdef int n = len(letters), k
    cdef int* buf = <int*> malloc((n + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    k = 0
    for a in letters:
        buf[k] = a
        k += 1
    m[0] = n
    return buf


def free_reduce(letters):
    cdef int m, n = 0, k
    cdef int* src = _load(letters, &m)
    cdef int* out = <int*> malloc((m + 1) * sizeof(int))
    try:
        for k in range(m):
            n = _push(out, n, src[k])
        return [out[k] for k in range(n)]
    finally:
        free(src)
        free(out)


def cyclic_bounds(letters):
    cdef int m, i = 0, j
    cdef int* w = _load(letters, &m)
    try:
        j = m
        while j - i >= 2 and w[i] == -w[j - 1]:
            i += 1
            j -= 1
        return i, j
    finally:
        free(w)


def whitehead_image(letters, int multiplier, long long mask):
    cdef int m, n, k
    cdef int* src = _load(letters, &m)
    cdef int* out = <int*> malloc((3 * m + 1) * sizeof(int))
    try:
        n = _image(src, m, multiplier, mask, out)
        return [out[k] for k in range(n)]
    finally:
        free(src)
        free(out)


def cyclic_image_length(letters, int multiplier, long long mask):
    cdef int m, n
    cdef int* src = _load(letters, &m)
    cdef int* out = <int*> malloc((3 * m + 1) * sizeof(int))
    try:
        n = _image(src, m, multiplier, mask, out)
        return _cyclic_len(out, n)
    finally:
        free(src)
        free(out)


def total_cyclic_image_length(words, int multiplier, long long mask):
    cdef int m, n
    cdef long total = 0
    cdef int* src
    cdef int* out
    for w in words:
        src = _load(w, &m)
        out = <int*> malloc((3 * m + 1) * sizeof(int))
        n = _image(src, m, multiplier, mask, out)
        total += _cyclic_len(out, n)
        free(src)
        free(out)
    return total


def total_image_length(words, int multiplier, long long mask):
    cdef int m
    cdef long total = 0
    cdef int* src
    cdef int* out
    for w in words:
        src = _load(w, &m)
        out = <int*> malloc((3 * m + 1) * sizeof(int))
        total += _image(src, m, multiplier, mask, out)
        free(src)
        free(out)
    return total


def least_rotation(letters):
    cdef int n, s, k, best = 0, u, v
    cdef int* w = _load(letters, &n)
    try:
        if n == 0:
            return []
        for s in range(1, n):
            for k in range(n):
                u = _bit(w[(s + k) % n])
                v = _bit(w[(best + k) % n])
                if u != v:
                    if u < v:
                        best = s
                    break
        return [w[(best + k) % n] for k in range(n)]
    finally:
        free(w)
