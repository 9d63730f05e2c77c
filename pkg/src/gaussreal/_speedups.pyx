# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Cython kernels; semantics identical to gaussreal._pure (see its docstring
for the dart and handedness conventions).  Inputs are small Python sequences
of ints, copied once into C arrays; the search loops run without touching
Python objects."""

from libc.stdlib cimport free, malloc


cdef inline void _fill_variant(const int *word, int m, int n, int start,
                               int step, int *relabel, int *out) nogil:
    cdef int k, idx, sym, fresh = 0
    for k in range(n):
        relabel[k] = -1
    for k in range(m):
        idx = (start + step * k) % m
        if idx < 0:
            idx += m
        sym = word[idx]
        if relabel[sym] < 0:
            relabel[sym] = fresh
            fresh += 1
        out[k] = relabel[sym]


def canonical_key(index_word):
    """Least first-occurrence relabelling over rotations and reflections."""
    cdef int m = len(index_word)
    if m == 0:
        return ()
    cdef int n = m // 2
    cdef int *word = <int *> malloc(m * sizeof(int))
    cdef int *best = <int *> malloc(m * sizeof(int))
    cdef int *cand = <int *> malloc(m * sizeof(int))
    cdef int *relabel = <int *> malloc(n * sizeof(int))
    if word is NULL or best is NULL or cand is NULL or relabel is NULL:
        free(word); free(best); free(cand); free(relabel)
        raise MemoryError()
    cdef int k, start, step, cmp_k, better
    try:
        for k in range(m):
            word[k] = index_word[k]
        _fill_variant(word, m, n, 0, 1, relabel, best)
        for start in range(m):
            for step in (1, -1):
                if start == 0 and step == 1:
                    continue
                _fill_variant(word, m, n, start, step, relabel, cand)
                better = 0
                for cmp_k in range(m):
                    if cand[cmp_k] != best[cmp_k]:
                        better = 1 if cand[cmp_k] < best[cmp_k] else 0
                        break
                if better:
                    for cmp_k in range(m):
                        best[cmp_k] = cand[cmp_k]
        return tuple(best[k] for k in range(m))
    finally:
        free(word); free(best); free(cand); free(relabel)


cdef inline void _sigma_for_mask(const int *darts, int n,
                                 unsigned long long mask, int *sigma) nogil:
    # darts holds (in_f, out_f, in_s, out_s) per chord, flattened.
    cdef int c, a, b, x, y
    for c in range(n):
        a = darts[4 * c]       # in_f
        b = darts[4 * c + 1]   # out_f
        x = darts[4 * c + 2]   # in_s
        y = darts[4 * c + 3]   # out_s
        if (mask >> c) & 1:
            sigma[a] = y
            sigma[y] = b
            sigma[b] = x
            sigma[x] = a
        else:
            sigma[a] = x
            sigma[x] = b
            sigma[b] = y
            sigma[y] = a


cdef inline int _faces(const int *sigma, char *seen, int num_darts) nogil:
    cdef int faces = 0, d0, d
    for d0 in range(num_darts):
        seen[d0] = 0
    for d0 in range(num_darts):
        if seen[d0]:
            continue
        faces += 1
        d = d0
        while not seen[d]:
            seen[d] = 1
            d = sigma[d ^ 1]
    return faces


cdef int *_build_darts(endpoints_flat, int n) except NULL:
    cdef int m = 2 * n
    cdef int *darts = <int *> malloc(4 * n * sizeof(int))
    if darts is NULL:
        raise MemoryError()
    cdef int c, f, s
    for c in range(n):
        f = endpoints_flat[2 * c]
        s = endpoints_flat[2 * c + 1]
        darts[4 * c] = 2 * ((f + m - 1) % m) + 1
        darts[4 * c + 1] = 2 * f
        darts[4 * c + 2] = 2 * ((s + m - 1) % m) + 1
        darts[4 * c + 3] = 2 * s
    return darts


def count_faces(endpoints_flat, n, mask):
    """Face count of the embedding chosen by ``mask`` (bit c = chord c)."""
    cdef int cn = n
    cdef unsigned long long cmask = mask
    cdef int *darts = _build_darts(endpoints_flat, cn)
    cdef int *sigma = <int *> malloc(4 * cn * sizeof(int))
    cdef char *seen = <char *> malloc(4 * cn)
    if sigma is NULL or seen is NULL:
        free(darts); free(sigma); free(seen)
        raise MemoryError()
    cdef int out
    try:
        _sigma_for_mask(darts, cn, cmask, sigma)
        out = _faces(sigma, seen, 4 * cn)
        return out
    finally:
        free(darts); free(sigma); free(seen)


def find_planar_rotation(endpoints_flat, n, start=0, stop=None):
    """Least handedness mask in [start, stop) with face count n + 2, else -1."""
    cdef int cn = n
    cdef unsigned long long lo = start
    cdef unsigned long long hi = (1 << cn) if stop is None else stop
    cdef int *darts = _build_darts(endpoints_flat, cn)
    cdef int *sigma = <int *> malloc(4 * cn * sizeof(int))
    cdef char *seen = <char *> malloc(4 * cn)
    if sigma is NULL or seen is NULL:
        free(darts); free(sigma); free(seen)
        raise MemoryError()
    cdef int target = cn + 2
    cdef unsigned long long mask = lo
    cdef long long found = -1
    try:
        with nogil:
            while mask < hi:
                _sigma_for_mask(darts, cn, mask, sigma)
                if _faces(sigma, seen, 4 * cn) == target:
                    found = <long long> mask
                    break
                mask += 1
        return found
    finally:
        free(darts); free(sigma); free(seen)
