# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: rotation-system genus sweep and win-set attractor.

Semantics and iteration order match ``_kernels_py`` exactly; the tests
compare the two backends on small inputs.
"""

from libc.stdlib cimport free, malloc

BACKEND = "cython"


cdef inline bint _next_permutation(int *a, int n) nogil:
    # lexicographic next permutation of a[0..n-1]; False after the last one
    cdef int i = n - 2
    cdef int j, t
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = a[i]; a[i] = a[j]; a[j] = t
        i += 1
        j -= 1
    return True


def genus_sweep(degrees, vertex_darts, rev, int lower_bound, long max_systems):
    """Minimum genus over rotation systems; see the Python twin."""
    cdef int n = len(degrees)
    cdef int n_darts = len(rev)
    cdef int e = n_darts // 2
    cdef int i, v, k, d, d0, faces, genus, first, prev, cur
    cdef long checked = 0
    cdef bint swept_all = True, more

    cdef int *rev_c = <int *> malloc(n_darts * sizeof(int))
    cdef int *rot_next = <int *> malloc(n_darts * sizeof(int))
    cdef unsigned char *seen = <unsigned char *> malloc(n_darts)
    # flattened per-vertex dart lists plus the permuted tail of each list
    cdef int *flat = <int *> malloc(n_darts * sizeof(int))
    cdef int *offs = <int *> malloc((n + 1) * sizeof(int))
    cdef int *perm = <int *> malloc(n_darts * sizeof(int))

    if not (rev_c and rot_next and seen and flat and offs and perm):
        free(rev_c); free(rot_next); free(seen); free(flat); free(offs); free(perm)
        raise MemoryError()

    for i in range(n_darts):
        rev_c[i] = rev[i]
    offs[0] = 0
    for v in range(n):
        darts = vertex_darts[v]
        k = len(darts)
        for i in range(k):
            flat[offs[v] + i] = darts[i]
        offs[v + 1] = offs[v] + k

    # perm holds, per vertex, indices 1..deg-1 into its dart list
    for v in range(n):
        for i in range(offs[v] + 1, offs[v + 1]):
            perm[i] = i - offs[v]

    cdef int best = 1 + e

    try:
        while True:
            if checked >= max_systems:
                swept_all = False
                break
            checked += 1
            # build rot_next from the current permutations
            for v in range(n):
                k = offs[v + 1] - offs[v]
                if k == 0:
                    continue
                first = flat[offs[v]]
                prev = first
                for i in range(1, k):
                    cur = flat[offs[v] + perm[offs[v] + i]]
                    rot_next[prev] = cur
                    prev = cur
                rot_next[prev] = first
            for i in range(n_darts):
                seen[i] = 0
            faces = 0
            for d0 in range(n_darts):
                if seen[d0]:
                    continue
                faces += 1
                d = d0
                while not seen[d]:
                    seen[d] = 1
                    d = rot_next[rev_c[d]]
            genus = (2 - n + e - faces) // 2
            if genus < best:
                best = genus
                if best <= lower_bound:
                    swept_all = False
                    break
            # advance the mixed-radix permutation counter (last vertex fastest)
            more = False
            for v in range(n - 1, -1, -1):
                k = offs[v + 1] - offs[v]
                if k <= 1:
                    continue
                if _next_permutation(perm + offs[v] + 1, k - 1):
                    more = True
                    break
                for i in range(offs[v] + 1, offs[v + 1]):
                    perm[i] = i - offs[v]
            if not more:
                break
        return best, checked, swept_all
    finally:
        free(rev_c); free(rot_next); free(seen); free(flat); free(offs); free(perm)


def attractor(kinds, indptr, succs, wins):
    """Monotone AND/OR win-set fixpoint; see the Python twin."""
    cdef int n = len(kinds)
    cdef int m = len(succs)
    cdef int i, j, lo, hi
    cdef bint changed = True, hit
    cdef unsigned char *kind_c = <unsigned char *> malloc(n)
    cdef int *ptr_c = <int *> malloc((n + 1) * sizeof(int))
    cdef int *succ_c = <int *> malloc(m * sizeof(int)) if m else <int *> malloc(sizeof(int))
    cdef unsigned char *win_c = <unsigned char *> malloc(n)
    if not (kind_c and ptr_c and succ_c and win_c):
        free(kind_c); free(ptr_c); free(succ_c); free(win_c)
        raise MemoryError()
    try:
        for i in range(n):
            kind_c[i] = kinds[i]
            win_c[i] = wins[i]
        for i in range(n + 1):
            ptr_c[i] = indptr[i]
        for i in range(m):
            succ_c[i] = succs[i]
        while changed:
            changed = False
            for i in range(n):
                if win_c[i]:
                    continue
                lo = ptr_c[i]
                hi = ptr_c[i + 1]
                if lo == hi:
                    continue
                if kind_c[i] == 0:
                    hit = False
                    for j in range(lo, hi):
                        if win_c[succ_c[j]]:
                            hit = True
                            break
                else:
                    hit = True
                    for j in range(lo, hi):
                        if not win_c[succ_c[j]]:
                            hit = False
                            break
                if hit:
                    win_c[i] = 1
                    changed = True
        out = bytearray(n)
        for i in range(n):
            out[i] = win_c[i]
        return out
    finally:
        free(kind_c); free(ptr_c); free(succ_c); free(win_c)
