# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled loop-walking kernel; semantics identical to ``_kernel_py``."""

from libc.stdlib cimport calloc, free, malloc

IMPLEMENTATION = "c"


def splice(match, glue):
    """Concatenate strings across glued points; see the Python twin."""
    cdef Py_ssize_t n = len(match)
    cdef int *m = <int *> malloc(n * sizeof(int))
    cdef int *g = <int *> malloc(n * sizeof(int))
    cdef int *out = <int *> malloc(n * sizeof(int))
    cdef char *seen = <char *> calloc(n if n else 1, sizeof(char))
    if m == NULL or g == NULL or out == NULL or seen == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, s
    cdef int v
    cdef int loops = 0
    try:
        for i in range(n):
            m[i] = match[i]
            g[i] = glue[i]
            out[i] = -1
        for s in range(n):
            if g[s] >= 0 or out[s] >= 0:
                continue
            v = m[s]
            while g[v] >= 0:
                seen[v] = 1
                v = g[v]
                seen[v] = 1
                v = m[v]
            out[s] = v
            out[v] = s
        for s in range(n):
            if g[s] < 0 or seen[s]:
                continue
            v = s
            while not seen[v]:
                seen[v] = 1
                v = g[v]
                seen[v] = 1
                v = m[v]
            loops += 1
        return [out[i] for i in range(n)], loops
    finally:
        free(m)
        free(g)
        free(out)
        free(seen)


def count_loops(match, glue):
    """Loop count of a fully glued network."""
    cdef Py_ssize_t n = len(match)
    cdef int *m = <int *> malloc(n * sizeof(int))
    cdef int *g = <int *> malloc(n * sizeof(int))
    cdef char *seen = <char *> calloc(n if n else 1, sizeof(char))
    if m == NULL or g == NULL or seen == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, s
    cdef int v
    cdef int loops = 0
    try:
        for i in range(n):
            m[i] = match[i]
            g[i] = glue[i]
        for s in range(n):
            if seen[s]:
                continue
            v = s
            while not seen[v]:
                seen[v] = 1
                v = g[v]
                seen[v] = 1
                v = m[v]
            loops += 1
        return loops
    finally:
        free(m)
        free(g)
        free(seen)


def network_loop_counts(base_match, glue, block_offsets, block_tables):
    """Loop counts over all substitutions; see the Python twin for the layout."""
    cdef Py_ssize_t n = len(base_match)
    cdef Py_ssize_t nb = len(block_offsets)
    cdef Py_ssize_t total = 1
    cdef Py_ssize_t b, c, j, pos
    cdef int v
    sizes_py = [len(t) for t in block_tables]
    for b in range(nb):
        total *= sizes_py[b]

    cdef int *m = <int *> malloc(n * sizeof(int))
    cdef int *g = <int *> malloc(n * sizeof(int))
    cdef int *stamp = <int *> calloc(n if n else 1, sizeof(int))
    cdef int *offs = <int *> malloc((nb if nb else 1) * sizeof(int))
    cdef int *sizes = <int *> malloc((nb if nb else 1) * sizeof(int))
    cdef int *bsize = <int *> malloc((nb if nb else 1) * sizeof(int))
    cdef int *idx = <int *> calloc(nb if nb else 1, sizeof(int))
    if m == NULL or g == NULL or stamp == NULL or offs == NULL or sizes == NULL or bsize == NULL or idx == NULL:
        raise MemoryError()

    # flatten the tables: tabs[b] is a contiguous run of choices * blocksize ints
    cdef int **tabs = <int **> malloc((nb if nb else 1) * sizeof(int *))
    if tabs == NULL:
        raise MemoryError()
    for b in range(nb):
        tabs[b] = NULL
    cdef int cur = 0
    cdef int loops
    cdef Py_ssize_t s
    counts = [0] * total
    try:
        for j in range(n):
            m[j] = base_match[j]
            g[j] = glue[j]
        for b in range(nb):
            offs[b] = block_offsets[b]
            sizes[b] = sizes_py[b]
            bsize[b] = len(block_tables[b][0])
            tabs[b] = <int *> malloc(sizes[b] * bsize[b] * sizeof(int))
            if tabs[b] == NULL:
                raise MemoryError()
            for c in range(sizes[b]):
                tab = block_tables[b][c]
                for j in range(bsize[b]):
                    tabs[b][c * bsize[b] + j] = tab[j]
        # write choice 0 of every block
        for b in range(nb):
            for j in range(bsize[b]):
                m[offs[b] + j] = offs[b] + tabs[b][j]
        for pos in range(total):
            cur += 1
            loops = 0
            for s in range(n):
                if stamp[s] == cur:
                    continue
                v = <int> s
                while stamp[v] != cur:
                    stamp[v] = cur
                    v = g[v]
                    stamp[v] = cur
                    v = m[v]
                loops += 1
            counts[pos] = loops
            b = nb - 1
            while b >= 0:
                idx[b] += 1
                if idx[b] < sizes[b]:
                    for j in range(bsize[b]):
                        m[offs[b] + j] = offs[b] + tabs[b][idx[b] * bsize[b] + j]
                    break
                idx[b] = 0
                for j in range(bsize[b]):
                    m[offs[b] + j] = offs[b] + tabs[b][j]
                b -= 1
        return counts
    finally:
        for b in range(nb):
            if tabs[b] != NULL:
                free(tabs[b])
        free(tabs)
        free(m)
        free(g)
        free(stamp)
        free(offs)
        free(sizes)
        free(bsize)
        free(idx)
