# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Hamiltonian path counter.  Same contract as ``_pathcount_py``."""

from libc.stdlib cimport calloc, free


cdef struct State:
    int p
    int n
    int *out       # n x 2, -1 padded, ascending
    int *outdeg
    char *visited
    int *avail
    long long *hist


cdef void _dfs(State *s, int u, int depth, int prefix) noexcept nogil:
    cdef int i, j, v, w, r
    cdef int deg = s.outdeg[u]
    cdef bint dead
    if depth == s.n:
        if prefix == 0:
            prefix = s.n if s.n < s.p else s.p
        s.hist[prefix] += 1
        return
    for i in range(deg):
        v = s.out[2 * u + i]
        if s.visited[v]:
            continue
        dead = False
        for j in range(deg):
            w = s.out[2 * u + j]
            s.avail[w] -= 1
            if w != v and not s.visited[w] and s.avail[w] == 0:
                dead = True
        if not dead:
            s.visited[v] = 1
            r = prefix
            if r == 0 and (depth >= s.p or v != depth):
                r = depth
            _dfs(s, v, depth + 1, r)
            s.visited[v] = 0
        for j in range(deg):
            s.avail[s.out[2 * u + j]] += 1


def prefix_histogram(int p, int q):
    """Count Hamiltonian paths of DGG_{p,q}, bucketed by bottom-row prefix."""
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    cdef int n = p * q
    cdef int x, y, v, nx, ny, k, a, b
    cdef State s
    s.p = p
    s.n = n
    s.out = <int *> calloc(2 * n, sizeof(int))
    s.outdeg = <int *> calloc(n, sizeof(int))
    s.visited = <char *> calloc(n, sizeof(char))
    s.avail = <int *> calloc(n, sizeof(int))
    s.hist = <long long *> calloc(p + 1, sizeof(long long))
    if not (s.out and s.outdeg and s.visited and s.avail and s.hist):
        free(s.out); free(s.outdeg); free(s.visited); free(s.avail); free(s.hist)
        raise MemoryError()
    try:
        for y in range(q):
            for x in range(p):
                v = y * p + x
                k = 0
                nx = x + 1 if y % 2 == 0 else x - 1
                ny = y + 1 if x % 2 == 0 else y - 1
                if 0 <= nx < p:
                    s.out[2 * v + k] = y * p + nx
                    s.avail[y * p + nx] += 1
                    k += 1
                if 0 <= ny < q:
                    s.out[2 * v + k] = ny * p + x
                    s.avail[ny * p + x] += 1
                    k += 1
                s.outdeg[v] = k
                if k == 2 and s.out[2 * v] > s.out[2 * v + 1]:
                    a = s.out[2 * v]
                    b = s.out[2 * v + 1]
                    s.out[2 * v] = b
                    s.out[2 * v + 1] = a
        s.visited[0] = 1
        with nogil:
            _dfs(&s, 0, 1, 0)
        return [s.hist[k] for k in range(p + 1)]
    finally:
        free(s.out); free(s.outdeg); free(s.visited); free(s.avail); free(s.hist)
