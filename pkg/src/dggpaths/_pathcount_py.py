"""Pure-Python Hamiltonian path counter (fallback for the compiled kernel).

Vertices are indexed ``(y - 1) * p + (x - 1)`` so index order matches the
canonical (y, x) order.
"""
from __future__ import annotations

import sys


def adjacency(p, q):
    """Out- and in-neighbour index lists, each sorted ascending."""
    n = p * q
    out = [[] for _ in range(n)]
    inn = [[] for _ in range(n)]
    for y in range(q):
        for x in range(p):
            v = y * p + x
            # 0-based: 1-based odd row/column is 0-based even
            nx = x + (1 if y % 2 == 0 else -1)
            ny = y + (1 if x % 2 == 0 else -1)
            if 0 <= nx < p:
                out[v].append(y * p + nx)
            if 0 <= ny < q:
                out[v].append(ny * p + x)
    for v in range(n):
        out[v].sort()
        for w in out[v]:
            inn[w].append(v)
    return out, inn


def prefix_histogram(p, q):
    """Count Hamiltonian paths of DGG_{p,q}, bucketed by bottom-row prefix.

    Returns a list ``hist`` of length ``p + 1`` where ``hist[r]`` is the
    number of paths starting (1;1),...,(r;1) and not continuing to (r+1;1).
    ``hist[0]`` is always 0.
    """
    n = p * q
    out, inn = adjacency(p, q)
    visited = [False] * n
    # in-neighbours that are unvisited or the current head
    avail = [len(inn[v]) for v in range(n)]
    hist = [0] * (p + 1)

    limit = sys.getrecursionlimit()
    if n + 50 > limit:
        sys.setrecursionlimit(n + 50)

    def dfs(u, depth, prefix):
        # depth = number of vertices on the path so far, u = head
        if depth == n:
            hist[prefix if prefix else min(n, p)] += 1
            return
        nbrs = out[u]
        for v in nbrs:
            if visited[v]:
                continue
            dead = False
            for w in nbrs:
                avail[w] -= 1
                if w != v and not visited[w] and avail[w] == 0:
                    dead = True
            if not dead:
                visited[v] = True
                r = prefix
                if not r and (depth >= p or v != depth):
                    r = depth
                dfs(v, depth + 1, r)
                visited[v] = False
            for w in nbrs:
                avail[w] += 1

    visited[0] = True
    dfs(0, 1, 0)
    return hist
