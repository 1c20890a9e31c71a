"""Compiled canonical-root DFS kernels for exact-length cycle search.

A cycle is found only from its smallest vertex (the root), only through
vertices larger than the root, and only in the direction where the second
vertex is smaller than the last. With ``prune`` set, a partial path is
abandoned as soon as the BFS distance back to the root (inside the allowed
vertex set) exceeds the remaining length budget.
"""

import os

import numba
import numpy as np
from numba import njit, prange

# the bundled TBB is too old for numba and only produces a warning
if "NUMBA_THREADING_LAYER" not in os.environ:
    numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]

_UNREACHED = 1 << 30


@njit(cache=True)
def root_distances(indptr, indices, root, cap):
    n = indptr.shape[0] - 1
    dist = np.full(n, _UNREACHED, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    dist[root] = 0
    queue[0] = root
    head = 0
    tail = 1
    while head < tail:
        x = queue[head]
        head += 1
        if dist[x] >= cap:
            continue
        for k in range(indptr[x], indptr[x + 1]):
            y = indices[k]
            if y > root and dist[y] == _UNREACHED:
                dist[y] = dist[x] + 1
                queue[tail] = y
                tail += 1
    return dist


@njit(cache=True)
def count_from_root(indptr, indices, root, lmax, prune, counts):
    """Add to ``counts[L]`` every cycle of length ``L <= lmax`` rooted at ``root``."""
    n = indptr.shape[0] - 1
    dist = root_distances(indptr, indices, root, lmax)
    onpath = np.zeros(n, dtype=np.bool_)
    path = np.empty(lmax + 1, dtype=np.int64)
    ptr = np.empty(lmax + 1, dtype=np.int64)
    path[0] = root
    ptr[0] = indptr[root]
    onpath[root] = True
    depth = 0
    while depth >= 0:
        x = path[depth]
        if ptr[depth] < indptr[x + 1]:
            y = indices[ptr[depth]]
            ptr[depth] += 1
            nxt = depth + 1
            if y == root:
                if nxt >= 3 and path[1] < x:
                    counts[nxt] += 1
                continue
            if y < root or onpath[y] or nxt >= lmax:
                continue
            if prune and dist[y] + nxt > lmax:
                continue
            depth = nxt
            path[depth] = y
            ptr[depth] = indptr[y]
            onpath[y] = True
        else:
            onpath[x] = False
            depth -= 1


@njit(cache=True)
def find_from_root(indptr, indices, root, length, prune, witness):
    """Search for one cycle of exactly ``length`` rooted at ``root``.

    On success the vertex sequence is written into ``witness`` and True is
    returned.
    """
    n = indptr.shape[0] - 1
    dist = root_distances(indptr, indices, root, length)
    onpath = np.zeros(n, dtype=np.bool_)
    path = np.empty(length + 1, dtype=np.int64)
    ptr = np.empty(length + 1, dtype=np.int64)
    path[0] = root
    ptr[0] = indptr[root]
    onpath[root] = True
    depth = 0
    while depth >= 0:
        x = path[depth]
        if ptr[depth] < indptr[x + 1]:
            y = indices[ptr[depth]]
            ptr[depth] += 1
            nxt = depth + 1
            if y == root:
                if nxt == length and path[1] < x:
                    for i in range(length):
                        witness[i] = path[i]
                    return True
                continue
            if y < root or onpath[y] or nxt >= length:
                continue
            if prune and dist[y] + nxt > length:
                continue
            depth = nxt
            path[depth] = y
            ptr[depth] = indptr[y]
            onpath[y] = True
        else:
            onpath[x] = False
            depth -= 1
    return False


@njit(cache=True, parallel=True)
def spectrum(indptr, indices, lmax, prune):
    n = indptr.shape[0] - 1
    per_root = np.zeros((n, lmax + 1), dtype=np.int64)
    for r in prange(n):
        count_from_root(indptr, indices, r, lmax, prune, per_root[r])
    return per_root.sum(axis=0)


@njit(cache=True, parallel=True)
def find_in_block(indptr, indices, start, stop, length, prune):
    """Run :func:`find_from_root` for roots ``start..stop-1``.

    Returns ``(found, witnesses)`` with one row per root; every root in the
    block is searched so the result does not depend on scheduling.
    """
    size = stop - start
    found = np.zeros(size, dtype=np.bool_)
    witnesses = np.zeros((size, length), dtype=np.int64)
    for i in prange(size):
        found[i] = find_from_root(indptr, indices, start + i, length, prune, witnesses[i])
    return found, witnesses
