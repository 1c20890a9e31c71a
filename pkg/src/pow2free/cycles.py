"""Exact-length simple cycles: existence, counting, enumeration and girth.

The heavy lifting is done by the compiled kernels in :mod:`._kernels`;
:func:`iter_cycles` is a pure-Python generator over the same canonical-root
search, used when cycles have to be streamed to the caller.
"""

from __future__ import annotations

import contextlib
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numba
import numpy as np

from . import _kernels
from .graph import Graph

LMAX_CAP = 64


@dataclass(frozen=True)
class CycleQuery:
    """Parameters of one engine call; mostly useful for logging/reporting."""

    length: int | None = None
    lmax: int | None = None
    mode: str = "exists"  # exists | count | enumerate
    threads: int | None = None
    prune: bool = True

    def __post_init__(self):
        if self.mode not in ("exists", "count", "enumerate"):
            raise ValueError(f"unknown mode {self.mode!r}")
        for bound in (self.length, self.lmax):
            if bound is not None:
                _check_length(bound)


@dataclass(frozen=True)
class CycleSpectrum:
    """Number of simple cycles of each length 3..lmax. Missing keys mean zero."""

    lmax: int
    counts: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, length: int) -> int:
        if not 3 <= length <= self.lmax:
            raise KeyError(length)
        return self.counts.get(length, 0)

    def nonzero(self) -> dict[int, int]:
        return {k: v for k, v in sorted(self.counts.items()) if v}

    def as_dict(self) -> dict[int, int]:
        """Dense mapping over 3..lmax, zeros included."""
        return {L: self.counts.get(L, 0) for L in range(3, self.lmax + 1)}

    def restrict(self, lengths: Sequence[int]) -> dict[int, int]:
        return {L: self[L] for L in lengths}

    def __str__(self) -> str:
        return "{" + ", ".join(f"{k}:{v}" for k, v in self.as_dict().items()) + "}"


@dataclass(frozen=True)
class Pow2Result:
    """Outcome of :func:`is_pow2_cycle_free`; truthy iff no offending cycle."""

    k: int
    free: bool
    m: int | None = None
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.free


def _check_length(L: int) -> None:
    if L < 3:
        raise ValueError(f"cycle length must be at least 3, got {L}")
    if L > LMAX_CAP:
        raise ValueError(f"cycle length {L} exceeds the cap of {LMAX_CAP}")


@contextlib.contextmanager
def limit_threads(threads: int | None):
    """Cap the kernels' thread pool inside the block; None leaves it alone."""
    if threads is None:
        yield
        return
    previous = numba.get_num_threads()
    numba.set_num_threads(max(1, min(threads, numba.config.NUMBA_NUM_THREADS)))
    try:
        yield
    finally:
        numba.set_num_threads(previous)


def _bipartite(g: Graph) -> bool:
    from .structure import is_bipartite

    return bool(is_bipartite(g))


def find_cycle_of_length(
    g: Graph, L: int, *, prune: bool = True, threads: int | None = None
) -> tuple[int, ...] | None:
    """A witness cycle of exactly ``L`` edges, or None.

    The witness is the one found from the smallest possible root, so the
    answer is the same for every thread count.
    """
    _check_length(L)
    if g.n < L:
        return None
    if L % 2 and _bipartite(g):
        return None
    indptr, indices = g.csr
    with limit_threads(threads):
        block = max(1, 4 * numba.get_num_threads())
        for start in range(0, g.n, block):
            stop = min(g.n, start + block)
            found, wit = _kernels.find_in_block(indptr, indices, start, stop, L, prune)
            hits = np.flatnonzero(found)
            if hits.size:
                return tuple(int(v) for v in wit[hits[0]])
    return None


def has_cycle_of_length(g: Graph, L: int, *, prune: bool = True, threads: int | None = None) -> bool:
    return find_cycle_of_length(g, L, prune=prune, threads=threads) is not None


def count_cycles_by_length(
    g: Graph, lmax: int, *, prune: bool = True, threads: int | None = None
) -> CycleSpectrum:
    _check_length(lmax)
    if g.n == 0:
        return CycleSpectrum(lmax, {})
    indptr, indices = g.csr
    with limit_threads(threads):
        totals = _kernels.spectrum(indptr, indices, lmax, prune)
    return CycleSpectrum(lmax, {L: int(totals[L]) for L in range(3, lmax + 1)})


def iter_cycles(
    g: Graph, L: int | None = None, *, lmax: int | None = None, prune: bool = True
) -> Iterator[tuple[int, ...]]:
    """Stream every simple cycle of length ``L`` (or of every length up to ``lmax``).

    Each cycle is yielded once, as a vertex tuple starting at its smallest
    vertex with ``cycle[1] < cycle[-1]``.
    """
    if (L is None) == (lmax is None):
        raise ValueError("give exactly one of L or lmax")
    bound = L if L is not None else lmax
    _check_length(bound)
    lo = bound if L is not None else 3
    adj = g.adjacency
    for root in range(g.n):
        dist = _allowed_distances(g, root, bound)
        path = [root]
        onpath = {root}
        stack = [iter(adj[root])]
        while stack:
            y = next(stack[-1], None)
            if y is None:
                stack.pop()
                onpath.discard(path.pop())
                continue
            nxt = len(path)
            if y == root:
                if lo <= nxt and nxt >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                continue
            if y < root or y in onpath or nxt >= bound:
                continue
            if prune and dist.get(y, bound + 1) + nxt > bound:
                continue
            path.append(y)
            onpath.add(y)
            stack.append(iter(adj[y]))


def _allowed_distances(g: Graph, root: int, cap: int) -> dict[int, int]:
    dist = {root: 0}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        if dist[x] >= cap:
            continue
        for y in g.adjacency[x]:
            if y > root and y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for a forest.

    BFS from every vertex; the first non-tree edge seen from root ``r`` closes
    a closed walk through ``r`` whose length bounds the girth, and the minimum
    over all roots is exact.
    """
    best = None
    for r in range(g.n):
        dist = {r: 0}
        parent = {r: -1}
        queue = deque([r])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] + 1 >= best:
                break
            for y in g.adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    cand = dist[x] + dist[y] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def is_pow2_cycle_free(g: Graph, k: int, *, threads: int | None = None) -> Pow2Result:
    """Check that ``g`` has no cycle of length ``2**m`` for ``2 <= m <= k``."""
    if k < 2:
        raise ValueError(f"exponent bound must be at least 2, got {k}")
    for m in range(2, k + 1):
        wit = find_cycle_of_length(g, 2**m, threads=threads)
        if wit is not None:
            return Pow2Result(k, False, m, wit)
    return Pow2Result(k, True)


def is_valid_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """Replay a vertex sequence against the adjacency."""
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))
