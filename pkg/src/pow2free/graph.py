"""Immutable simple graphs, BFS distances and rotation-system embeddings."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

INF = -1  # marker used by bfs_distances for unreachable vertices


class GraphError(ValueError):
    """Raised when a graph or rotation system is malformed."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Neighbour lists are sorted tuples; build instances through
    :func:`graph_from_edge_list` (or :meth:`from_adjacency`) so the
    invariants are checked.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        edges = [(x, y) for x, nbrs in enumerate(adj) for y in nbrs if x < y]
        g = graph_from_edge_list(len(adj), edges)
        for x, nbrs in enumerate(adj):
            if tuple(sorted(nbrs)) != g.adjacency[x]:
                raise GraphError(f"adjacency is not symmetric at vertex {x}")
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def neighbors(self, x: int) -> tuple[int, ...]:
        return self.adjacency[x]

    def degree(self, x: int) -> int:
        return len(self.adjacency[x])

    def has_edge(self, x: int, y: int) -> bool:
        return y in self._adjsets[x]

    @cached_property
    def _adjsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(min, max)`` pairs in lexicographic order."""
        return tuple((x, y) for x in range(self.n) for y in self.adjacency[x] if x < y)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def is_regular(self, d: int) -> bool:
        return all(len(a) == d for a in self.adjacency)

    def is_cubic(self) -> bool:
        return self.is_regular(3)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` int64 arrays for the compiled kernels."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        for x, a in enumerate(self.adjacency):
            indptr[x + 1] = indptr[x] + len(a)
        indices = np.fromiter(
            (y for a in self.adjacency for y in a), dtype=np.int64, count=int(indptr[-1])
        )
        return indptr, indices

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``x`` renamed ``perm[x]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        return graph_from_edge_list(self.n, [(perm[x], perm[y]) for x, y in self.edges])

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[x], index[y])
            for x, y in self.edges
            if x in index and y in index
        ]
        return graph_from_edge_list(len(vertices), edges)


def graph_from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a :class:`Graph`, rejecting loops, duplicates and bad endpoints."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for e in edges:
        x, y = int(e[0]), int(e[1])
        if not (0 <= x < n and 0 <= y < n):
            raise GraphError(f"edge ({x}, {y}) has an endpoint outside 0..{n - 1}")
        if x == y:
            raise GraphError(f"edge ({x}, {y}) is a self-loop")
        key = (min(x, y), max(x, y))
        if key in seen:
            raise GraphError(f"duplicate edge ({x}, {y})")
        seen.add(key)
        adj[x].append(y)
        adj[y].append(x)
    return Graph(n, tuple(tuple(sorted(a)) for a in adj))


def complete_graph(n: int) -> Graph:
    return graph_from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    return graph_from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return graph_from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((x + offset, y + offset) for x, y in g.edges)
        offset += g.n
    return graph_from_edge_list(offset, edges)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Unweighted distances from ``source``; unreachable vertices get ``INF`` (-1)."""
    if not 0 <= source < g.n:
        raise GraphError(f"source {source} out of range")
    dist = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] == INF:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(g: Graph, x: int, y: int) -> float:
    d = bfs_distances(g, x)[y]
    return float("inf") if d == INF else d


# --------------------------------------------------------------------------
# Rotation systems
# --------------------------------------------------------------------------

Dart = tuple[int, int]


@dataclass(frozen=True, eq=False)
class RotationSystem:
    """Clockwise cyclic order of neighbours at each vertex.

    Because graphs are simple, an incident edge is identified by its other
    endpoint, so ``order[x]`` lists neighbours of ``x``.
    """

    order: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, g: Graph, order: Sequence[Sequence[int]]) -> "RotationSystem":
        rot = cls(tuple(tuple(int(y) for y in o) for o in order))
        rot.validate(g)
        return rot

    def validate(self, g: Graph) -> None:
        if len(self.order) != g.n:
            raise GraphError(f"rotation covers {len(self.order)} vertices, graph has {g.n}")
        for x in range(g.n):
            if len(self.order[x]) != g.degree(x) or sorted(self.order[x]) != list(g.adjacency[x]):
                raise GraphError(f"rotation at vertex {x} is not a permutation of its edges")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RotationSystem) and self.order == other.order

    def __hash__(self) -> int:
        return hash(self.order)

    @cached_property
    def _succ(self) -> tuple[dict[int, int], ...]:
        return tuple(
            {o[i]: o[(i + 1) % len(o)] for i in range(len(o))} for o in self.order
        )

    def successor(self, x: int, y: int) -> int:
        """Neighbour following ``y`` in the cyclic order at ``x``."""
        return self._succ[x][y]

    def mirror(self) -> "RotationSystem":
        return RotationSystem(tuple(tuple(reversed(o)) for o in self.order))


def trace_faces(g: Graph, rot: RotationSystem) -> list[tuple[Dart, ...]]:
    """Partition all darts into faces.

    The dart after ``(x, y)`` is ``(y, z)`` where ``z`` follows ``x`` in the
    rotation at ``y``. Faces are listed from the lexicographically smallest
    unused dart, each starting at that dart.
    """
    rot.validate(g)
    used: set[Dart] = set()
    faces = []
    for x in range(g.n):
        for y in g.adjacency[x]:
            if (x, y) in used:
                continue
            face = []
            dart = (x, y)
            while dart not in used:
                used.add(dart)
                face.append(dart)
                a, b = dart
                dart = (b, rot.successor(b, a))
            if dart != (x, y):
                raise GraphError(f"face walk from ({x}, {y}) does not close at vertex {dart[0]}")
            faces.append(tuple(face))
    return faces


def face_vertices(face: Sequence[Dart]) -> list[int]:
    return [d[0] for d in face]


def genus(g: Graph, rot: RotationSystem) -> int:
    """Orientable genus of the embedding given by ``rot``; 0 certifies planarity."""
    from .structure import is_connected

    if not is_connected(g):
        raise GraphError("genus is only defined here for connected graphs")
    faces = trace_faces(g, rot)
    euler = g.n - g.m + len(faces)
    if (2 - euler) % 2:
        raise GraphError("odd Euler characteristic deficit; rotation is inconsistent")
    return (2 - euler) // 2
