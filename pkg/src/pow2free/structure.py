"""Connectivity, bipartiteness and canonical forms."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph import Graph, GraphError, graph_from_edge_list


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


# --------------------------------------------------------------------------
# vertex connectivity
# --------------------------------------------------------------------------

def local_connectivity(g: Graph, s: int, t: int, cap: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent).

    Unit-capacity max flow on the split graph: vertex ``x`` becomes
    ``x_in = 2x`` and ``x_out = 2x + 1`` joined by an arc of capacity 1.
    Stops early once ``cap`` paths are found.
    """
    if s == t or g.has_edge(s, t):
        raise GraphError("local connectivity needs distinct non-adjacent vertices")
    big = g.n + 1
    heads: list[int] = []
    resid: list[int] = []
    out: list[list[int]] = [[] for _ in range(2 * g.n)]

    def arc(a: int, b: int, c: int) -> None:
        out[a].append(len(heads))
        heads.append(b)
        resid.append(c)
        out[b].append(len(heads))
        heads.append(a)
        resid.append(0)

    for x in range(g.n):
        arc(2 * x, 2 * x + 1, big if x in (s, t) else 1)
        for y in g.adjacency[x]:
            arc(2 * x + 1, 2 * y, 1)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while cap is None or flow < cap:
        pred = [-1] * (2 * g.n)
        pred[source] = -2
        queue = deque([source])
        while queue and pred[sink] == -1:
            a = queue.popleft()
            for e in out[a]:
                b = heads[e]
                if resid[e] > 0 and pred[b] == -1:
                    pred[b] = e
                    queue.append(b)
        if pred[sink] == -1:
            break
        b = sink
        while b != source:
            e = pred[b]
            resid[e] -= 1
            resid[e ^ 1] += 1
            b = heads[e ^ 1]
        flow += 1
    return flow


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """True iff removing fewer than ``k`` vertices never disconnects ``g``.

    Uses a fixed vertex ``x = 0``: any separator of size < k either misses
    ``x`` (so it separates ``x`` from some non-neighbour) or contains it (so,
    taken minimal, it separates two non-adjacent neighbours of ``x``).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n <= k:
        raise ValueError(f"need more than {k} vertices, graph has {g.n}")
    if not is_connected(g):
        return False
    x = 0
    nbrs = g.adjacency[x]
    for y in range(1, g.n):
        if y not in nbrs and local_connectivity(g, x, y, cap=k) < k:
            return False
    for a, b in combinations(nbrs, 2):
        if not g.has_edge(a, b) and local_connectivity(g, a, b, cap=k) < k:
            return False
    return True


def vertex_connectivity_brute(g: Graph, k: int) -> bool:
    """Reference check: delete every vertex set of size < k."""
    if g.n <= k:
        raise ValueError(f"need more than {k} vertices, graph has {g.n}")
    for size in range(k):
        for cut in combinations(range(g.n), size):
            keep = [v for v in range(g.n) if v not in cut]
            if not is_connected(g.induced_subgraph(keep)):
                return False
    return True


# --------------------------------------------------------------------------
# bipartiteness
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class BipartiteResult:
    """Either a proper 2-colouring or an odd cycle; truthy iff bipartite."""

    bipartite: bool
    coloring: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.bipartite


def is_bipartite(g: Graph) -> BipartiteResult:
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    return BipartiteResult(False, odd_cycle=_tree_cycle(parent, x, y))
    return BipartiteResult(True, coloring=tuple(color))


def _tree_cycle(parent: list[int], x: int, y: int) -> tuple[int, ...]:
    # x and y are joined by an edge and sit at equal BFS depth
    px, py = [x], [y]
    while px[-1] != py[-1]:
        px.append(parent[px[-1]])
        py.append(parent[py[-1]])
    return tuple(px + py[-2::-1])


# --------------------------------------------------------------------------
# canonical form
# --------------------------------------------------------------------------

def vertex_invariant(g: Graph) -> list[int]:
    """Rank of (degree, closed walks of length 3..6 at the vertex); isomorphism-invariant."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for x, y in g.edges:
        a[x, y] = a[y, x] = 1
    cols = [np.array(g.degrees(), dtype=np.int64)]
    p = a @ a
    for _ in range(3, 7):
        p = p @ a
        cols.append(np.diagonal(p).copy())
    keys = list(zip(*(c.tolist() for c in cols)))
    rank = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [rank[k] for k in keys]


def _refine(g: Graph, colors: list[int]) -> list[int]:
    """Colour refinement to a stable partition, with isomorphism-invariant colour names."""
    adj = g.adjacency
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[x], tuple(sorted(colors[y] for y in adj[x]))) for x in range(g.n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return new
        colors, ncolors = new, len(rank)


def _target_cell(colors: list[int]) -> list[int] | None:
    cells: dict[int, list[int]] = {}
    for x, c in enumerate(colors):
        cells.setdefault(c, []).append(x)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


def _twin_representatives(g: Graph, cell: list[int]) -> list[int]:
    # swapping twins x, y (N(x) - y == N(y) - x) inside one cell is a
    # colour-preserving automorphism, so their subtrees give the same leaves
    reps: list[int] = []
    for v in cell:
        nv = set(g.adjacency[v])
        if not any(nv - {r} == set(g.adjacency[r]) - {v} for r in reps):
            reps.append(v)
    return reps


def canonical_labeling(g: Graph, initial: list[int] | None = None) -> list[int]:
    """Permutation ``perm`` such that ``g.relabel(perm)`` is canonical.

    Individualisation-refinement: refine, individualise each vertex of the
    first smallest non-singleton cell, recurse, and keep the leaf whose
    relabelled edge list is lexicographically smallest. The only pruning is
    skipping twins, so this is meant for graphs up to a few dozen vertices.
    """
    best: list = [None, None]

    def leaf_key(colors: list[int]) -> tuple:
        return tuple(sorted((min(colors[x], colors[y]), max(colors[x], colors[y])) for x, y in g.edges))

    def search(colors: list[int]) -> None:
        colors = _refine(g, colors)
        cell = _target_cell(colors)
        if cell is None:
            key = leaf_key(colors)
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, colors
            return
        for v in _twin_representatives(g, cell):
            split =[2 * c + (1 if (c == colors[v] and x != v) else 0) for x, c in enumerate(colors)]
            search(split)

    search(vertex_invariant(g) if initial is None else list(initial))
    return best[1] if best[1] is not None else []


def canonical_form(g: Graph, initial: list[int] | None = None) -> bytes:
    """Isomorphism-invariant byte string (graph6 of the canonical relabelling).

    ``initial`` may supply a precomputed :func:`vertex_invariant`.
    """
    from .formats import encode_graph6

    return encode_graph6(g.relabel(canonical_labeling(g, initial))).encode("ascii")


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def kneser_graph(n: int, k: int) -> Graph:
    """Vertices are k-subsets of range(n) in lexicographic order; edges join disjoint ones."""
    subsets = list(combinations(range(n), k))
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not set(subsets[i]) & set(subsets[j])
    ]
    return graph_from_edge_list(len(subsets), edges)
