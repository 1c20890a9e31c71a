"""Slow reference implementations used only to check the fast engines."""

from itertools import combinations, permutations

import networkx as nx

from pow2free.graph import Graph, graph_from_edge_list


def cycle_counts_permutations(g: Graph, lmax: int) -> dict[int, int]:
    """Count L-cycles by trying every ordering of every L-subset (fixed first vertex)."""
    out = {L: 0 for L in range(3, lmax + 1)}
    for L in out:
        for subset in combinations(range(g.n), L):
            first, rest = subset[0], subset[1:]
            for order in permutations(rest):
                if order[0] > order[-1]:
                    continue
                walk = (first,) + order
                if all(g.has_edge(walk[i], walk[(i + 1) % L]) for i in range(L)):
                    out[L] += 1
    return out


def cycle_counts_subset_dp(g: Graph, lmax: int) -> dict[int, int]:
    """Count L-cycles by a bitmask path DP rooted at each cycle's smallest vertex."""
    out = {L: 0 for L in range(3, lmax + 1)}
    for s in range(g.n):
        # paths[mask][v]: paths from s through exactly mask, ending at v
        paths = {(1 << s, s): 1}
        frontier = dict(paths)
        for size in range(2, lmax + 1):
            nxt = {}
            for (mask, v), c in frontier.items():
                for y in g.adjacency[v]:
                    if y > s and not mask >> y & 1:
                        key = (mask | 1 << y, y)
                        nxt[key] = nxt.get(key, 0) + c
            frontier = nxt
            if size >= 3:
                for (mask, v), c in frontier.items():
                    if g.has_edge(v, s):
                        out[size] += c
    return {L: c // 2 for L, c in out.items()}


def cycle_counts_networkx(g: Graph, lmax: int) -> dict[int, int]:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    out = {L: 0 for L in range(3, lmax + 1)}
    for c in nx.simple_cycles(h, length_bound=lmax):
        if len(c) >= 3:
            out[len(c)] += 1
    return out


def connected_graphs_up_to_7() -> list[Graph]:
    """Every connected graph on 1..7 vertices, one per isomorphism class."""
    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() and nx.is_connected(h):
            out.append(graph_from_edge_list(h.number_of_nodes(), list(h.edges())))
    return out


def cubic_graph_classes_brute(n: int) -> int:
    """Isomorphism classes of connected cubic graphs on n vertices.

    Fills the upper triangle of the adjacency matrix pair by pair. Every
    class has a labelling where vertex 0 is adjacent to 1, 2, 3, so only
    those are generated; classes are merged with networkx's isomorphism test.
    """
    pairs = list(combinations(range(n), 2))
    reps: dict[str, list] = {}

    def rec(i, deg, edges):
        if i == len(pairs):
            if all(d == 3 for d in deg):
                h = nx.Graph(edges)
                if nx.is_connected(h):
                    key = nx.weisfeiler_lehman_graph_hash(h)
                    bucket = reps.setdefault(key, [])
                    if not any(nx.is_isomorphic(h, r) for r in bucket):
                        bucket.append(h)
            return
        a, b = pairs[i]
        forced = a == 0 and b <= 3
        if deg[a] < 3 and deg[b] < 3 and (a > 0 or forced):
            deg[a] += 1
            deg[b] += 1
            edges.append((a, b))
            rec(i + 1, deg, edges)
            edges.pop()
            deg[a] -= 1
            deg[b] -= 1
        # skipping (a, b) leaves a only the pairs (a, b+1..n-1)
        if not forced and deg[a] + (n - 1 - b) >= 3:
            rec(i + 1, deg, edges)

    rec(0, [0] * n, [])
    return sum(len(b) for b in reps.values())
