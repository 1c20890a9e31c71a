"""Isomorph-free generation of small connected cubic graphs and the f(k) scan."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .cycles import is_pow2_cycle_free
from .formats import encode_graph6
from .graph import Graph, graph_from_edge_list
from .structure import canonical_form, vertex_invariant

MAX_ORDER = 14


def _labelled_cubic(n: int) -> Iterator[list[tuple[int, int]]]:
    """Connected cubic graphs on ``n`` vertices, labelled in BFS discovery order.

    Vertex ``i`` is completed before ``i + 1``: it is joined to a subset of the
    already-discovered, still-unsaturated vertices after it, and the rest of
    its degree goes to brand-new vertices, which take the next free labels.
    Every connected cubic graph appears at least once.
    """
    deg = [0] * n
    adj = [set() for _ in range(n)]
    edges: list[tuple[int, int]] = []

    def rec(i: int, nxt: int) -> Iterator[list[tuple[int, int]]]:
        if i == n:
            yield list(edges)
            return
        if i >= nxt:
            return  # disconnected: vertex i was never reached
        need = 3 - deg[i]
        pool = [j for j in range(i + 1, nxt) if deg[j] < 3 and j not in adj[i]]
        for t in range(min(need, len(pool)), -1, -1):
            fresh = need - t
            if nxt + fresh > n:
                continue
            for chosen in combinations(pool, t):
                targets = list(chosen) + list(range(nxt, nxt + fresh))
                for j in targets:
                    deg[i] += 1
                    deg[j] += 1
                    adj[i].add(j)
                    adj[j].add(i)
                    edges.append((i, j))
                yield from rec(i + 1, nxt + fresh)
                for j in targets:
                    deg[i] -= 1
                    deg[j] -= 1
                    adj[i].discard(j)
                    adj[j].discard(i)
                    edges.pop()

    if n:
        yield from rec(0, 1)


def generate_cubic_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected cubic graphs on ``n`` vertices."""
    if n % 2:
        raise ValueError(f"no cubic graph has odd order {n}")
    if not 4 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in 4..{MAX_ORDER}, got {n}")
    seen: set[bytes] = set()
    for edges in _labelled_cubic(n):
        g = graph_from_edge_list(n, edges)
        inv = vertex_invariant(g)
        # some BFS labelling starts at a vertex of top invariant; skip the rest
        if inv[0] != max(inv):
            continue
        key = canonical_form(g, inv)
        if key not in seen:
            seen.add(key)
            yield g


@dataclass
class OrderStats:
    n: int
    graphs: int
    passing: int
    witnesses: list[str] = field(default_factory=list)  # graph6, sorted


@dataclass
class SearchReport:
    k: int
    nmax: int
    orders: list[OrderStats] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def minimum_order(self) -> int | None:
        return next((o.n for o in self.orders if o.passing), None)

    @property
    def witnesses(self) -> list[str]:
        return next((o.witnesses for o in self.orders if o.passing), [])

    def summary(self) -> str:
        if self.minimum_order is None:
            return f"f({self.k}): no witness ≤ {self.nmax}"
        return f"f({self.k})={self.minimum_order}, {len(self.witnesses)} witnesses"

    def to_text(self) -> str:
        lines = [f"# k={self.k} nmax={self.nmax}"]
        for o in self.orders:
            lines.append(f"n={o.n} cubic={o.graphs} passing={o.passing}")
        lines.append(self.summary())
        lines.extend(self.witnesses)
        return "\n".join(lines) + "\n"


def find_min_pow2_free(k: int, nmax: int) -> SearchReport:
    """Scan n = 4, 6, ... up to ``nmax``; stop at the first order with a passing graph."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if nmax > MAX_ORDER:
        raise ValueError(f"nmax is capped at {MAX_ORDER}")
    t0 = time.perf_counter()
    report = SearchReport(k, nmax)
    for n in range(4, nmax + 1, 2):
        total = 0
        wits = []
        for g in generate_cubic_graphs(n):
            total += 1
            if is_pow2_cycle_free(g, k):
                wits.append(encode_graph6(g))
        report.orders.append(OrderStats(n, total, len(wits), sorted(wits)))
        if wits:
            break
    report.seconds = time.perf_counter() - t0
    return report
