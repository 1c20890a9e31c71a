import os

# the thread-determinism tests need a pool larger than one even on a 1-CPU box;
# this must happen before numba is imported
os.environ.setdefault("NUMBA_NUM_THREADS", "4")

import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from pow2free.graph import Graph, graph_from_edge_list

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=10, connected=False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    edges = set(chosen)
    if connected:
        # a random spanning tree guarantees connectivity
        order = draw(st.permutations(range(n)))
        for i in range(1, n):
            j = draw(st.integers(0, i - 1))
            a, b = order[i], order[j]
            edges.add((min(a, b), max(a, b)))
    return graph_from_edge_list(n, sorted(edges))


def random_cubic(n: int, rng: random.Random) -> Graph:
    """Random simple cubic graph from the pairing model, rejecting loops and multi-edges."""
    while True:
        points = [x for x in range(n) for _ in range(3)]
        rng.shuffle(points)
        edges = {(min(a, b), max(a, b)) for a, b in zip(points[::2], points[1::2])}
        if len(edges) == 3 * n // 2 and all(a != b for a, b in edges):
            return graph_from_edge_list(n, sorted(edges))


def random_permutation(n: int, rng: random.Random) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def pytest_terminal_summary(terminalreporter):
    from acceptance_report import lines

    report = lines()
    if report:
        terminalreporter.section("acceptance criteria")
        for ln in report:
            terminalreporter.write_line(ln)
