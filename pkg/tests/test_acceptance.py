"""Acceptance criteria 1-10, one test each.

Every test records named checks and prints one PASS/FAIL line; the lines
are repeated in the pytest terminal summary. Run directly with
``python3 tests/test_acceptance.py`` to get just the report.
"""

import random
import time

import pytest

from acceptance_report import NOTES, lines, record
from conftest import random_cubic
from oracles import (
    connected_graphs_up_to_7,
    cubic_graph_classes_brute,
    cycle_counts_permutations,
    cycle_counts_subset_dp,
)
from pow2free import atlas
from pow2free.cycles import (
    count_cycles_by_length,
    find_cycle_of_length,
    girth,
    has_cycle_of_length,
    is_pow2_cycle_free,
)
from pow2free.formats import parse_graph6
from pow2free.graph import bfs_distances, genus, graph_from_edge_list, trace_faces
from pow2free.replacement import inflate, project_cycle
from pow2free.search import find_min_pow2_free, generate_cubic_graphs
from pow2free.structure import are_isomorphic, is_bipartite, vertex_connectivity_at_least

# published census of connected cubic graphs
CENSUS = {4: 1, 6: 2, 8: 5, 10: 19}


def check(name, passed, detail=""):
    return (name, bool(passed), str(detail))


def warm_kernels():
    # the first call of each compiled kernel loads it from the numba cache;
    # runtime targets are about the search, not that one-off load
    k4 = graph_from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    count_cycles_by_length(k4, 4)
    find_cycle_of_length(k4, 4)


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    value = fn(*args, **kwargs)
    return value, time.perf_counter() - t0


def finish(number, title, checks):
    ok = record(number, title, checks)
    print(next(ln for ln in lines() if ln.startswith(f"criterion {number:2d}")))
    failed = [c for c in checks if not c[1]]
    assert ok, failed


def test_criterion_01_c60_census():
    ng = atlas.c60()
    g, rot = ng.graph, ng.rotation
    warm_kernels()
    counts, secs = timed(count_cycles_by_length, g, 8)
    double = ng.edge_classes["double"]
    faces = trace_faces(g, rot)
    checks = [
        check("spectrum<=8", counts.as_dict() == {3: 0, 4: 0, 5: 12, 6: 20, 7: 0, 8: 0}, counts),
        check("30 double bonds", len(double) == 30, len(double)),
        check("60 single bonds", len(ng.edge_classes["single"]) == 60),
        check("one double bond per vertex",
              all(sum((min(x, y), max(x, y)) in double for y in g.adjacency[x]) == 1 for x in range(g.n))),
        check("genus 0", genus(g, rot) == 0),
        check("32 faces", len(faces) == 32, len(faces)),
        check("spectrum under 1 s", secs < 1.0, f"{secs:.2f}s"),
    ]
    finish(1, f"C60 census (spectrum {secs:.2f}s)", checks)


def test_criterion_02_g420():
    ng = atlas.g420()
    g = ng.graph
    warm_kernels()
    t16, s16 = timed(has_cycle_of_length, g, 16)
    sweep, s_sweep = timed(count_cycles_by_length, g, 17)
    counts = sweep.as_dict()
    checks = [
        check("order 420", g.n == 420),
        check("cubic", g.is_cubic()),
        check("3-connected", vertex_connectivity_at_least(g, 3)),
        check("genus 0", genus(g, ng.rotation) == 0),
        check("no 4-cycle", not has_cycle_of_length(g, 4)),
        check("no 8-cycle", not has_cycle_of_length(g, 8)),
        check("no 16-cycle", not t16, f"{s16:.2f}s"),
        check("zero on 8..17", all(counts[L] == 0 for L in range(8, 18)),
              {L: counts[L] for L in range(8, 18) if counts[L]}),
        check("spectrum<=7", {L: counts[L] for L in range(3, 8)} == {3: 120, 4: 0, 5: 60, 6: 120, 7: 60},
              {L: counts[L] for L in range(3, 8)}),
        check("16-cycle certificate under 60 s", s16 < 60, f"{s16:.2f}s"),
        check("8..17 sweep under 10 min", s_sweep < 600, f"{s_sweep:.2f}s"),
    ]
    finish(2, f"G420 (16-cycle {s16:.2f}s, full sweep {s_sweep:.2f}s)", checks)


def test_criterion_03_g78():
    ng = atlas.g78()
    g = ng.graph
    passing, secs = timed(atlas.g78_search)
    shipped = ng.plan.u_neighbor
    drawn = atlas.g78_drawn_plan()
    fig_res = is_pow2_cycle_free(inflate(drawn).graph, 4)
    NOTES.append(
        f"G78 drawing transcription (O2 on its chord) {'passes' if fig_res else f'has a {2 ** fig_res.m}-cycle'};"
        f" shipped plan is the first of {len(passing)} passing assignments"
    )
    checks = [
        check("order 78", g.n == 78),
        check("cubic", g.is_cubic()),
        check("no 4-, 8-, 16-cycles", is_pow2_cycle_free(g, 4)),
        check("shipped plan among search results", any(p.u_neighbor == shipped for p in passing)),
        check("shipped plan is the first search result", passing and passing[0].u_neighbor == shipped),
        check("search under 30 min", secs < 1800, f"{secs:.1f}s"),
    ]
    finish(3, f"G78 ({len(passing)} of 3^11 plans pass, search {secs:.1f}s)", checks)


def test_criterion_04_g450():
    ng = atlas.g450()
    g = ng.graph
    warm_kernels()
    res, secs = timed(is_pow2_cycle_free, g, 5)
    t32, s32 = timed(find_cycle_of_length, g, 32, threads=1)
    chords = atlas.g450_chords()
    wit = find_cycle_of_length(chords.graph, 32)
    NOTES.append(
        "G450 with u on every chord has a 32-cycle over base 8-cycle "
        f"{list(project_cycle(wit, chords.inflation).walk)}; shipped plan moves u at {len(ng.metadata['moved_u_edges'])} vertices"
    )
    checks = [
        check("order 450", g.n == 450),
        check("cubic", g.is_cubic()),
        check("no 2^m-cycle for m<=5", bool(res), f"m={res.m}" if not res else ""),
        check("32-cycle certificate single-threaded under 30 min", t32 is None and s32 < 1800, f"{s32:.2f}s"),
    ]
    finish(4, f"order-450 witness for f(5) <= 450 (full check {secs:.2f}s, 32-cycle {s32:.2f}s on 1 thread)", checks)


def test_criterion_05_markstrom24():
    (passing, secs) = timed(atlas.markstrom24_search)
    ng = atlas.markstrom24()
    g = ng.graph
    again = atlas.markstrom24_search()
    checks = [
        check("order 24", g.n == 24),
        check("cubic", g.is_cubic()),
        check("no 4- or 8-cycles", is_pow2_cycle_free(g, 3)),
        check("first passing plan is chosen", passing and ng.plan.u_neighbor == passing[0].u_neighbor),
        check("tie-break deterministic", [p.u_neighbor for p in again] == [p.u_neighbor for p in passing]),
        check("under 10 s", secs < 10, f"{secs:.2f}s"),
    ]
    finish(5, f"Markstrom order-24 witness ({len(passing)} of 27 plans pass)", checks)


def test_criterion_06_f2():
    counts = {n: len(list(generate_cubic_graphs(n))) for n in CENSUS}
    brute = {n: cubic_graph_classes_brute(n) for n in (4, 6, 8)}
    report, secs = timed(find_min_pow2_free, 2, 10)
    wits = [parse_graph6(s) for s in report.witnesses]
    checks = [
        check("counts match census", counts == CENSUS, counts),
        check("counts match brute-force oracle", all(counts[n] == brute[n] for n in brute), brute),
        check("3 of 19 pass at n=10", report.minimum_order == 10 and len(wits) == 3),
        check("one witness is Petersen", sum(are_isomorphic(w, atlas.petersen().graph) for w in wits) == 1),
        check("none below 10", all(o.passing == 0 for o in report.orders if o.n < 10)),
        check("under 60 s", secs < 60, f"{secs:.2f}s"),
    ]
    finish(6, f"f(2) = 10 ({secs:.2f}s)", checks)


def test_criterion_07_g12():
    g = atlas.g12().graph
    counts = count_cycles_by_length(g, 6).as_dict()
    classes = atlas.triangle_replacement_classes()
    checks = [
        check("spectrum<=6", counts == {3: 1, 4: 0, 5: 6, 6: 10}, counts),
        check("10 triangle replacements isomorphic", len(classes) == 1, f"{len(classes)} classes"),
    ]
    finish(7, "G12 census", checks)


def test_criterion_08_tutte_coxeter():
    tc = atlas.tutte_coxeter()
    g = tc.graph
    chords = tc.edge_classes["chord"]
    per = [sum((min(x, y), max(x, y)) in chords for y in g.adjacency[x]) for x in range(g.n)]
    ham_ok, ham_detail = atlas.eight_cycles_have_consecutive_hamiltonian_edges(tc)
    checks = [
        check("order 30", g.n == 30),
        check("girth 8", girth(g) == 8),
        check("bipartite", bool(is_bipartite(g))),
        check("one chord per vertex", per == [1] * 30),
        check("every 8-cycle has two consecutive Hamiltonian edges", ham_ok, ham_detail),
    ]
    finish(8, "Tutte-Coxeter", checks)


def test_criterion_09_gadgets():
    out = [atlas.h7_named(), atlas.h15_named()]
    h7g, h15g = (n.graph for n in out)
    m7, m15 = (n.metadata for n in out)
    d7 = {r: bfs_distances(h7g, m7[r]) for r in "uvw"}
    d15 = {r: bfs_distances(h15g, m15[r]) for r in "uvw"}
    pair7 = [d7[a][m7[b]] for a, b in (("u", "v"), ("u", "w"), ("v", "w"))]
    checks = [
        check("H7 attachments pairwise >= 2", min(pair7) >= 2, pair7),
        check("H7 d(v,w)=3", d7["v"][m7["w"]] == 3),
        check("H15 d(u,v)=d(u,w)=3", d15["u"][m15["v"]] == 3 and d15["u"][m15["w"]] == 3),
        check("H15 d(v,w)=5", d15["v"][m15["w"]] == 5),
        check("H7 has no 2^m-cycle", is_pow2_cycle_free(h7g, 2)),
        check("H15 has no 2^m-cycle", is_pow2_cycle_free(h15g, 3)),
    ]
    finish(9, "gadget distances", checks)


def test_criterion_10_engine_soundness():
    cubic = [g for n in (4, 6, 8, 10) for g in generate_cubic_graphs(n)]
    cubic_ok = all(count_cycles_by_length(g, 10).as_dict() == cycle_counts_permutations(g, 10) for g in cubic)
    small = connected_graphs_up_to_7()
    rng = random.Random(2024)
    sampled = [_random_connected(rng.randint(8, 10), rng) for _ in range(300)]
    oracle_ok = all(count_cycles_by_length(g, 10).as_dict() == cycle_counts_subset_dp(g, 10) for g in small + sampled)
    perm_ok = all(count_cycles_by_length(g, 10).as_dict() == cycle_counts_permutations(g, 10)
                  for g in small if g.n <= 6)
    threads_ok = True
    for g in [atlas.g420().graph, atlas.c60().graph] + [random_cubic(60, rng) for _ in range(3)]:
        spectra = {tuple(count_cycles_by_length(g, 12, threads=t).as_dict().items()) for t in (1, 2, 4)}
        wits = {find_cycle_of_length(g, 12, threads=t) for t in (1, 2, 4)}
        threads_ok &= len(spectra) == 1 and len(wits) == 1
    prune_ok = True
    for n in range(10, 61, 10):
        for g in (random_cubic(n, rng), _random_connected(n, rng)):
            prune_ok &= count_cycles_by_length(g, 12, prune=True) == count_cycles_by_length(g, 12, prune=False)
    checks = [
        check(f"permutation oracle on all {len(cubic)} connected cubic graphs n<=10", cubic_ok),
        check(f"subset-DP oracle on {len(small)} graphs n<=7 and {len(sampled)} sampled n=8..10", oracle_ok),
        check("permutation oracle on all connected graphs n<=6", perm_ok),
        check("spectra and witnesses identical for 1, 2, 4 threads", threads_ok),
        check("pruning on/off agree for n<=60, L<=12", prune_ok),
    ]
    finish(10, "engine soundness", checks)


def _random_connected(n, rng):
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    for _ in range(rng.randint(0, 2 * n)):
        a, b = sorted(rng.sample(range(n), 2))
        edges.add((a, b))
    return graph_from_edge_list(n, sorted(edges))


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
