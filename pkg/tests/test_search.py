import pytest

from oracles import cubic_graph_classes_brute
from pow2free.atlas import petersen
from pow2free.cycles import girth, has_cycle_of_length, is_pow2_cycle_free
from pow2free.formats import parse_graph6
from pow2free.search import SearchReport, find_min_pow2_free, generate_cubic_graphs
from pow2free.structure import are_isomorphic, canonical_form, is_connected

CENSUS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}


@pytest.mark.parametrize("n, count", sorted(CENSUS.items()))
def test_counts_match_census(n, count):
    graphs = list(generate_cubic_graphs(n))
    assert len(graphs) == count
    assert all(g.n == n and g.is_cubic() and is_connected(g) for g in graphs)
    assert len({canonical_form(g) for g in graphs}) == count


@pytest.mark.parametrize("n", [4, 6, 8])
def test_generation_complete_against_brute_force(n):
    assert len(list(generate_cubic_graphs(n))) == cubic_graph_classes_brute(n)


def test_order_six_is_k33_and_prism():
    a, b = generate_cubic_graphs(6)
    assert {girth(a), girth(b)} == {3, 4}


@pytest.mark.parametrize("n", [3, 2, 16, 7])
def test_bad_orders_rejected(n):
    with pytest.raises(ValueError):
        list(generate_cubic_graphs(n))


def test_f2_is_ten():
    report = find_min_pow2_free(2, 10)
    assert report.minimum_order == 10
    assert [o.passing for o in report.orders] == [0, 0, 0, 3]
    assert report.summary() == "f(2)=10, 3 witnesses"
    wits = [parse_graph6(s) for s in report.witnesses]
    assert sum(are_isomorphic(w, petersen().graph) for w in wits) == 1
    for w in wits:
        assert is_pow2_cycle_free(w, 2)
        assert girth(w) in (3, 5) and not has_cycle_of_length(w, 4)
    assert report.witnesses == sorted(report.witnesses)


def test_below_ten_nothing_passes():
    report = find_min_pow2_free(2, 8)
    assert report.minimum_order is None and report.witnesses == []
    assert report.summary() == "f(2): no witness ≤ 8"


def test_k3_has_no_witness_up_to_12():
    report = find_min_pow2_free(3, 12)
    assert report.minimum_order is None
    assert report.summary().endswith("no witness ≤ 12")


def test_report_text():
    text = SearchReport(2, 4).to_text()
    assert text.startswith("# k=2 nmax=4")


@pytest.mark.parametrize("k, nmax", [(1, 10), (2, 16)])
def test_bad_bounds(k, nmax):
    with pytest.raises(ValueError):
        find_min_pow2_free(k, nmax)


@pytest.mark.slow
def test_k3_has_no_witness_up_to_14():
    report = find_min_pow2_free(3, 14)
    assert report.minimum_order is None
    assert [o.graphs for o in report.orders] == [1, 2, 5, 19, 85, 509]
