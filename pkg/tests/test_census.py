from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, relabelings
from distspec import census
from distspec.census import (
    automorphism_count,
    canonical_form,
    enumerate_connected,
    in_family_count_by_partitions,
    labeled_connected_graphs,
    verify_theorem,
)
from distspec.graph import is_connected, is_isomorphic_bruteforce

CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
LABELED_CONNECTED = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704}


def test_connected_counts(census7):
    assert {n: len(gs) for n, gs in census7.items()} == CONNECTED
    assert sum(CONNECTED.values()) == 996
    for gs in census7.values():
        assert all(is_connected(g) for g in gs)


def test_cap():
    with pytest.raises(ValueError):
        list(enumerate_connected(8))
    with pytest.raises(ValueError):
        list(enumerate_connected(9, cap=9))
    with pytest.raises(ValueError):
        list(enumerate_connected(0))


@given(graphs(max_order=7), st.data())
def test_canonical_form_is_invariant(g, data):
    h = g.relabel(data.draw(relabelings(g)))
    code_g, canon_g = canonical_form(g)
    code_h, canon_h = canonical_form(h)
    assert code_g == code_h and canon_g == canon_h
    assert is_isomorphic_bruteforce(g, canon_g)


def test_census_representatives_pairwise_distinct(census7):
    for n in range(1, 6):
        gs = census7[n]
        for i in range(len(gs)):
            for j in range(i + 1, len(gs)):
                assert not is_isomorphic_bruteforce(gs[i], gs[j])


@pytest.mark.parametrize("n", range(1, 7))
def test_labeled_space_maps_onto_census(n, census7):
    reps = {canonical_form(g)[0]: g for g in census7[n]}
    hit = set()
    labeled = 0
    for g in labeled_connected_graphs(n):
        labeled += 1
        code = canonical_form(g)[0]
        assert code in reps
        hit.add(code)
    assert labeled == LABELED_CONNECTED[n]
    assert hit == set(reps)
    # orbit-stabiliser: every class accounts for n!/|Aut| labelings
    assert sum(factorial(n) // automorphism_count(g) for g in census7[n]) == labeled


def test_in_family_counts_match_partition_oracle():
    report = verify_theorem(7)
    got = {r.order: r.in_family_count for r in report.per_order}
    assert got == {n: in_family_count_by_partitions(n) for n in range(2, 8)}
    assert [got[n] for n in range(2, 8)] == [1, 2, 3, 5, 6, 9]
    assert report.verified and report.total_graphs == 995


def test_report_is_independent_of_worker_count():
    one = verify_theorem(5, workers=1).to_json()
    three = verify_theorem(5, workers=3).to_json()
    assert one == three
    assert "elapsed_seconds" not in one
    assert "elapsed_seconds" in verify_theorem(3).to_json(include_timing=True)


def test_report_table():
    text = verify_theorem(4).table()
    assert text.splitlines()[-1] == "verified: True"
    assert len(text.splitlines()) == 5


def test_tables_reproduce():
    rows = census.reproduce_tables()
    assert len(rows) == 24
    assert all(r.matches for r in rows)
    assert all(r.hi - r.lo <= census.ENCLOSURE_WIDTH for r in rows)
    by_key = {(r.table, r.sizes[-1]): r for r in rows}
    assert by_key[(1, 4)].rendered == "-0.5877"
    assert by_key[(1, 13)].rendered == "-0.58588"
    assert by_key[(3, 7)].rendered == "-0.5859"
    assert by_key[(4, 2)].rendered == "-0.5887"


def test_anchors_reproduce():
    anchors = census.anchor_eigenvalues()
    assert len(anchors) == 15
    assert all(a.matches for a in anchors)
    closed = census.closed_form_anchors()
    assert all(a.matches and a.error <= 1e-9 for a in closed)


def test_printed_comparison_rejects_wrong_value():
    row = census.reproduce_tables()[0]
    wrong = census.PrintedComparison(row.label, 2, "-0.5876", row.lo, row.hi)
    assert not wrong.matches
