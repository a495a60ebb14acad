import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import connected_graphs, relabelings
from distspec.classifier import (
    StructuralForm,
    classify,
    classify_structural,
    recognize_structure,
    theorem_condition,
)
from distspec.families import CliqueJoinSpec, build_graph, r_n4_threshold, specs_up_to_order
from distspec.graph import DisconnectedGraphError, GraphError, complete, cycle, empty, path, star
from distspec.spectra import Lambda2Position, compare_lambda2_threshold

BELOW = Lambda2Position.BELOW


def test_recognize_examples():
    assert recognize_structure(complete(7)) == StructuralForm.complete(7)
    assert recognize_structure(build_graph([1, 2, 4, 14])) == StructuralForm.apex_cliques([1, 2, 4, 14])
    assert recognize_structure(path(4)).variant == "Other"
    # five leaves is too many cliques
    assert recognize_structure(star(6)).variant == "Other"
    assert str(StructuralForm.apex_cliques([4, 1, 2])) == "ApexCliques([1, 2, 4])"


def test_scope_errors():
    with pytest.raises(GraphError):
        classify(complete(1))
    with pytest.raises(DisconnectedGraphError):
        classify(empty(3))
    with pytest.raises(ValueError):
        theorem_condition([1])
    with pytest.raises(ValueError):
        theorem_condition([0, 1, 1])


@st.composite
def specs(draw):
    r = draw(st.integers(2, 4))
    return CliqueJoinSpec(draw(st.lists(st.integers(1, 9), min_size=r, max_size=r)))


@given(specs(), st.data())
def test_structure_round_trip(spec, data):
    g = build_graph(spec)
    g = g.relabel(data.draw(relabelings(g)))
    assert recognize_structure(g) == StructuralForm.apex_cliques(spec.sizes)


def test_theorem_condition_examples():
    assert theorem_condition([1, 1, 873, 10**6]) == (True, "(i)")
    assert theorem_condition([1, 2, 3, 871]) == (False, None)
    assert theorem_condition([1, 2, 3, 870]) == (True, "(iii)")
    assert theorem_condition([2, 2, 2, 5]) == (True, "(v)")
    assert theorem_condition([2, 2, 2, 6]) == (False, None)
    assert theorem_condition([3, 1]) == (True, "r=2")
    assert theorem_condition([3, 1, 9]) == (True, "r=3")
    assert theorem_condition([1, 2, 2, 10**9]) == (True, "(iii)")
    assert theorem_condition([1, 3, 4, 4]) == (True, "(iv)")
    assert theorem_condition([2, 2, 3, 3]) == (False, None)


def test_item_ii_uses_exact_sign():
    # n3 = 874: r(t) < 0 exactly for n4 <= 792625
    assert theorem_condition([1, 1, 874, 792625]) == (True, "(ii)")
    assert theorem_condition([1, 1, 874, 792626]) == (False, None)
    for n3 in (875, 1000, 1746):
        cut = int(r_n4_threshold(n3))
        assert cut >= n3
        assert theorem_condition([1, 1, n3, cut]) == (True, "(ii)")
        assert theorem_condition([1, 1, n3, cut + 1]) == (False, None)
    # with n4 >= n3 the region ends at n3 = 1746
    assert r_n4_threshold(1747) < 1747
    assert theorem_condition([1, 1, 1747, 1747]) == (False, None)


@pytest.mark.parametrize(
    "prefix, last_in",
    [((1, 2, 4), 14), ((1, 2, 5), 8), ((1, 2, 6), 6), ((1, 3, 3), 7), ((1, 3, 4), 4), ((2, 2, 2), 5)],
)
def test_boundaries_flip_once(prefix, last_in):
    lo = prefix[-1]
    verdicts = [theorem_condition(prefix + (n4,))[0] for n4 in range(lo, last_in + 30)]
    assert verdicts == [True] * (last_in - lo + 1) + [False] * (29)


def test_classify_examples():
    v = classify(complete(2))
    assert v.structural and v.spectral is BELOW and v.agree and v.condition == "complete"

    v = classify(build_graph([1, 2, 4, 15]))
    assert not v.structural and v.spectral is Lambda2Position.ABOVE and v.agree
    assert round(float(v.lambda2_enclosure[1]), 5) == -0.58577

    v = classify(build_graph([1, 2, 4, 14]))
    assert v.structural and v.spectral is BELOW and v.agree and v.condition == "(iii)"
    assert round(float(v.lambda2_enclosure[0]), 5) == -0.58582

    v = classify(cycle(4))
    assert not v.structural and v.spectral is Lambda2Position.ABOVE and v.agree


def test_verdict_json_shape():
    out = classify(build_graph([1, 2, 4, 14])).to_json()
    assert list(out) == ["structural", "spectral", "agree", "condition", "form", "lambda2_enclosure", "witness"]
    assert out["spectral"] == "Below" and out["form"] == "ApexCliques([1, 2, 4, 14])"
    assert Fraction(out["lambda2_enclosure"]["lo"]) <= Fraction(out["lambda2_enclosure"]["hi"])
    json.dumps(out)
    assert classify(path(3), width=None).to_json()["lambda2_enclosure"] is None


def test_family_agreement_up_to_order_30():
    for spec in specs_up_to_order(30):
        g = build_graph(spec)
        assert classify_structural(g) == (compare_lambda2_threshold(g) is BELOW), spec.sizes


@given(connected_graphs(min_order=2, max_order=8), st.data())
def test_verdict_is_isomorphism_invariant(g, data):
    a = classify(g.relabel(data.draw(relabelings(g))))
    b = classify(g.relabel(data.draw(relabelings(g))))
    assert a == b
    assert a.agree
