import json

import pytest
from hypothesis import given, settings, strategies as st

from cospectra import (
    ADJACENCY,
    LAPLACIAN,
    LAPLACIAN_NOTE,
    NOT_COSPECTRAL,
    STRONG,
    Graph,
    adjacency_matrix,
    char_poly,
    delete_vertex,
    load_fixture,
    verify_a_cospectral,
    verify_l_cospectral,
    verify_pair_full,
)

P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def test_adjacency_report_positive():
    fx = load_fixture("figure1")
    r = verify_a_cospectral(fx.graph, *fx.pair)
    assert r.cospectral
    assert r.matrix_kind == ADJACENCY
    assert r.char_polys_equal and r.power_diagonal_equal and r.krylov_orthogonal
    assert r.first_power_mismatch_k is None
    assert r.first_krylov_mismatch_k is None
    assert r.projection_equal  # advisory agrees here
    p, q = r.deleted_char_polys
    assert p == q == char_poly(adjacency_matrix(delete_vertex(fx.graph, fx.pair[0])))


def test_adjacency_report_negative_certificates():
    r = verify_a_cospectral(P3, 0, 1)
    assert not r.cospectral
    assert r.char_polys_equal is False
    assert r.first_power_mismatch_k == 2
    assert r.first_krylov_mismatch_k == 2
    assert not r.projection_equal
    p, q = r.deleted_char_polys
    assert p != q


def test_adjacency_json_shape():
    doc = verify_a_cospectral(P3, 0, 1).to_json()
    assert doc["matrix"] == ADJACENCY
    assert doc["cospectral"] is False
    crit = doc["criteria"]
    assert set(crit) == {
        "krylov_orthogonal",
        "projection_diagonal_equal",
        "deleted_char_polys_equal",
        "power_diagonal_equal",
    }
    certs = doc["certificates"]
    assert certs["first_power_mismatch_k"] == 2
    assert certs["first_krylov_mismatch_k"] == 2
    assert isinstance(certs["deleted_char_polys"][0], list)
    json.dumps(doc)  # fully serializable


def test_laplacian_report_carries_note():
    r = verify_l_cospectral(C4, 0, 2)
    assert r.cospectral
    assert r.matrix_kind == LAPLACIAN
    assert r.note == LAPLACIAN_NOTE
    assert r.char_polys_equal is None and r.power_diagonal_equal is None
    doc = r.to_json()
    assert doc["note"] == LAPLACIAN_NOTE
    assert "deleted_char_polys_equal" not in doc["criteria"]
    json.dumps(doc)


def test_laplacian_negative():
    r = verify_l_cospectral(P3, 0, 1)
    assert not r.cospectral
    assert r.first_krylov_mismatch_k is not None


def test_adjacency_cospectral_but_not_laplacian():
    # the two notions genuinely differ: this tree pair passes the adjacency
    # checks and fails the Laplacian one
    fx = load_fixture("figure1")
    assert verify_a_cospectral(fx.graph, *fx.pair).cospectral
    assert not verify_l_cospectral(fx.graph, *fx.pair).cospectral


def test_pair_report_merges_all_three():
    full = verify_pair_full(C4, 0, 2)
    assert full.adjacency.cospectral
    assert full.laplacian.cospectral
    assert full.strong.verdict == STRONG
    doc = full.to_json()
    assert set(doc) == {"adjacency", "laplacian", "strong"}
    json.dumps(doc)


def test_pair_report_negative():
    full = verify_pair_full(P3, 0, 1)
    assert not full.adjacency.cospectral
    assert not full.laplacian.cospectral
    assert full.strong.verdict == NOT_COSPECTRAL


def test_pair_validation():
    with pytest.raises(ValueError):
        verify_a_cospectral(P3, 0, 0)
    with pytest.raises(ValueError):
        verify_a_cospectral(P3, 0, 5)
    with pytest.raises(ValueError):
        verify_l_cospectral(P3, -1, 2)


@st.composite
def graph_and_pair(draw, max_n=7):
    n = draw(st.integers(min_value=2, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    picks = draw(st.lists(st.sampled_from(pairs), unique=True))
    u, v = draw(st.sampled_from(pairs))
    return Graph.from_edges(n, picks), u, v


@given(graph_and_pair())
@settings(max_examples=40, deadline=None)
def test_exact_criteria_always_agree(gup):
    """The three adjacency criteria are equivalent, so reports never mix verdicts."""
    g, u, v = gup
    r = verify_a_cospectral(g, u, v)
    assert r.char_polys_equal == r.power_diagonal_equal == r.krylov_orthogonal
    assert r.cospectral == r.char_polys_equal
    # mismatch certificates appear exactly on failure
    assert (r.first_power_mismatch_k is None) == r.cospectral
    assert (r.first_krylov_mismatch_k is None) == r.cospectral


@given(graph_and_pair())
@settings(max_examples=40, deadline=None)
def test_advisory_projection_agrees_numerically(gup):
    """On small graphs the numeric advisory matches the exact verdict."""
    g, u, v = gup
    r = verify_a_cospectral(g, u, v)
    assert r.projection_equal == r.cospectral
