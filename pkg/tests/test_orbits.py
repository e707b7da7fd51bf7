import pytest
from hypothesis import given, settings, strategies as st

from cospectra import (
    Graph,
    SearchLimitError,
    automorphism_orbits,
    automorphism_witness,
    same_orbit,
)

from _oracles import brute_force_orbits, is_automorphism


def small_graphs(min_n=1, max_n=6):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=min_n, max_value=max_n))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        return Graph.from_edges(n, edges)

    return build()


# -- frozen cases ------------------------------------------------------------


def test_star_orbits_fixing_center():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    p = automorphism_orbits(star, 0)
    assert p.orbits == ((0,), (1, 2, 3))
    assert same_orbit(p, 1, 3) and not same_orbit(p, 0, 1)


def test_star_orbits_fixing_leaf():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    p = automorphism_orbits(star, 1)
    # fixing one leaf leaves the other two exchangeable
    assert p.orbits == ((0,), (1,), (2, 3))


def test_cycle_full_group_is_transitive():
    c5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    p = automorphism_orbits(c5)
    assert p.orbits == ((0, 1, 2, 3, 4),)
    assert p.fixed is None


def test_cycle_orbits_with_fixed_vertex():
    c5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    p = automorphism_orbits(c5, 0)
    # the reflection through 0 pairs (1,4) and (2,3)
    assert p.orbits == ((0,), (1, 4), (2, 3))


def test_asymmetric_tree_has_singleton_orbits():
    g = Graph.from_edges(
        9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)]
    )
    p = automorphism_orbits(g)
    assert all(len(o) == 1 for o in p.orbits)
    assert automorphism_witness(g, 3, 6) is None


def test_petersen_vertex_transitive():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    petersen = Graph.from_edges(10, outer + inner + spokes)
    p = automorphism_orbits(petersen)
    assert p.orbits == (tuple(range(10)),)


# -- oracle comparison -------------------------------------------------------


@given(small_graphs(), st.data())
@settings(max_examples=60, deadline=None)
def test_orbits_match_brute_force(g, data):
    fixed = data.draw(
        st.one_of(st.none(), st.integers(min_value=0, max_value=g.n - 1))
    )
    p = automorphism_orbits(g, fixed)
    assert [list(o) for o in p.orbits] == brute_force_orbits(g, fixed)


@given(small_graphs(min_n=2), st.data())
@settings(max_examples=60, deadline=None)
def test_witness_is_a_real_automorphism(g, data):
    u = data.draw(st.integers(min_value=0, max_value=g.n - 1))
    w = data.draw(st.integers(min_value=0, max_value=g.n - 1))
    pi = automorphism_witness(g, u, w)
    oracle = brute_force_orbits(g, None)
    same = any(u in o and w in o for o in oracle)
    if pi is None:
        assert not same
    else:
        assert pi[u] == w
        assert is_automorphism(g, pi)


@given(small_graphs(min_n=3), st.data())
@settings(max_examples=40, deadline=None)
def test_witness_respects_fixed_vertex(g, data):
    fixed = data.draw(st.integers(min_value=0, max_value=g.n - 1))
    u = data.draw(st.integers(min_value=0, max_value=g.n - 1).filter(lambda x: x != fixed))
    w = data.draw(st.integers(min_value=0, max_value=g.n - 1).filter(lambda x: x != fixed))
    pi = automorphism_witness(g, u, w, fixed=fixed)
    if pi is not None:
        assert pi[fixed] == fixed
        assert pi[u] == w
        assert is_automorphism(g, pi)
    else:
        oracle = brute_force_orbits(g, fixed)
        assert not any(u in o and w in o for o in oracle)


# -- contract details --------------------------------------------------------


def test_orbit_partition_is_deterministic():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
    assert automorphism_orbits(g, 0) == automorphism_orbits(g, 0)


def test_orbits_sorted_by_min_element():
    g = Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)])  # three disjoint edges
    p = automorphism_orbits(g)
    assert p.orbits == ((0, 1, 2, 3, 4, 5),)
    mins = [o[0] for o in automorphism_orbits(g, 0).orbits]
    assert mins == sorted(mins)


def test_search_limit():
    g = Graph.from_edges(5, [])
    with pytest.raises(SearchLimitError, match="search limit"):
        automorphism_orbits(g, max_n=4)
    assert automorphism_orbits(g, max_n=5).count == 1


def test_search_limit_env_override(monkeypatch):
    g = Graph.from_edges(5, [])
    monkeypatch.setenv("COSPECTRA_MAX_N", "3")
    with pytest.raises(SearchLimitError):
        automorphism_orbits(g)
    monkeypatch.setenv("COSPECTRA_MAX_N", "10")
    assert automorphism_orbits(g).count == 1
    monkeypatch.setenv("COSPECTRA_MAX_N", "zebra")
    with pytest.raises(Exception, match="COSPECTRA_MAX_N"):
        automorphism_orbits(g)


def test_fixed_vertex_out_of_range():
    g = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(ValueError):
        automorphism_orbits(g, 7)


def test_same_orbit_range_check():
    g = Graph.from_edges(3, [(0, 1)])
    p = automorphism_orbits(g)
    with pytest.raises(ValueError):
        same_orbit(p, 0, 9)
