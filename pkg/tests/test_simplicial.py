import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from crossed_coherence import corpus
from crossed_coherence.simplicial import (Simplex, SimplicialMap, boundary_subcomplex, enumerate_maps,
                                          identity_map, mapping_space_simplices, monotone_map, product,
                                          std_simplex)


def chain_counts(dims, top):
    """Nondegenerate simplices of a product of simplices: strict chains in the product poset."""
    verts = list(itertools.product(*(range(d + 1) for d in dims)))

    def less(u, v):
        return u != v and all(a <= b for a, b in zip(u, v))

    out = []
    for k in range(top + 1):
        n = 0
        for chain in itertools.combinations(sorted(verts), k + 1):
            if all(less(chain[i], chain[i + 1]) for i in range(k)):
                n += 1
        out.append(n)
    return out


@pytest.mark.parametrize("name", corpus.corpus_ids())
def test_corpus_identities(name):
    K = corpus.get(name)
    assert K.check_identities() == []


def test_standard_simplex_counts():
    for n in range(5):
        assert std_simplex(n).counts() == [comb(n + 1, k + 1) for k in range(n + 1)]


def test_boundary_counts():
    assert boundary_subcomplex(2).counts() == [3, 3]
    assert boundary_subcomplex(3).counts() == [4, 6, 4]


@pytest.mark.parametrize("dims", [(1, 1), (2, 1), (1, 1, 1), (2, 2)])
def test_product_counts_match_chain_oracle(dims):
    P = product(*(std_simplex(d) for d in dims))
    top = sum(dims)
    assert P.counts(top) == chain_counts(dims, top)
    assert P.check_identities() == []


def test_euler_characteristics():
    expected = {"D0": 1, "D1": 1, "D2": 1, "dD2": 0, "dD3": 2, "torus": 0, "klein": 0, "rp2": 1, "D1xD1": 1}
    for name, chi in expected.items():
        assert corpus.get(name).euler_characteristic() == chi


def test_monotone_maps_into_simplex():
    # order preserving maps [m] -> [n] number C(m + n + 1, m + 1)
    for m, n in [(0, 1), (1, 1), (1, 2), (2, 2)]:
        assert len(enumerate_maps(std_simplex(m), std_simplex(n))) == comb(m + n + 1, m + 1)


def test_mapping_space_of_interval():
    # S(D1, D1)_n = monotone maps [1] x [n] -> [1]: upsets of the grid poset
    assert [len(mapping_space_simplices(std_simplex(1), std_simplex(1), n)) for n in range(3)] == [3, 6, 10]


maps_d1_d1 = st.sampled_from(enumerate_maps(product(std_simplex(1), std_simplex(1)), std_simplex(1)))


@given(maps_d1_d1, st.sampled_from(enumerate_maps(std_simplex(1), std_simplex(1))))
def test_enumerated_maps_are_simplicial_and_compose(f, g):
    assert f.check() == []
    h = g.compose(f)
    assert h.check() == []
    assert identity_map(std_simplex(1)).compose(f).equals(f)


P = product(std_simplex(2), std_simplex(1))


@given(st.integers(0, 3), st.data())
def test_product_face_degeneracy_identities(k, data):
    s = data.draw(st.sampled_from(P.simplices(k)))
    if k >= 2:
        i = data.draw(st.integers(0, k - 1))
        j = data.draw(st.integers(i + 1, k))
        assert P.face(P.face(s, j), i) == P.face(P.face(s, i), j - 1)
    j = data.draw(st.integers(0, k))
    assert P.face(P.degeneracy(s, j), j) == s
    assert P.face(P.degeneracy(s, j), j + 1) == s


def test_monotone_map_from_vertex_function():
    D2 = std_simplex(2)
    f = monotone_map(D2, std_simplex(1), lambda v: 0 if v < 2 else 1)
    assert f.check() == []
    assert f(D2.top()) == std_simplex(1).from_sequence([0, 0, 1])


def test_explicit_map_table():
    D0, D1 = std_simplex(0), std_simplex(1)
    inc = SimplicialMap(D0, D1, {(0,): Simplex((1,), 0)})
    assert inc.check() == []
