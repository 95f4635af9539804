import pytest
from hypothesis import given, settings, strategies as st

from crossed_coherence.adjunction import (a_star, b_star, b_star_a_star_check, b_star_a_star_level_one,
                                          coherent_a_star_checks, coherent_b_star_checks, factorization_checks,
                                          h_endpoint_checks, h_simplicial_checks, lemma_interchange_check,
                                          reconstruction_checks)
from crossed_coherence.nerve import hom_simplices
from crossed_coherence.pi import pi
from crossed_coherence.simplicial import mapping_space_simplices, std_simplex

D0, D1 = std_simplex(0), std_simplex(1)
P1 = pi(D1)
HOM = {n: hom_simplices(P1, P1, n) for n in (0, 1)}
MAPS = {n: mapping_space_simplices(D1, D1, n) for n in (0, 1)}


def failed(results):
    return [r for r in results if not r[1]]


@pytest.mark.parametrize("K", [D0, D1])
@pytest.mark.parametrize("C", [pi(D0), P1])
@pytest.mark.parametrize("n", [0, 1])
def test_b_star_a_star_is_identity_everywhere(K, C, n):
    for g in hom_simplices(pi(K), C, n):
        assert b_star_a_star_check(g)[1]


@settings(max_examples=10)
@given(st.sampled_from([0, 1]), st.data())
def test_sdr_homotopy(n, data):
    F = a_star(data.draw(st.sampled_from(HOM[n])))
    assert failed(h_endpoint_checks(F, n)) == []
    if n:
        assert failed(h_simplicial_checks(F, (0, 1), n)) == []


@settings(max_examples=8)
@given(st.sampled_from([0, 1]), st.data())
def test_factorizations(n, data):
    g, k = (data.draw(st.sampled_from(HOM[n])) for _ in range(2))
    F = a_star(data.draw(st.sampled_from(HOM[n])))
    f = data.draw(st.sampled_from(MAPS[n]))
    assert failed(factorization_checks(g, F) + reconstruction_checks(k, f)) == []


@settings(max_examples=10)
@given(st.sampled_from([0, 1]), st.data())
def test_interchange_lemma(n, data):
    f = data.draw(st.sampled_from(MAPS[n]))
    g = data.draw(st.sampled_from(HOM[n]))
    assert lemma_interchange_check(f, g)


@settings(max_examples=6)
@given(st.sampled_from([0, 1]), st.data())
def test_coherent_b_star(n, data):
    f1, f2 = (data.draw(st.sampled_from(MAPS[n])) for _ in range(2))
    F = a_star(data.draw(st.sampled_from(HOM[n])))
    for chain in ([F], [f1, F], [f1, f2, F]):
        assert failed(coherent_b_star_checks(chain, n)) == []


@settings(max_examples=6)
@given(st.sampled_from([0, 1]), st.data())
def test_coherent_a_star_and_level_one_identity(n, data):
    f = data.draw(st.sampled_from(MAPS[n]))
    g = data.draw(st.sampled_from(HOM[n]))
    assert failed(coherent_a_star_checks(f, g)) == []
    assert failed(b_star_a_star_level_one(f, g)) == []


def test_b_star_of_constant_map():
    # the constant vertex map lands on a constant morphism
    F = a_star(HOM[0][0])
    g = b_star(F, 0)
    assert g.n == 0 and g.r == 0
