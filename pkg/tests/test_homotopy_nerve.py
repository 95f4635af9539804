import itertools

import pytest
from hypothesis import given, settings, strategies as st

from crossed_coherence.crossed import identity_morphism
from crossed_coherence.errors import InfiniteHom
from crossed_coherence.homotopy import (convolve, homotopy_face, identity_simplex, simplex_degeneracy,
                                        simplex_face)
from crossed_coherence.nerve import (counit_eps, hom_simplices, zeta_associativity_square, nerve_enriched, nerve_set,
                                     ss_enriched_compose, unit_eta, zeta, zeta_diagonal)
from crossed_coherence.pi import pi, pi_map
from crossed_coherence.simplicial import std_simplex
from crossed_coherence.tensor import interval

P0, P1, P2 = pi(std_simplex(0)), pi(std_simplex(1)), pi(std_simplex(2))


@pytest.mark.parametrize("n", [0, 1, 2])
def test_hom_simplex_counts_into_indiscrete_targets(n):
    # a morphism into pi(1) is fixed by its object function: 2^(objects of the source)
    assert len(hom_simplices(P1, P1, n)) == 4 ** (n + 1)
    assert len(hom_simplices(P0, P1, n)) == 2 ** (n + 1)
    assert len(hom_simplices(P1, P0, n)) == 1


def test_nerve_counts():
    N = nerve_set(P1, 3)
    assert N.counts() == [2, 2, 2, 2]          # alternating vertex sequences
    assert N.check_identities() == []
    assert nerve_set(P0, 3).counts() == [1]


def test_nerve_of_a_two_cell_target_is_refused():
    with pytest.raises(InfiniteHom):
        hom_simplices(P1, P2, 1)


@pytest.mark.parametrize("C", [P0, P1])
def test_unit_counit_triangle(C):
    K = C.K
    eps = counit_eps(nerve_set(pi(K), 3))
    assert not eps.compose(pi_map(unit_eta(K))).differences(identity_morphism(pi(K)))


@pytest.mark.parametrize("C", [P0, P1])
def test_zeta_square(C):
    D1 = std_simplex(1)
    upper, lower, both = zeta_associativity_square(C, D1, D1)
    assert upper.differences(lower, 2) == []
    assert lower.differences(both, 2) == []


def test_zeta_matches_diagonal_form():
    D1 = std_simplex(1)
    N = nerve_set(P1, 3)
    z = zeta(P1, D1, N=N)
    P = z.source
    for k in range(3):
        for s in P.simplices(k):
            m, y = P.components(s)
            assert not z.at(s).differences(zeta_diagonal(P1, D1, N.morphism_of(m), y))


HOM1 = {n: hom_simplices(P1, P1, n) for n in (0, 1, 2)}


@settings(max_examples=20)
@given(st.sampled_from([0, 1, 2]), st.data())
def test_convolution_is_associative_and_unital(n, data):
    f, g, h = (data.draw(st.sampled_from(HOM1[n])) for _ in range(3))
    one = identity_simplex(P1, n)
    assert not convolve(one, f).differences(f)
    assert not convolve(f, one).differences(f)
    assert not convolve(h, convolve(g, f)).differences(convolve(convolve(h, g), f))


@settings(max_examples=20)
@given(st.sampled_from([1, 2]), st.data())
def test_convolution_commutes_with_simplicial_operators(n, data):
    f, g = (data.draw(st.sampled_from(HOM1[n])) for _ in range(2))
    i = data.draw(st.integers(0, n))
    assert not simplex_face(convolve(g, f), i).differences(convolve(simplex_face(g, i), simplex_face(f, i)))
    j = data.draw(st.integers(0, n))
    assert not simplex_degeneracy(convolve(g, f), j).differences(
        convolve(simplex_degeneracy(g, j), simplex_degeneracy(f, j)))


@settings(max_examples=20)
@given(st.sampled_from([0, 1, 2]), st.data())
def test_enriched_nerve_preserves_composition(n, data):
    f, g = (data.draw(st.sampled_from(HOM1[n])) for _ in range(2))
    lhs = nerve_enriched(convolve(g, f))
    rhs = ss_enriched_compose(nerve_enriched(g), nerve_enriched(f), n, nerve_set(P1))
    assert lhs.equals(rhs, 2)


def test_homotopy_faces_of_a_degenerate_homotopy():
    from crossed_coherence.homotopy import degenerate_homotopy
    f = identity_morphism(interval())
    h = degenerate_homotopy(f, 2)
    for i, a in itertools.product((1, 2), (0, 1)):
        assert not homotopy_face(h, i, a).differences(degenerate_homotopy(f, 1))
