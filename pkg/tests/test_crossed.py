from math import comb

import pytest
from hypothesis import given, strategies as st

from crossed_coherence import corpus
from crossed_coherence.crossed import check_morphism, identity_morphism
from crossed_coherence.pi import pi, pi_map
from crossed_coherence.simplicial import enumerate_maps, product, std_simplex
from crossed_coherence.tensor import (interval, interval_cube, permute, tensor, tensor_morphisms, tensor_symmetry,
                                      unit_iso, unit_iso_inverse)


def test_pi_of_triangle_has_3_3_1_generators():
    assert pi(std_simplex(2)).counts() == [3, 3, 1]


@pytest.mark.parametrize("name", corpus.corpus_ids())
def test_pi_counts_are_nondegenerate_cells(name):
    K = corpus.get(name)
    top = min(K.effective_top(), 3)
    assert pi(K).counts(top) == K.counts(top)


@pytest.mark.parametrize("name", corpus.corpus_ids())
def test_boundary_of_boundary(name):
    assert pi(corpus.get(name)).check_boundaries(3) == []


def test_word_problem_backends():
    kinds = {name: {type(g).__name__ for g in pi(corpus.get(name)).solver.groups.values()}
             for name in ("torus", "klein", "rp2", "dD2")}
    assert kinds == {"torus": {"AbelianGroup"}, "klein": {"RewritingGroup"}, "rp2": {"FiniteGroup"},
                     "dD2": {"FreeGroup"}}


@pytest.mark.parametrize("r", [1, 2, 3])
def test_cube_counts_and_boundaries(r):
    C = interval_cube(r)
    assert C.counts() == [comb(r, d) * 2 ** (r - d) for d in range(r + 1)]
    assert C.check_boundaries() == []


@pytest.mark.parametrize("a,b", [("D1", "D1"), ("D2", "D1"), ("dD2", "D1"), ("torus", "D1"), ("rp2", "D1")])
def test_tensor_counts_are_convolutions(a, b):
    A, B = pi(corpus.get(a)), pi(corpus.get(b))
    T = tensor(A, B)
    ca, cb = A.counts(), B.counts()
    want = [sum(ca[i] * cb[d - i] for i in range(d + 1) if i < len(ca) and d - i < len(cb))
            for d in range(len(ca) + len(cb) - 1)]
    assert T.counts() == want
    assert T.check_boundaries(3) == []


def test_symmetry_is_an_involution():
    A, B = pi(std_simplex(2)), interval()
    s = tensor_symmetry(A, B)
    t = tensor_symmetry(B, A)
    assert check_morphism(s)[0]
    assert not t.compose(s).differences(identity_morphism(tensor(A, B)))


def test_permutations_compose():
    C = interval_cube(3)
    p, q = permute(C, [1, 2, 0]), permute(C, [2, 0, 1])
    assert not q.compose(p).differences(identity_morphism(C))


def test_unit_isomorphism():
    C = pi(std_simplex(2))
    assert not unit_iso_inverse(C).compose(unit_iso(C)).differences(identity_morphism(C))


SQUARE = product(std_simplex(1), std_simplex(1))
MAPS_IN = enumerate_maps(SQUARE, std_simplex(2))
MAPS_OUT = enumerate_maps(std_simplex(2), std_simplex(1))


@given(st.sampled_from(MAPS_IN), st.sampled_from(MAPS_OUT))
def test_pi_is_a_functor(f, g):
    assert check_morphism(pi_map(f))[0]
    assert not pi_map(g.compose(f)).differences(pi_map(g).compose(pi_map(f)))


@given(st.sampled_from(MAPS_OUT), st.sampled_from(enumerate_maps(std_simplex(1), std_simplex(1))))
def test_tensor_of_morphisms_is_functorial(f, g):
    h = tensor_morphisms(pi_map(f), pi_map(g))
    assert check_morphism(h)[0]
    k = tensor_morphisms(pi_map(f), identity_morphism(interval()))
    m = tensor_morphisms(identity_morphism(interval()), pi_map(g))
    assert not h.differences(m.compose(k))
