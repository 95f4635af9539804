import pytest
from hypothesis import given, settings, strategies as st

from crossed_coherence import corpus
from crossed_coherence.crossed import check_morphism, identity_morphism
from crossed_coherence.ez import split_a, split_b, split_h
from crossed_coherence.multi import (Splitting, assoc_interchange_check, corner_relations, face_relations,
                                     multi_a, multi_b, sdr_relations, split_relations)
from crossed_coherence.pi import pi, pi_map
from crossed_coherence.simplicial import enumerate_maps, product, product_map, std_simplex
from crossed_coherence.tensor import tensor_morphisms


def failed(results):
    return [(name, diffs) for name, ok, diffs in results if not ok]


PAIRS = [(k, l) for k in ("D1", "D2", "dD2") for l in ("D0", "D1")] + [("D1", "D1xD1"), ("torus", "D1"),
                                                                       ("rp2", "D1"), ("D1xD1", "D1")]


@pytest.mark.parametrize("k,l", PAIRS)
def test_deformation_retraction(k, l):
    assert failed(sdr_relations(corpus.get(k), corpus.get(l))) == []


@pytest.mark.parametrize("triple", [("D1", "D1", "D1"), ("D2", "D1", "D0"), ("D0", "dD2", "D1")])
def test_associativity_and_interchange(triple):
    assert failed(assoc_interchange_check(*(corpus.get(x) for x in triple))) == []


@pytest.mark.parametrize("blocks", [("D1", "D1", "D1"), ("dD2", "D1", "D0")])
def test_multi_relations_r2(blocks):
    S = Splitting.of_blocks([corpus.get(x) for x in blocks])
    assert failed(face_relations(S) + split_relations(S) + corner_relations(S)) == []


def test_split_maps_are_morphisms():
    P = product(std_simplex(2), std_simplex(1))
    for f in (split_a(P, 1), split_b(P, 1), split_h(P, 1)):
        ok, report = check_morphism(f)
        assert ok, report


def test_multi_ab_is_identity():
    S = Splitting.of_blocks([std_simplex(1)] * 3)
    a, b = multi_a(S), multi_b(S)
    assert not a.compose(b).differences(identity_morphism(a.target))


D1, D2 = std_simplex(1), std_simplex(2)
ENDO = enumerate_maps(D1, D1)
TO_D1 = enumerate_maps(D2, D1)


@settings(max_examples=15)
@given(st.sampled_from(TO_D1), st.sampled_from(ENDO))
def test_split_maps_are_natural(f, g):
    """a . pi(f x g) = (pi f (x) pi g) . a and likewise for b."""
    src, tgt = product(D2, D1), product(D1, D1)
    fg = product_map([f, g])
    lhs = split_a(tgt, 1).compose(pi_map(fg))
    rhs = tensor_morphisms(pi_map(f), pi_map(g)).compose(split_a(src, 1))
    assert not lhs.differences(rhs)
    lhs = pi_map(fg).compose(split_b(src, 1))
    rhs = split_b(tgt, 1).compose(tensor_morphisms(pi_map(f), pi_map(g)))
    assert not lhs.differences(rhs)


def test_two_factor_entry_points():
    from crossed_coherence.ez import ez_a, ez_b, ez_h
    from crossed_coherence.homotopy import homotopy_face
    K, L = std_simplex(2), std_simplex(1)
    a, b, h = ez_a(K, L), ez_b(K, L), ez_h(K, L)
    assert not a.compose(b).differences(identity_morphism(a.target))
    assert not homotopy_face(h, 1, 0).morphism.differences(identity_morphism(h.base))
    assert not homotopy_face(h, 1, 1).morphism.differences(b.compose(a))
