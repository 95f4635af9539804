from hypothesis import given, settings, strategies as st

from crossed_coherence.coherence import (boundary_relations, composite, composition_homotopy, corner_relations,
                                         enrichment_relation, phi, pi_coherent, simplicial_relations,
                                         witness_noncommutativity)
from crossed_coherence.crossed import check_morphism
from crossed_coherence.homotopy import convolve, corner
from crossed_coherence.simplicial import mapping_space_simplices, product, std_simplex

D1 = std_simplex(1)
Q = product(D1, D1)


def failed(results):
    return [r for r in results if not r[1]]


def test_witness_and_composition_homotopy():
    w = witness_noncommutativity()
    assert w.differences
    assert [K.name for K in w.spaces][-1] == "D1xD1"
    H = composition_homotopy(w.f0, w.f1, 1)
    assert check_morphism(H.morphism)[0]
    assert not corner(H, (0,)).differences(w.composite_first.morphism)
    assert not corner(H, (1,)).differences(w.composed_after.morphism)


def test_no_failure_when_last_space_is_interval():
    for K0, K1 in ((D1, D1), (Q, D1)):
        for f0 in mapping_space_simplices(K0, K1, 1):
            for f1 in mapping_space_simplices(K1, D1, 1):
                assert not phi(composite([f0, f1], 1), 1).differences(convolve(phi(f1, 1), phi(f0, 1)))


def test_phi_is_pi_coherent_of_one_map():
    f = mapping_space_simplices(D1, D1, 1)[3]
    assert pi_coherent([f], 1).r == 0
    assert not phi(f, 1).differences(pi_coherent([f], 1))


MAPS = {n: mapping_space_simplices(D1, D1, n) for n in (0, 1)}


@settings(max_examples=8)
@given(st.sampled_from([0, 1]), st.integers(2, 3), st.data())
def test_coherence_relations(n, r, data):
    fs = [data.draw(st.sampled_from(MAPS[n])) for _ in range(r)]
    res = boundary_relations(fs, n) + simplicial_relations(fs, n) + corner_relations(fs, n)
    if n == 0:
        res.append(enrichment_relation(fs))
    assert failed(res) == []


@settings(max_examples=5)
@given(st.data())
def test_coherence_relations_through_a_square(data):
    f0 = data.draw(st.sampled_from(mapping_space_simplices(D1, Q, 1)))
    f1 = data.draw(st.sampled_from(mapping_space_simplices(Q, D1, 1)))
    fs = [f0, f1]
    assert failed(boundary_relations(fs, 1) + simplicial_relations(fs, 1) + corner_relations(fs, 1)) == []
