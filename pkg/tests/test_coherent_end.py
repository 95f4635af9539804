import pytest

from crossed_coherence.coherent_end import (brute_force_count, coh_space, compatibility_checks,
                                            composable_strings)
from crossed_coherence.scategory import SFunctor, one_object_category, poset_category, two_object_category
from crossed_coherence.simplicial import Simplex, SimplicialMap, identity_map, mapping_space_simplices, std_simplex

D0, D1 = std_simplex(0), std_simplex(1)
A = two_object_category()
F = SFunctor(A, {0: D0, 1: D1}, {"u": SimplicialMap(D0, D1, {(0,): Simplex((0,), 0)}, name="inc0")})
G = SFunctor(A, {0: D1, 1: D1}, {"u": identity_map(D1)})

# Level 1 is determined by level 0: a vertex phi0 of D1 (n = 0) or an edge (n = 1)
# and a map phi1 in S(D1, D1)_n, subject to phi0 <= phi1 restricted to vertex 0.
# n = 0: phi0 = 0 allows 3 maps, phi0 = 1 allows 1: total 4.
# n = 1: restricted columns of the 6 maps are 00 x3, 01 x2, 11 x1; phi0 = 00, 01, 11
# allow 6, 3, 1: total 10.
EXPECTED = {0: 4, 1: 10}


@pytest.mark.parametrize("n", [0, 1])
def test_level_one_counts(n):
    assert len(coh_space(A, F, G, 1, n)) == EXPECTED[n]
    assert brute_force_count(A, F, G, n) == EXPECTED[n]


@pytest.mark.parametrize("n", [0, 1])
@pytest.mark.parametrize("P", [0, 1, 2])
def test_stored_families_are_compatible(n, P):
    Ts = coh_space(A, F, G, P, n)
    assert Ts
    for T in Ts:
        assert all(ok for _, ok, _ in compatibility_checks(T))
    if P == 2:
        # every string of length two contains an identity, so level 2 is forced
        assert len(Ts) == EXPECTED[n]


@pytest.mark.parametrize("n", [0, 1])
def test_one_object_level_zero_is_mapping_space(n):
    O = one_object_category()
    K = SFunctor(O, {0: D1}, {})
    assert len(coh_space(O, K, K, 0, n)) == len(mapping_space_simplices(D1, D1, n))


def test_string_counts():
    # strings of length p in [2] with identities: monotone sequences of length p + 1
    assert [len(composable_strings(poset_category(2), p)) for p in range(4)] == [3, 6, 10, 15]
