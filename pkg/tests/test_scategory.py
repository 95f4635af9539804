import pytest

from crossed_coherence.errors import CrossedError
from crossed_coherence.scategory import (FiniteCategory, SFunctor, coherent_pi_diagram, cube_count_check,
                                         discrete_scategory, poset_category, s_resolution)
from crossed_coherence.simplicial import Simplex, SimplicialMap, identity_map, std_simplex

from oracles import boolean_chain_counts

# nondegenerate cells of (D[1])^m, from boolean_chain_counts
CUBE_COUNTS = {0: [1], 1: [2, 1], 2: [4, 5, 2], 3: [8, 19, 18, 6], 4: [16, 65, 110, 84, 24]}


def test_frozen_counts_match_oracle():
    for m, want in CUBE_COUNTS.items():
        assert boolean_chain_counts(m) == want


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_s_resolution_homs_are_cubes(n):
    name, ok, (got, want) = cube_count_check(n)
    assert ok
    assert got == CUBE_COUNTS[n - 1]


def test_s_resolution_axioms():
    S = s_resolution(poset_category(3), dim_cap=2)
    assert [r for r in S.check(2) if not r[1]] == []
    for x, y in S.homs:
        assert S.hom(x, y).check_identities() == []


def test_discrete_scategory():
    S = discrete_scategory(poset_category(2))
    assert [r for r in S.check(1) if not r[1]] == []


def test_category_validation():
    with pytest.raises(CrossedError):
        FiniteCategory("bad", (0, 1), {"f": (0, 1), "g": (1, 0)}, {("g", "f"): "1_0", ("f", "g"): "1_1"})
    with pytest.raises(CrossedError):
        FiniteCategory("missing", (0, 1, 2), {"f": (0, 1), "g": (1, 2)})
    with pytest.raises(CrossedError):
        FiniteCategory("ends", (0,), {"f": (0, 3)})


def test_strings_of_a_poset():
    A = poset_category(3)
    # strings 0 -> 3 correspond to subsets of the intermediate objects {1, 2}
    assert len(A.strings(0, 3)) == 4
    assert A.strings(1, 1) == [()]


def test_coherent_pi_diagram():
    D1 = std_simplex(1)
    A = poset_category(2)
    c0 = SimplicialMap(D1, D1, lambda c: D1.apply(Simplex((0,), 0), (0,) * len(c)), name="c0")
    idm = identity_map(D1)
    K = SFunctor(A, {0: D1, 1: D1, 2: D1}, {"01": c0, "12": idm, "02": idm.compose(c0)})
    assert all(r[1] for r in K.check())
    assert [r for r in coherent_pi_diagram(K, 2).check(2) if not r[1]] == []
