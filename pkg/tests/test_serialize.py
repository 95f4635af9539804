import pytest
from hypothesis import given, strategies as st

from crossed_coherence import corpus
from crossed_coherence.errors import ParseError
from crossed_coherence.pi import pi
from crossed_coherence.scategory import poset_category, s_resolution
from crossed_coherence.serialize import HEADER, dump, load_complex, load_scategory, load_simplicial_set
from crossed_coherence.simplicial import product, std_simplex
from crossed_coherence.tensor import interval, tensor


@pytest.mark.parametrize("name", corpus.corpus_ids())
def test_simplicial_set_round_trip(name):
    K = corpus.get(name)
    text = dump(K)
    K2 = load_simplicial_set(text)
    assert dump(K2) == text
    assert K2.counts() == K.counts()


@pytest.mark.parametrize("name", corpus.corpus_ids())
def test_complex_round_trip(name):
    C = pi(corpus.get(name))
    text = dump(C, 3)
    C2 = load_complex(text)
    assert dump(C2, 3) == text
    assert C2.check_boundaries() == []
    for d in range(2, C.effective_top(3) + 1):
        for g in C.gens(d):
            assert C2.boundary(g) == C.boundary(g)


def test_tensor_round_trip():
    T = tensor(pi(std_simplex(2)), interval())
    text = dump(T, 3)
    assert dump(load_complex(text), 3) == text


def test_s_category_round_trip():
    S = s_resolution(poset_category(3), 2)
    name, objects, homs = load_scategory(dump(S))
    assert objects == (0, 1, 2, 3)
    assert all(homs[k].counts() == S.hom(*k).counts(2) for k in homs)


@given(st.lists(st.integers(0, 2), min_size=1, max_size=2))
def test_products_round_trip(dims):
    P = product(*(std_simplex(d) for d in dims))
    text = dump(P, 3)
    assert dump(load_simplicial_set(text), 3) == text


def test_pi_of_triangle_text():
    text = dump(pi(std_simplex(2)))
    lines = text.splitlines()
    assert lines[0] == HEADER
    assert sum(1 for line in lines if line.startswith("  ")) == 7


@pytest.mark.parametrize("mutate,line", [
    (lambda t: t.replace(HEADER, "# other v9"), 1),
    (lambda t: t.replace("((0, 1), ({'simplex'", "((0, 1), ({'simplx'"), 9),
    (lambda t: t.replace("dim 1", "dim one"), 8),
])
def test_parse_errors_carry_line_numbers(mutate, line):
    text = mutate(dump(std_simplex(1)))
    with pytest.raises(ParseError) as e:
        load_simplicial_set(text)
    assert e.value.line == line


def test_bad_faces_are_rejected():
    text = dump(std_simplex(1)).replace("'simplex': ((1,), 0, ())", "'simplex': ((7,), 0, ())")
    with pytest.raises(ParseError):
        load_simplicial_set(text)
