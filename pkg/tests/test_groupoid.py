import pytest
from hypothesis import given, strategies as st

from crossed_coherence.errors import EndpointMismatch, UnsupportedSolver
from crossed_coherence.groupoid import (AbelianGroup, FiniteGroup, Path, Presentation, PresentationSolver,
                                        RewritingGroup, arrow, compose, free_reduce, identity, inverse,
                                        make_group)


def words(ngens, max_len=8):
    return st.lists(st.tuples(st.integers(0, ngens - 1), st.sampled_from([1, -1])), max_size=max_len)


def perm_mul(p, q):          # apply p then q
    return tuple(q[p[i]] for i in range(len(p)))


S3_GENS = {0: (1, 0, 2), 1: (1, 2, 0)}


def perm_eval(w):
    out = (0, 1, 2)
    for g, e in w:
        p = S3_GENS[g]
        if e == -1:
            p = tuple(sorted(range(3), key=lambda i: p[i]))
        out = perm_mul(out, p)
    return out


def klein_eval(w):
    """Z semidirect Z: (m, n)(m', n') = (m + (-1)^n m', n + n'); a = (1, 0), b = (0, 1)."""
    m, n = 0, 0
    for g, e in w:
        if g == 0:
            m += (-1) ** n * e
        else:
            n += e
    return m, n


S3 = FiniteGroup(2, [((0, 1), (0, 1)), ((1, 1),) * 3, ((0, 1), (1, 1)) * 2])
KLEIN = RewritingGroup(2, [((0, 1), (1, 1), (0, 1), (1, -1))])
Z2 = AbelianGroup(2, [((0, 1), (1, 1), (0, -1), (1, -1))])
Z6 = AbelianGroup(1, [((0, 1),) * 6])


def test_s3_order():
    assert S3.order == 6


@given(words(2), words(2))
def test_finite_normal_forms_match_permutations(u, v):
    assert (S3.normal_form(u) == S3.normal_form(v)) == (perm_eval(u) == perm_eval(v))


@given(words(2), words(2))
def test_rewriting_normal_forms_match_semidirect_product(u, v):
    assert (KLEIN.normal_form(u) == KLEIN.normal_form(v)) == (klein_eval(u) == klein_eval(v))


@given(words(2), words(2))
def test_abelian_normal_forms_match_exponent_sums(u, v):
    def sums(w):
        return tuple(sum(e for g, e in w if g == k) for k in range(2))
    assert (Z2.normal_form(u) == Z2.normal_form(v)) == (sums(u) == sums(v))


@given(words(1, 14))
def test_cyclic_group(w):
    k = sum(e for _, e in w) % 6
    assert Z6.normal_form(w) == Z6.normal_form([(0, 1)] * k)


@given(words(3))
def test_free_reduce_is_idempotent_and_cancels_inverse(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    inv = [(g, -e) for g, e in reversed(w)]
    assert free_reduce(list(w) + inv) == ()


def test_free_backend_rejects_relators():
    with pytest.raises(UnsupportedSolver):
        make_group("free", 1, [((0, 1), (0, 1))])


def test_paths_compose_with_matching_ends():
    p = arrow("x", 0, 1)
    assert compose(p, inverse(p)) == identity(0)
    with pytest.raises(EndpointMismatch):
        compose(p, p)


# a groupoid: filled triangle 0 -> 1 -> 2 and a loop of order 2 at 2
TRIANGLE = compose(arrow("a", 0, 1), arrow("b", 1, 2), inverse(arrow("c", 0, 2)))
PRES = Presentation((0, 1, 2), {"a": (0, 1), "b": (1, 2), "c": (0, 2), "t": (2, 2)},
                    [compose(arrow("t", 2, 2), arrow("t", 2, 2)), TRIANGLE])
SOLVER = PresentationSolver(PRES, "finite")
STEPS = [arrow(g, *PRES.arrows[g], sign=s) for g in PRES.arrows for s in (1, -1)]


@st.composite
def paths(draw, start=0):
    p = identity(start)
    for _ in range(draw(st.integers(0, 6))):
        options = [q for q in STEPS if q.src == p.tgt]
        p = compose(p, draw(st.sampled_from(options)))
    return p


@given(paths())
def test_groupoid_canon_is_idempotent_and_respects_inverses(p):
    c = SOLVER.canon(p)
    assert SOLVER.canon(c) == c
    assert (c.src, c.tgt) == (p.src, p.tgt)
    assert SOLVER.is_trivial(compose(p, inverse(p)))


def test_groupoid_relation():
    t = arrow("t", 2, 2)
    assert SOLVER.is_trivial(compose(t, t))
    assert not SOLVER.is_trivial(t)
    assert SOLVER.is_trivial(TRIANGLE)
    u = compose(arrow("c", 0, 2), t, inverse(arrow("c", 0, 2)))
    assert isinstance(u, Path) and not SOLVER.is_trivial(u)


# the Klein bottle corpus item: triangles force c = a b and c a b^-1 = 1
def _klein_letter(g, e):
    return {"a": [(0, e)], "b": [(1, e)], "c": [(0, 1), (1, 1)] if e == 1 else [(1, -1), (0, -1)]}[g]


def klein_quotient(w, M=4, N=4):
    """Image in the finite quotient Z/M semidirect Z/N (N even)."""
    m, n = klein_eval([x for g, e in w for x in _klein_letter(g, e)])
    return m % M, n % N


@given(st.lists(st.tuples(st.sampled_from("abc"), st.sampled_from([1, -1])), min_size=6, max_size=6),
       st.lists(st.tuples(st.sampled_from("abc"), st.sampled_from([1, -1])), min_size=6, max_size=6))
def test_klein_item_words_against_finite_quotient(u, v):
    from crossed_coherence import corpus
    from crossed_coherence.pi import pi

    C = pi(corpus.get("klein"))

    def path(w):
        return compose(identity("v"), *(arrow(g, "v", "v", sign=e) for g, e in w))

    same = C.canon(path(u)) == C.canon(path(v))
    if same:
        assert klein_quotient(u) == klein_quotient(v)
    full = [x for g, e in u for x in _klein_letter(g, e)], [x for g, e in v for x in _klein_letter(g, e)]
    assert same == (klein_eval(full[0]) == klein_eval(full[1]))
