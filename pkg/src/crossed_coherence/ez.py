"""The Eilenberg-Zilber deformation retract for crossed complexes.

For a product P = K_0 x ... x K_r (flattened) and a split position j,

* ``split_a(P, j)``: pi(P) -> pi(left) (x) pi(right), front/back faces;
* ``split_b(P, j)``: pi(left) (x) pi(right) -> pi(P), signed shuffles;
* ``split_h(P, j)``: pi(P) (x) pi(D1) -> pi(P), a homotopy from the identity
  (at vertex 0 of the interval) to b.a (at vertex 1).

In dimension 2 the boundary word of an image is forced by the images of
arrows; the vector is the pushed-forward chain formula.  Homotopy terms are
computed on a model cell and pushed along the characteristic maps; their
twists are model paths back to vertex 0, taken one factor at a time.
"""

from __future__ import annotations

from functools import lru_cache

from .crossed import CxElement, CxMorphism, _acc
from .errors import CrossedError
from .groupoid import Path, compose, identity, inverse
from .models import homotopy_model, shuffles
from .pi import pi
from .simplicial import Simplex, SimplicialSet, assemble, components, factors_of, product
from .tensor import interval, lift_path, tensor


def halves(P: SimplicialSet, j: int):
    F = factors_of(P)
    if not 0 < j < len(F):
        raise CrossedError(f"split position {j} out of range for {len(F)} factors")
    return product(*F[:j]), product(*F[j:])


def _forced(f: CxMorphism, g, terms: dict) -> CxElement:
    """Image of generator g of dimension >= 2 with the given raw vector."""
    S, T = f.source, f.target
    d = S.gen_dim(g)
    x = f.on_object(S.gen_base(g))
    word = f.on_path(S.boundary(g).path).letters if d == 2 else ()
    return CxElement(d, x, x, word, T.make_terms(terms, x))


@lru_cache(maxsize=None)
def split_a(P: SimplicialSet, j: int) -> CxMorphism:
    L, R = halves(P, j)
    S, PL, PR = pi(P), pi(L), pi(R)
    T = tensor(PL, PR)

    def sides(s: Simplex):
        comps = components(P, s)
        return assemble(L, comps[:j]), assemble(R, comps[j:])

    def on_obj(v):
        x, y = sides(P.simplex(v))
        return (x.base, y.base)

    def on_gen(c):
        s = P.simplex(c)
        m = s.dim
        X, Y = sides(s)
        x0 = L.vertex(X, 0)
        if m == 1:
            y1 = R.vertex(Y, 1)
            p = lift_path(PR.edge_path(Y), 1, 1, (x0, None))
            q = lift_path(PL.edge_path(X), 0, 1, (None, y1))
            return T.path_element(compose(p, q))
        raw = {}
        for i in range(m + 1):
            front = L.apply(X, tuple(range(i + 1)))
            back = R.apply(Y, tuple(range(i, m + 1)))
            if front.degeneracies or back.degeneracies:
                continue
            tw = lift_path(inverse(PR.edge_path(R.apply(Y, (0, i)))), 1, 1, (x0, None)) if i else \
                identity((x0, R.vertex(Y, 0)))
            _acc(raw, ((front.base, back.base), tw), 1)
        return _forced(f, c, raw)

    f = CxMorphism(S, T, on_obj, on_gen, name=f"a{j}")
    return f


@lru_cache(maxsize=None)
def split_b(P: SimplicialSet, j: int) -> CxMorphism:
    L, R = halves(P, j)
    PL, PR, S = pi(L), pi(R), pi(P)
    T = tensor(PL, PR)

    def join(x: Simplex, y: Simplex) -> Simplex:
        return assemble(P, list(components(L, x)) + list(components(R, y)))

    def on_obj(v):
        return join(L.simplex(v[0]), R.simplex(v[1])).base

    def shuffle_chain(x: Simplex, y: Simplex) -> dict:
        out = {}
        p, q = x.dim, y.dim
        for mu, nu, sg in shuffles(p, q):
            a = x
            for i in nu:
                a = L.degeneracy(a, i)
            b = y
            for i in mu:
                b = R.degeneracy(b, i)
            z = join(a, b)
            if not z.degeneracies:
                _acc(out, z.base, sg)
        return out

    def on_gen(g):
        x, y = L.simplex(g[0]), R.simplex(g[1])
        d = x.dim + y.dim
        chain = shuffle_chain(x, y)
        if d == 1:
            (z, k), = chain.items()
            return S.path_element(S.arrow_path(z))
        v = on_obj((L.vertex(x, 0), R.vertex(y, 0)))
        raw = {(z, identity(v)): k for z, k in chain.items()}
        return _forced(f, g, raw)

    f = CxMorphism(T, S, on_obj, on_gen, name=f"b{j}")
    return f


def _model_data(P: SimplicialSet, s: Simplex):
    """Base cells and model sequences of the components of a simplex of P."""
    F = factors_of(P)
    comps = components(P, s)
    bases = tuple(Simplex(c.base, c.base_dim) for c in comps)
    model = tuple(c.surjection() for c in comps)
    return F, bases, model


def _push_cell(P, F, bases, seqs) -> Simplex:
    return assemble(P, [K.apply(b, seq) for K, b, seq in zip(F, bases, seqs)])


def _back_to_zero(P, F, bases, start) -> "Path":
    """Pushed model path from the model vertex ``start`` to vertex 0, factor by factor."""
    S = pi(P)
    cur = [K.vertex(b, v) for K, b, v in zip(F, bases, start)]
    pieces = []
    for k, (K, b, v) in enumerate(zip(F, bases, start)):
        if v == 0:
            continue
        e = K.apply(b, (0, v))
        comps = [Simplex(cur[i], 0, (0,)) if i != k else e for i in range(len(F))]
        pieces.append(inverse(S.edge_path(assemble(P, comps))))
        cur[k] = K.vertex(b, 0)
    if not pieces:
        return identity(assemble(P, [Simplex(c, 0) for c in cur]).base)
    return compose(*pieces)


@lru_cache(maxsize=None)
def split_h(P: SimplicialSet, j: int) -> CxMorphism:
    S = pi(P)
    I = interval()
    T = tensor(S, I)
    a, b = split_a(P, j), split_b(P, j)
    ba = b.compose(a)

    def on_obj(v):
        return v[0]

    def on_gen(g):
        c, t = g
        if t == (0,):
            return S.gen_element(c)
        if t == (1,):
            return ba.image(c)
        s = P.simplex(c)
        if s.dim == 0:
            return S.path_element(identity(c))
        F, bases, model = _model_data(P, s)
        raw = {}
        for cell, k in homotopy_model(model, j):
            z = _push_cell(P, F, bases, cell)
            if z.degeneracies:
                continue
            tw = _back_to_zero(P, F, bases, tuple(seq[0] for seq in cell))
            _acc(raw, (z.base, tw), k)
        return _forced(f, g, raw)

    f = CxMorphism(T, S, on_obj, on_gen, name=f"h{j}")
    return f


def ez_a(K: SimplicialSet, L: SimplicialSet) -> CxMorphism:
    return split_a(product(K, L), len(factors_of(K)))


def ez_b(K: SimplicialSet, L: SimplicialSet) -> CxMorphism:
    return split_b(product(K, L), len(factors_of(K)))


def ez_h(K: SimplicialSet, L: SimplicialSet):
    """h_{K,L} as a 1-fold homotopy on pi(K x L)."""
    from .homotopy import RNHomotopy      # homotopy imports this module
    P = product(K, L)
    return RNHomotopy(pi(P), 1, None, split_h(P, len(factors_of(K))))
