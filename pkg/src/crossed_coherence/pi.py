"""The fundamental crossed complex of a simplicial set and of a simplicial map.

Conventions (one table, validated by boundary-of-boundary checks and the
deformation retract suite):

* an edge runs from vertex 0 to vertex 1;
* a generator of dimension >= 2 is based at vertex 0;
* a triangle has boundary loop  d2 . d0 . d1^-1;
* for dimension n >= 3,  delta x = sum (-1)^i d_i x, where the d_0 term is
  moved back to vertex 0 along the inverse of the edge 01;
* degenerate simplices give identities and zeros.
"""

from __future__ import annotations

from functools import lru_cache

from .crossed import CxElement, CxMorphism, FreeCrossedComplex
from .groupoid import Path, ProductSolver, compose, free_reduce, identity, inverse
from .simplicial import (ProductSet, Simplex, SimplicialMap, SimplicialSet, std_simplex)


class PiComplex(FreeCrossedComplex):
    def __init__(self, K: SimplicialSet, dim_cap: int | None = None):
        self.K = K
        self.name = f"pi({K.name})"
        self.dim_cap = dim_cap if dim_cap is not None else K.dim_cap
        self.solver_kind = K.solver if K.solver not in (None, "product", "union") else "auto"

    def objects(self):
        return self.K.cells(0)

    def _gens(self, d):
        return self.K.cells(d)

    def gen_dim(self, g):
        return self.K.cell_dim(g)

    def top_dim(self):
        return self.K.top_dim()

    def endpoints(self, g):
        s = self.K.simplex(g)
        return (self.K.vertex(s, 0), self.K.vertex(s, 1))

    def base(self, g):
        return self.K.vertex(self.K.simplex(g), 0)

    def edge_path(self, s: Simplex) -> Path:
        """The path of a (possibly degenerate) 1-simplex."""
        if s.degeneracies:
            return identity(s.base)
        return self.arrow_path(s.base)

    def simplex_element(self, s: Simplex) -> CxElement:
        d = s.dim
        if d == 0:
            return self.obj(s.base)
        if d == 1:
            return self.path_element(self.edge_path(s))
        if s.degeneracies:
            return self.zero(d, self.K.vertex(s, 0))
        return self.gen_element(s.base)

    def _boundary(self, g):
        K = self.K
        s = K.simplex(g)
        d = s.dim
        if d == 2:
            e01, e12, e02 = (self.edge_path(K.apply(s, ij)) for ij in ((0, 1), (1, 2), (0, 2)))
            return self.path_element(compose(e01, e12, inverse(e02)))
        x = K.vertex(s, 0)
        back = inverse(self.edge_path(K.apply(s, (0, 1))))
        items = []
        for i in range(d + 1):
            f = self.simplex_element(K.face(s, i))
            if i == 0:
                f = self.act(f, back)
            items.append(((-1) ** i, f))
        return self.add_vectors(items, d - 1, x)

    def _make_solver(self):
        if isinstance(self.K, ProductSet):
            return _product_solver(self.K)
        return super()._make_solver()


def _product_solver(P: ProductSet) -> ProductSolver:
    factors = P.factors
    k = len(factors)

    def project(p: Path):
        out = []
        for i in range(k):
            letters = []
            for cell, e in p.letters:
                comp = cell[i]
                if not comp.degeneracies:
                    letters.append((comp.base, e))
            out.append(Path(p.src[i].base, p.tgt[i].base, tuple(letters)))
        return out

    def lift(i, q: Path, objs):
        letters = []
        for g, e in q.letters:
            cell = tuple(Simplex(g, 1) if j == i else Simplex(objs[j], 0, (0,)) for j in range(k))
            letters.append((cell, e))
        src = tuple(Simplex(q.src if j == i else objs[j], 0) for j in range(k))
        tgt = tuple(Simplex(q.tgt if j == i else objs[j], 0) for j in range(k))
        return Path(src, tgt, free_reduce(letters))

    return ProductSolver([pi(f).solver for f in factors], project, lift)


@lru_cache(maxsize=None)
def pi(K: SimplicialSet) -> PiComplex:
    return PiComplex(K)


def simplex_element(K: SimplicialSet, s: Simplex) -> CxElement:
    return pi(K).simplex_element(s)


def pi_map(f: SimplicialMap) -> CxMorphism:
    S, T = pi(f.source), pi(f.target)
    K = f.source
    return CxMorphism(S, T,
                      lambda x: f(K.simplex(x)).base,
                      lambda g: T.simplex_element(f(K.simplex(g))),
                      name=f"pi({f.name})")


def pi_simplex(n: int) -> PiComplex:
    """pi of the standard n-simplex."""
    return pi(std_simplex(n))
