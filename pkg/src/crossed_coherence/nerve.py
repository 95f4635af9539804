"""The nerve, its unit and counit, zeta and the enriched nerve.

An n-simplex of N(C) is a morphism pi(n) -> C.  Enumeration is exact when
the arrows of C form a forest and C has no higher generators (then every
hom-set of its groupoid has at most one element); other targets raise
InfiniteHom.  Maps into nerves whose target cannot be enumerated are kept
as ``NerveMap`` values: functions from simplices to morphisms.

A simplex of the enriched hom S(K, NC) in dimension n is a simplicial map
K x D[n] -> NC.  Its transpose is the morphism pi(K x D[n]) -> C.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable

from .crossed import CxMorphism, FreeCrossedComplex, identity_morphism
from .errors import BudgetExceeded, CrossedError, InfiniteHom
from .ez import split_a
from .groupoid import compose, identity, inverse
from .homotopy import RNHomotopy, aw_diagonal, rn_source
from .pi import pi, pi_map
from .simplicial import (Realized, assemble, Simplex, SimplicialMap, SimplicialSet, components, factors_of,
                         product, std_simplex)
from .tensor import tensor, tensor_morphisms


# -- operators on standard simplices ------------------------------------------

@lru_cache(maxsize=None)
def ordinal_map(m: int, n: int, phi: tuple) -> SimplicialMap:
    Dm, Dn = std_simplex(m), std_simplex(n)
    return SimplicialMap(Dm, Dn, lambda c: Dn.from_sequence([phi[v] for v in c]), name=f"op{phi}")


@lru_cache(maxsize=None)
def pi_operator(m: int, n: int, phi: tuple) -> CxMorphism:
    return pi_map(ordinal_map(m, n, phi))


def characteristic_map(K: SimplicialSet, s: Simplex) -> SimplicialMap:
    """D[d] -> K classifying the d-simplex s."""
    D = std_simplex(s.dim)
    return SimplicialMap(D, K, lambda c: K.apply(s, c), name="chi")


# -- enumeration of morphisms ---------------------------------------------------

def _forest_paths(D: FreeCrossedComplex):
    """Tree paths from each object to its component root; None if not a forest."""
    objs = list(D.objects())
    adj = {x: [] for x in objs}
    for g in D.gens(1):
        s, t = D.endpoints(g)
        adj[s].append((t, D.arrow_path(g)))
        adj[t].append((s, inverse(D.arrow_path(g))))
    to_root, comp = {}, {}
    edges_used = 0
    for r in objs:
        if r in comp:
            continue
        comp[r] = r
        to_root[r] = identity(r)
        stack = [r]
        while stack:
            x = stack.pop()
            for y, p in adj[x]:
                if y not in comp:
                    comp[y] = r
                    to_root[y] = compose(inverse(p), to_root[x])
                    stack.append(y)
                    edges_used += 1
    if edges_used != len(D.gens(1)):
        return None
    return to_root, comp


def enumerate_morphisms(C: FreeCrossedComplex, D: FreeCrossedComplex, budget: int = 200000,
                        cap: int | None = None) -> list:
    """All morphisms C -> D, for targets with forest arrows and nothing above dimension 1."""
    top_d = D.effective_top(cap if cap is not None else 3)
    for d in range(2, top_d + 1):
        if D.gens(d):
            raise InfiniteHom(f"{D.name} has generators in dimension {d}; its hom-sets are not enumerable")
    forest = _forest_paths(D)
    if forest is None:
        raise InfiniteHom(f"arrows of {D.name} contain a cycle; hom-sets are infinite")
    to_root, comp = forest
    top_c = C.effective_top(cap)
    objs = list(C.objects())
    arrows = list(C.gens(1))
    by_obj = {}
    for g in arrows:
        s, t = C.endpoints(g)
        by_obj.setdefault(max(objs.index(s), objs.index(t)), []).append(g)
    targets = list(D.objects())
    out = []
    nodes = [0]

    def path(x, y):
        return compose(to_root[x], inverse(to_root[y]))

    def rec(k, assign):
        nodes[0] += 1
        if nodes[0] > budget:
            raise BudgetExceeded(f"morphism enumeration {C.name} -> {D.name} exceeded budget {budget}")
        if k == len(objs):
            out.append(dict(assign))
            return
        x = objs[k]
        for y in targets:
            assign[x] = y
            if all(comp[assign[s]] == comp[assign[t]]
                   for s, t in (C.endpoints(g) for g in by_obj.get(k, ()))):
                rec(k + 1, assign)
            del assign[x]

    rec(0, {})
    result = []
    for assign in out:
        arrow_img = {g: path(assign[C.endpoints(g)[0]], assign[C.endpoints(g)[1]]) for g in arrows}

        def gen_map(g, assign=assign, arrow_img=arrow_img):
            d = C.gen_dim(g)
            if d == 1:
                return D.path_element(arrow_img[g])
            return D.zero(d, assign[C.gen_base(g)])

        f = CxMorphism(C, D, assign.__getitem__, gen_map, name="m")
        # higher generators need trivial boundary images; in a forest every loop is trivial
        ok = True
        for d in range(2, min(top_c, 2) + 1):
            for g in C.gens(d):
                if f.on_path(C.boundary(g).path).letters:
                    ok = False
        if ok:
            result.append(f)
    return result


def hom_simplices(C: FreeCrossedComplex, D: FreeCrossedComplex, n: int, budget: int = 200000) -> list:
    """CRS(C, D)_n as (0, n)-homotopies C (x) pi(n) -> D."""
    src = rn_source(C, 0, n)
    return [RNHomotopy(C, 0, n, f) for f in enumerate_morphisms(src, D, budget)]


def morphism_key(f: CxMorphism, cap: int | None = None) -> tuple:
    S = f.source
    top = S.effective_top(cap)
    objs = tuple(f.on_object(x) for x in S.objects())
    imgs = tuple(f.image(g) for d in range(1, top + 1) for g in S.gens(d))
    return objs, imgs


# -- nerves --------------------------------------------------------------------

def nerve(C: FreeCrossedComplex, n: int, budget: int = 200000) -> list:
    """N(C)_n = crs(pi(n), C)."""
    return enumerate_morphisms(pi(std_simplex(n)), C, budget)


def nerve_face(m: CxMorphism, i: int) -> CxMorphism:
    n = m.source.K.n
    phi = tuple(k if k < i else k + 1 for k in range(n))
    return m.compose(pi_operator(n - 1, n, phi))


def nerve_degeneracy(m: CxMorphism, j: int) -> CxMorphism:
    n = m.source.K.n
    phi = tuple(k if k <= j else k - 1 for k in range(n + 2))
    return m.compose(pi_operator(n + 1, n, phi))


def nerve_operator(m: CxMorphism, phi) -> CxMorphism:
    n = m.source.K.n
    return m.compose(pi_operator(len(phi) - 1, n, tuple(phi)))


class NerveSet(Realized):
    """A finite piece of N(C): all simplices up to a cap, or those generated by given ones."""

    def __init__(self, C: FreeCrossedComplex, simplices: dict, name: str):
        self.complex = C
        super().__init__(name, simplices, key=morphism_key, face=nerve_face, degen=nerve_degeneracy,
                         dim=lambda m: m.source.K.n, solver="finite", prefix="m")

    def morphism(self, cell) -> CxMorphism:
        return self.obj(cell)

    def morphism_of(self, s: Simplex) -> CxMorphism:
        m = self.obj(s.base)
        if not s.degeneracies:
            return m
        return nerve_operator(m, s.surjection())


_NERVES = {}


def nerve_set(C: FreeCrossedComplex, cap: int = 3, budget: int = 200000) -> NerveSet:
    """N(C) up to dimension cap (memoized per complex)."""
    key = (id(C), cap)
    hit = _NERVES.get(key)
    if hit is None or hit.complex is not C:
        simp = {d: nerve(C, d, budget) for d in range(cap + 1)}
        hit = _NERVES[key] = NerveSet(C, simp, f"N({C.name})")
    return hit


def generated_nerve(ms) -> NerveSet:
    """The finite simplicial subset of N(C) generated by the given simplices."""
    ms = list(ms)
    C = ms[0].target
    simp = {}
    for m in ms:
        n = m.source.K.n
        for k in range(n + 1):
            for phi in itertools.combinations_with_replacement(range(n + 1), k + 1):
                simp.setdefault(k, []).append(nerve_operator(m, phi))
    return NerveSet(C, simp, f"N({C.name})<gen>")


class NerveMap:
    """A simplicial map X -> N(D), stored as morphisms pi(d) -> D on the cells of X."""

    def __init__(self, source: SimplicialSet, target: FreeCrossedComplex, fn: Callable, name: str = "F"):
        self.source = source
        self.target = target
        self.name = name
        self._fn = fn
        self._cache = {}

    def image(self, c) -> CxMorphism:
        hit = self._cache.get(c)
        if hit is None:
            hit = self._cache[c] = self._fn(c)
        return hit

    def at(self, s: Simplex) -> CxMorphism:
        m = self.image(s.base)
        if not s.degeneracies:
            return m
        return nerve_operator(m, s.surjection())

    def post(self, g: CxMorphism, name: str | None = None) -> "NerveMap":
        """N(g) . self"""
        return NerveMap(self.source, g.target, lambda c: g.compose(self.image(c)), name or f"N{g.name}.{self.name}")

    def pre(self, f: SimplicialMap) -> "NerveMap":
        """self . f"""
        return NerveMap(f.source, self.target, lambda c: self.at(f(f.source.simplex(c))), f"{self.name}.{f.name}")

    def differences(self, other: "NerveMap", max_dim: int | None = None, limit: int = 5) -> list:
        out = []
        top = self.source.effective_top(max_dim)
        for c in self.source.all_cells(top):
            a, b = self.image(c), other.image(c)
            if not a.equals(b):
                out.append((c, a, b))
                if len(out) >= limit:
                    break
        return out

    def equals(self, other: "NerveMap", max_dim: int | None = None) -> bool:
        return not self.differences(other, max_dim)

    def check(self, max_dim: int | None = None) -> list:
        """Face compatibility on every cell."""
        bad = []
        top = self.source.effective_top(max_dim)
        for d in range(1, top + 1):
            for c in self.source.cells(d):
                m = self.image(c)
                for i in range(d + 1):
                    if not nerve_face(m, i).equals(self.at(self.source.raw_face(c, i))):
                        bad.append((c, i))
        return bad

    def into(self, N: NerveSet, max_dim: int | None = None) -> SimplicialMap:
        """As an honest simplicial map into a finite nerve."""
        return SimplicialMap(self.source, N, lambda c: N.locate(self.image(c)), name=self.name)


def as_nerve_map(F: SimplicialMap) -> NerveMap:
    N = F.target
    return NerveMap(F.source, N.complex, lambda c: N.morphism_of(F.image(c)), F.name)


# -- unit and counit -----------------------------------------------------------

def unit_nerve_map(K: SimplicialSet) -> NerveMap:
    """eta_K as a map K -> N(pi K), valid for every K."""
    P = pi(K)
    return NerveMap(K, P, lambda c: pi_map(characteristic_map(K, K.simplex(c))), f"eta_{K.name}")


def unit_eta(K: SimplicialSet, cap: int = 3) -> SimplicialMap:
    """eta_K: K -> N(pi K) into the enumerated nerve (pi K must be enumerable)."""
    N = nerve_set(pi(K), cap)
    return unit_nerve_map(K).into(N)


@lru_cache(maxsize=None)
def counit_eps(N: NerveSet) -> CxMorphism:
    """epsilon_C: pi(N C) -> C, a simplex m going to the image of the top cell of its source."""
    C = N.complex

    def on_obj(v):
        return N.morphism(v).on_object((0,))

    def on_gen(c):
        m = N.morphism(c)
        d = N.cell_dim(c)
        return m.image(tuple(range(d + 1)))

    return CxMorphism(pi(N), C, on_obj, on_gen, name=f"eps_{C.name}")


def transpose_to_nerve(G: CxMorphism, X: SimplicialSet) -> NerveMap:
    """A morphism pi(X) -> C as the simplicial map X -> N(C)."""
    return NerveMap(X, G.target, lambda c: G.compose(pi_map(characteristic_map(X, X.simplex(c)))),
                    f"{G.name}^T")


def transpose_to_crossed(F: SimplicialMap) -> CxMorphism:
    """A simplicial map X -> N(C) (C enumerated) as the morphism pi(X) -> C."""
    return counit_eps(F.target).compose(pi_map(F))


# -- zeta and the enriched nerve -------------------------------------------------

def zeta(C: FreeCrossedComplex, K: SimplicialSet, cap: int = 3, N: NerveSet | None = None) -> NerveMap:
    """zeta_{C,K}: NC x K -> N(C (x) pi K), the composite N(eps (x) Id) . N(a) . eta."""
    N = N if N is not None else nerve_set(C, cap)
    P = product(N, K)
    a = split_a(P, 1)
    e = tensor_morphisms(counit_eps(N), identity_morphism(pi(K)))
    ea = e.compose(a)
    return NerveMap(P, tensor(C, pi(K)), lambda c: ea.compose(pi_map(characteristic_map(P, P.simplex(c)))),
                    f"zeta_{C.name},{K.name}")


def zeta_local(C: FreeCrossedComplex, K: SimplicialSet, m: CxMorphism, y: Simplex) -> CxMorphism:
    """zeta_{C,K}(m, y) computed inside the sub-nerve generated by m."""
    N = generated_nerve([m])
    P = product(N, K)
    s = P.normalize([N.locate(m), y])
    a = split_a(P, 1)
    e = tensor_morphisms(counit_eps(N), identity_morphism(pi(K)))
    return e.compose(a).compose(pi_map(characteristic_map(P, s)))


def zeta_diagonal(C: FreeCrossedComplex, K: SimplicialSet, m: CxMorphism, y: Simplex) -> CxMorphism:
    """The same value through the diagonal: (m (x) pi(y)) . a . pi(d)."""
    d = m.source.K.n
    return tensor_morphisms(m, pi_map(characteristic_map(K, y))).compose(aw_diagonal(d))


def _assemble(X: SimplicialSet, comps) -> Simplex:
    return assemble(X, list(comps))


def nerve_enriched(f: RNHomotopy, cap: int = 3) -> NerveMap:
    """N_S(f): NC x D[n] -> ND, i.e. N(f) . zeta_{C, D[n]}."""
    if f.r != 0 or f.n is None:
        raise CrossedError("the enriched nerve takes (0, n)-homotopies")
    return zeta(f.base, std_simplex(f.n), cap).post(f.morphism, f"N_S({f.morphism.name})")


def ss_enriched_compose(G: NerveMap, F: NerveMap, n: int, N: NerveSet) -> NerveMap:
    """G o F in S: (x, t) -> G(F(x, t), t), with F landing in the finite nerve N."""
    P = F.source
    Q = G.source

    def fn(c):
        t = components(P, P.simplex(c))[-1]
        v = N.locate(F.image(c))
        return G.at(Q.normalize([v, t]))

    return NerveMap(P, G.target, fn, f"{G.name}o{F.name}")


def zeta_associativity_square(C: FreeCrossedComplex, K: SimplicialSet, L: SimplicialSet, cap: int = 2):
    """Both composites NC x K x L -> N(C (x) pi K (x) pi L) of the zeta associativity square."""
    N = nerve_set(C, 3)
    X = product(N, K, L)
    wk = len(factors_of(K))
    zKL = zeta(C, product(K, L), N=N)
    a = split_a(product(K, L), wk)
    ida = tensor_morphisms(identity_morphism(C), a)
    lower = NerveMap(X, ida.target, lambda c: ida.compose(zKL.image(c)), "N(Id x a).zeta")
    zK = zeta(C, K, N=N)
    CK = tensor(C, pi(K))

    def upper_fn(c):
        comps = components(X, X.simplex(c))
        left = product(N, K).normalize(list(comps[:1 + wk]))
        y = _assemble(L, comps[1 + wk:])
        return zeta_local(CK, L, zK.at(left), y)

    upper = NerveMap(X, tensor(CK, pi(L)), upper_fn, "zeta.(zeta x Id)")
    eta = unit_nerve_map(X)
    a2 = tensor_morphisms(identity_morphism(pi(N)), a).compose(split_a(X, 1))
    e = tensor_morphisms(counit_eps(N), identity_morphism(pi(K)), identity_morphism(pi(L)))
    both = NerveMap(X, e.target, lambda c: e.compose(a2).compose(eta.image(c)), "N(eps x Id).N(a2).eta")
    return upper, lower, both
