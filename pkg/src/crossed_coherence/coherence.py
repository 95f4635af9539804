"""Coherent enrichment of pi: phi, the composition homotopy, and the r-fold data.

A simplex of S(K, L) in dimension n is a simplicial map K x D[n] -> L.
``pi_coherent(fs, n)`` sends a composable chain f_1, ..., f_r of such simplices
to an (r-1, n)-homotopy pi(K_0) (x) pi(n) (x) I^(r-1) -> pi(K_r), built as

    pi(staircase) . b . (Id (x) h) . (Id (x) pi(diagonal) (x) Id)

with h the (r-1)-fold homotopy of D[n]^r split into single factors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .crossed import CxMorphism, identity_morphism
from .errors import BudgetExceeded, CrossedError
from .ez import split_b
from .homotopy import (RNHomotopy, convolve, corner, degenerate_homotopy, homotopy_face,
                       simplex_face)
from .multi import Splitting, multi_h
from .pi import pi, pi_map
from .simplicial import (LD_pair, SimplicialMap, SimplicialSet, assemble, components, diagonal_map,
                         factors_of, mapping_space_simplices, product, ss_compose, ss_face, std_simplex)
from .tensor import interval, tensor_morphisms


def hom_source(f: SimplicialMap) -> SimplicialSet:
    """K for f: K x D[n] -> L."""
    return product(*factors_of(f.source)[:-1])


def hom_dim(f: SimplicialMap) -> int:
    return factors_of(f.source)[-1].n


def staircase(fs, n: int) -> SimplicialMap:
    """K_0 x D[n]^r -> K_r, (x, t_1, ..., t_r) -> f_r(... f_1(x, t_1) ..., t_r)."""
    K0 = hom_source(fs[0])
    w0 = len(factors_of(K0))
    D = std_simplex(n)
    P = product(K0, *([D] * len(fs)))

    def img(c):
        comps = components(P, P.simplex(c))
        x = assemble(K0, list(comps[:w0]))
        for i, f in enumerate(fs):
            x = f(LD_pair(hom_source(f), D, x, comps[w0 + i]))
        return x

    return SimplicialMap(P, fs[-1].target, img, name="stair")


def _check_chain(fs, n):
    for f in fs:
        if hom_dim(f) != n:
            raise CrossedError("all maps in a chain must have the same simplicial dimension")
    for f, g in zip(fs, fs[1:]):
        if f.target is not hom_source(g):
            raise CrossedError("chain is not composable")


def pi_coherent(fs, n: int | None = None) -> RNHomotopy:
    """The (r-1, n)-homotopy attached to a composable chain of n-simplices."""
    fs = list(fs)
    if not fs:
        raise CrossedError("empty chain")
    n = hom_dim(fs[0]) if n is None else n
    _check_chain(fs, n)
    r = len(fs)
    K0 = hom_source(fs[0])
    w0 = len(factors_of(K0))
    D = std_simplex(n)
    PK = pi(K0)
    I = identity_morphism(interval())
    cube = [I] * (r - 1)
    diag = tensor_morphisms(identity_morphism(PK), pi_map(diagonal_map(n, r)), *cube)
    h = multi_h(Splitting.of_blocks([D] * r))
    step = tensor_morphisms(identity_morphism(PK), h.morphism)
    b = split_b(product(K0, *([D] * r)), w0)
    total = pi_map(staircase(fs, n)).compose(b.compose(step.compose(diag)))
    return RNHomotopy(PK, r - 1, n, total)


def phi(f: SimplicialMap, n: int | None = None) -> RNHomotopy:
    """phi(f) = pi(f) . b, an n-simplex of CRS(pi K, pi L)."""
    return pi_coherent([f], n)


def composite(fs, n: int) -> SimplicialMap:
    """Enriched composite f_r o ... o f_1 in S."""
    out = fs[0]
    for g in fs[1:]:
        out = ss_compose(g, out, n)
    return out


def composition_homotopy(f0: SimplicialMap, f1: SimplicialMap, n: int | None = None) -> RNHomotopy:
    """A (1, n)-homotopy from phi(f1 o f0) to phi(f1) o phi(f0)."""
    return pi_coherent([f0, f1], n)


@dataclass
class Witness:
    spaces: tuple
    f0: SimplicialMap
    f1: SimplicialMap
    n: int
    composite_first: RNHomotopy       # phi(f1 o f0)
    composed_after: RNHomotopy        # phi(f1) o phi(f0)
    differences: list = field(default_factory=list)


def witness_noncommutativity(spaces=None, n: int = 1, budget: int = 200000) -> Witness:
    """Search for enriched simplices with phi(f1) o phi(f0) != phi(f1 o f0)."""
    if spaces is None:
        D1 = std_simplex(1)
        spaces = [D1, product(D1, D1)]
    spent = 0
    for K0, K1, K2 in itertools.product(spaces, repeat=3):
        A = mapping_space_simplices(K0, K1, n, budget)
        B = mapping_space_simplices(K1, K2, n, budget)
        for f0 in A:
            p0 = phi(f0, n)
            for f1 in B:
                spent += 1
                if spent > budget:
                    raise BudgetExceeded("no witness found within budget")
                lhs = phi(composite([f0, f1], n), n)
                rhs = convolve(phi(f1, n), p0)
                diffs = lhs.differences(rhs)
                if diffs:
                    return Witness((K0, K1, K2), f0, f1, n, lhs, rhs, diffs)
    raise BudgetExceeded("no witness found in the given spaces")


# -- checks ---------------------------------------------------------------------

def _cmp(name, f: CxMorphism, g: CxMorphism):
    d = f.differences(g)
    return name, not d, d[:3]


def boundary_relations(fs, n: int) -> list:
    """Cubical boundary relations of pi_coherent(fs) (faces collapse or split the chain)."""
    out = []
    F = pi_coherent(fs, n)
    r = len(fs)
    for i in range(1, r):
        merged = fs[:i - 1] + [ss_compose(fs[i], fs[i - 1], n)] + fs[i + 1:]
        out.append(_cmp(f"lower face {i} composes maps {i},{i + 1}",
                        homotopy_face(F, i, 0).morphism, pi_coherent(merged, n).morphism))
        split = convolve(pi_coherent(fs[i:], n), pi_coherent(fs[:i], n))
        out.append(_cmp(f"upper face {i} splits the chain", homotopy_face(F, i, 1).morphism, split.morphism))
    return out


def simplicial_relations(fs, n: int) -> list:
    out = []
    if n == 0:
        return out
    F = pi_coherent(fs, n)
    for i in range(n + 1):
        faced = [ss_face(f, hom_source(f), n, i) for f in fs]
        out.append(_cmp(f"simplicial face {i}", simplex_face(F, i).morphism, pi_coherent(faced, n - 1).morphism))
    return out


def grouped_composite(fs, alpha, n: int) -> RNHomotopy:
    """F_alpha: phi of the blocks cut where alpha is 1, composed by convolution."""
    groups, cur = [], [fs[0]]
    for a, f in zip(alpha, fs[1:]):
        if a == 1:
            groups.append(cur)
            cur = [f]
        else:
            cur.append(f)
    groups.append(cur)
    out = phi(composite(groups[0], n), n)
    for g in groups[1:]:
        out = convolve(phi(composite(g, n), n), out)
    return out


def corner_relations(fs, n: int) -> list:
    F = pi_coherent(fs, n)
    out = []
    for alpha in itertools.product((0, 1), repeat=len(fs) - 1):
        out.append(_cmp(f"corner {''.join(map(str, alpha))}", corner(F, alpha),
                        grouped_composite(fs, alpha, n).morphism))
    return out


def enrichment_relation(fs) -> tuple:
    """At n = 0 the coherence data is constant at pi of the composite."""
    F = pi_coherent(fs, 0)
    flat = degenerate_homotopy(phi(composite(fs, 0), 0).morphism, len(fs) - 1, 0, base=F.base)
    return _cmp("n = 0 data factors through the composite", F.morphism, flat.morphism)
