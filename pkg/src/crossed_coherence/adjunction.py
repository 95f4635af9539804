"""Deformation-retract data for the pi / nerve adjunction.

For K and C with an enumerable nerve:

* ``a_star(g)``: CRS(pi K, C)_n -> S(K, NC)_n, the transpose of g . a;
* ``b_star(F)``: S(K, NC)_n -> CRS(pi K, C)_n, (transpose of F) . b;
* ``sdr_homotopy_H(F, x)``: the homotopy from F (vertex 0) to a* b* F (vertex 1);
* coherent versions of b* and a* on chains of enriched simplices.

The ``*_checks`` functions return (name, ok, sample) records.
"""

from __future__ import annotations

from .coherence import composite, hom_source, phi, pi_coherent, staircase
from .crossed import CxMorphism, check_morphism, identity_morphism
from .errors import CrossedError
from .ez import split_a, split_b, split_h
from .homotopy import RNHomotopy, convolve, degenerate_homotopy, homotopy_face
from .multi import Splitting, multi_h
from .nerve import (NerveMap, NerveSet, as_nerve_map, counit_eps, nerve_enriched, nerve_set, pi_operator,
                    ss_enriched_compose, transpose_to_crossed, transpose_to_nerve, unit_eta)
from .pi import pi, pi_map
from .simplicial import (SimplicialMap, diagonal_map, factors_of, identity_map, product, product_map,
                         ss_compose, ss_face, std_simplex)
from .tensor import interval, tensor_morphisms


def _cmp(name, f, g):
    d = f.differences(g)
    return name, not d, d[:3]


def a_star_crossed(g: RNHomotopy) -> CxMorphism:
    """g . a : pi(K x D[n]) -> C."""
    K = g.base.K
    X = product(K, std_simplex(g.n))
    return g.morphism.compose(split_a(X, len(factors_of(K))))


def a_star_nerve(g: RNHomotopy) -> NerveMap:
    """a*_n(g) as a function of simplices; needs no enumerated nerve."""
    X = product(g.base.K, std_simplex(g.n))
    return transpose_to_nerve(a_star_crossed(g), X)


def a_star(g: RNHomotopy, cap: int = 3) -> SimplicialMap:
    """a*_n(g): K x D[n] -> NC, the transpose of g . a."""
    return a_star_nerve(g).into(nerve_set(g.target, cap))


def b_star(F: SimplicialMap, n: int) -> RNHomotopy:
    """b*_n(F) = (transpose of F) . b : pi K (x) pi(n) -> C."""
    X = F.source
    K = product(*factors_of(X)[:-1])
    G = transpose_to_crossed(F)
    return RNHomotopy(pi(K), 0, n, G.compose(split_b(X, len(factors_of(K)))))


def sdr_homotopy_H(F: SimplicialMap, x, n: int) -> SimplicialMap:
    """H(F, x) for F: K x D[n] -> NC and an n-simplex x: [n] -> [1] of D[1].

    Vertex 0 of the interval gives F itself, vertex 1 gives a* b* F.
    """
    X = F.source
    fs = factors_of(X)
    K = product(*fs[:-1])
    wk = len(fs) - 1
    XD = product(X, std_simplex(n))
    G = transpose_to_crossed(F)
    diag = product_map([identity_map(K), diagonal_map(n, 2)])
    a = split_a(XD, wk + 1)
    xm = tensor_morphisms(identity_morphism(pi(X)), pi_operator(n, 1, tuple(x)))
    h = split_h(X, wk)
    total = G.compose(h).compose(xm).compose(a).compose(pi_map(diag))
    return transpose_to_nerve(total, X).into(F.target)


# -- coherent versions ---------------------------------------------------------

def coherent_b_star(fs, n: int) -> RNHomotopy:
    """eps_C . pi_n(f_1, ..., f_r) for a chain ending in a nerve NC."""
    N = fs[-1].target
    if not isinstance(N, NerveSet):
        raise CrossedError("coherent b* needs a chain ending in an enumerated nerve")
    F = pi_coherent(fs, n)
    return RNHomotopy(F.base, F.r, n, counit_eps(N).compose(F.morphism))


def coherent_a_star(fs, g: RNHomotopy) -> RNHomotopy:
    """The r-fold homotopy on pi(K_0 x D[n]) attached to f_1..f_r and g in CRS(pi K_r, C)_n.

        g . (pi(staircase) (x) Id) . a . h' . (pi(Id x diagonal) (x) Id)

    with h' the r-fold homotopy of K_0 x D[n]^(r-1) x (D[n] x D[n]).
    """
    fs = list(fs)
    n = g.n
    r = len(fs)
    K0 = hom_source(fs[0]) if fs else g.base.K
    w0 = len(factors_of(K0))
    D = std_simplex(n)
    I = identity_morphism(interval())
    cube = [I] * r
    X = product(K0, D)
    if r == 0:
        return RNHomotopy(pi(X), 0, None, a_star_crossed(g))
    P = product(K0, *([D] * (r + 1)))
    diag = product_map([identity_map(K0), diagonal_map(n, r + 1)])
    step1 = tensor_morphisms(pi_map(diag), *cube)
    hp = multi_h(Splitting.of_blocks([K0] + [D] * (r - 1) + [product(D, D)]))
    a = split_a(P, w0 + r)
    st = tensor_morphisms(pi_map(staircase(fs, n)), identity_morphism(pi(D)))
    total = g.morphism.compose(st).compose(a).compose(hp.morphism).compose(step1)
    return RNHomotopy(pi(X), r, None, total)


# -- checks --------------------------------------------------------------------

def b_star_a_star_check(g: RNHomotopy, cap: int = 3) -> tuple:
    return _cmp("b*a* is the identity", b_star(a_star(g, cap), g.n).morphism, g.morphism)


def h_endpoint_checks(F: SimplicialMap, n: int) -> list:
    H0 = sdr_homotopy_H(F, (0,) * (n + 1), n)
    H1 = sdr_homotopy_H(F, (1,) * (n + 1), n)
    ab = a_star(b_star(F, n))
    out = [("H at vertex 0 is F", H0.equals(F), []),
           ("H at vertex 1 is a*b*F", H1.equals(ab), [])]
    out.append(("H is a simplicial map", not H0.check() and not H1.check(), []))
    return out


def h_simplicial_checks(F: SimplicialMap, x, n: int) -> list:
    """d_i H(F, x) = H(d_i F, x . d^i)."""
    out = []
    K = hom_source(F)
    H = sdr_homotopy_H(F, x, n)
    for i in range(n + 1):
        xi = tuple(v for k, v in enumerate(x) if k != i)
        lhs = ss_face(H, K, n, i)
        rhs = sdr_homotopy_H(ss_face(F, K, n, i), xi, n - 1)
        out.append((f"H commutes with face {i}", lhs.equals(rhs), []))
    return out


def factorization_checks(g: RNHomotopy, F: SimplicialMap, cap: int = 3) -> list:
    """a* = eta^* . N_S and b* = eps_* . pi_S on one sample each."""
    K = g.base.K
    n = g.n
    eta = product_map([unit_eta(K, cap), identity_map(std_simplex(n))])
    via_ns = nerve_enriched(g, cap).pre(eta)
    out = [("a* factors through the enriched nerve",
            not as_nerve_map(a_star(g, cap)).differences(via_ns), [])]
    N = F.target
    eps_pi = counit_eps(N).compose(phi(F, n).morphism)
    out.append(_cmp("b* factors through the enriched pi", b_star(F, n).morphism, eps_pi))
    return out


def reconstruction_checks(f: RNHomotopy, F: SimplicialMap, cap: int = 3) -> list:
    """N_S = a* . eps^* and pi_S = b* . eta_* on one sample each."""
    N = nerve_set(f.base, cap)
    n = f.n
    e = tensor_morphisms(counit_eps(N), identity_morphism(pi(std_simplex(n))))
    pulled = RNHomotopy(pi(N), 0, n, f.morphism.compose(e))
    lhs = nerve_enriched(f, cap)
    rhs = a_star_nerve(pulled)
    out = [("enriched nerve is a* after eps^*", not lhs.differences(rhs), [])]
    L = F.target
    pushed = unit_eta(L, cap).compose(F)
    out.append(_cmp("enriched pi is b* after eta_*", b_star(pushed, n).morphism, phi(F, n).morphism))
    return out


def lemma_interchange_check(f: SimplicialMap, g: RNHomotopy, cap: int = 3) -> bool:
    """g o pi_S f = b*(a* g o f) in CRS(pi K, C)_n."""
    n = g.n
    lhs = convolve(g, phi(f, n))
    rhs = b_star(ss_compose(a_star(g, cap), f, n), n)
    return lhs.morphism.equals(rhs.morphism)


def b_star_naturality_check(F: SimplicialMap, f: SimplicialMap, n: int) -> tuple:
    """b*(F o f) = b*(F) o pi_S f for f in S(K, L)_n and F in S(L, NC)_n."""
    return _cmp("b* is natural in the source", b_star(ss_compose(F, f, n), n).morphism,
                convolve(b_star(F, n), phi(f, n)).morphism)


def a_star_naturality_check(g: RNHomotopy, k: RNHomotopy, cap: int = 3) -> tuple:
    """a*(k o g) = N_S(k) o a*(g) for k in CRS(C, D)_n."""
    n = g.n
    N = nerve_set(g.target, cap)
    lhs = as_nerve_map(a_star(convolve(k, g), cap))
    rhs = ss_enriched_compose(nerve_enriched(k, cap), as_nerve_map(a_star(g, cap)), n, N)
    d = lhs.differences(rhs)
    return "a* is natural in the target", not d, d[:3]


def coherent_b_star_checks(fs, n: int) -> list:
    out = []
    B = coherent_b_star(fs, n)
    r = len(fs)
    if r == 1:
        out.append(_cmp("coherent b* at r = 1 is b*", B.morphism, b_star(fs[0], n).morphism))
    for i in range(1, r):
        merged = fs[:i - 1] + [ss_compose(fs[i], fs[i - 1], n)] + fs[i + 1:]
        out.append(_cmp(f"lower face {i} composes", homotopy_face(B, i, 0).morphism,
                        coherent_b_star(merged, n).morphism))
        out.append(_cmp(f"upper face {i} splits", homotopy_face(B, i, 1).morphism,
                        convolve(coherent_b_star(fs[i:], n), pi_coherent(fs[:i], n)).morphism))
    if n == 0:
        flat = degenerate_homotopy(b_star(composite(fs, 0), 0).morphism, r - 1, 0, base=B.base)
        out.append(_cmp("n = 0 data factors through the composite", B.morphism, flat.morphism))
    return out


def coherent_a_star_checks(f: SimplicialMap, g: RNHomotopy, cap: int = 3) -> list:
    """r = 0 reduction and the two ends at r = 1, plus b* of the r = 1 homotopy."""
    n = g.n
    out = [_cmp("coherent a* at r = 0 is a*", coherent_a_star([], g).morphism, a_star_crossed(g))]
    A = coherent_a_star([f], g)
    ok, errs = check_morphism(A.morphism)
    out.append(("coherent a* is a morphism", ok, errs[:3]))
    lo = transpose_to_crossed(ss_compose(a_star(g, cap), f, n))
    hi = a_star_crossed(convolve(g, phi(f, n)))
    out.append(_cmp("lower end is a*g o f", homotopy_face(A, 1, 0).morphism, lo))
    out.append(_cmp("upper end is a*(g o pi_S f)", homotopy_face(A, 1, 1).morphism, hi))
    X = A.base.K
    K0 = hom_source(f)
    bI = tensor_morphisms(split_b(X, len(factors_of(K0))), identity_morphism(interval()))
    flat = degenerate_homotopy(convolve(g, phi(f, n)).morphism, 1, n, base=pi(K0))
    out.append(_cmp("b* of coherent a* is degenerate", A.morphism.compose(bI), flat.morphism))
    return out


def b_star_a_star_level_one(f: SimplicialMap, g: RNHomotopy, cap: int = 3) -> list:
    """b* a* is the identity transformation at levels 0 and 1.

    The identity transformation of CRS(pi -, C) has level-1 component at f
    constant at g o pi_S f; both level-1 pieces of the composite must be that.
    """
    n = g.n
    target = convolve(g, phi(f, n)).morphism
    K0 = hom_source(f)
    out = [b_star_a_star_check(g, cap)]
    A = coherent_a_star([f], g)
    bI = tensor_morphisms(split_b(A.base.K, len(factors_of(K0))), identity_morphism(interval()))
    flat = degenerate_homotopy(target, 1, n, base=pi(K0)).morphism
    out.append(_cmp("b* after coherent a* is constant", A.morphism.compose(bI), flat))
    B = coherent_b_star([f, a_star(g, cap)], n)
    out.append(_cmp("coherent b* on a* is constant", B.morphism, flat))
    return out
