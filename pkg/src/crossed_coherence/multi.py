"""Iterated splittings of a product K_0 x ... x K_r and the r-fold homotopy.

Blocks may themselves be products, so cuts are flat factor offsets.  The
r-fold homotopy is the nested composite

    H(x, t_1, ..., t_r) = h1(h2(... hr(x, t_r) ..., t_2), t_1)

where h_k is the one-step homotopy for the k-th cut.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .crossed import CxMorphism, identity_morphism
from .errors import CrossedError
from .ez import split_a, split_b, split_h
from .homotopy import RNHomotopy, corner, degenerate_homotopy, hat_tensor, homotopy_face, rn_source
from .pi import pi
from .simplicial import SimplicialSet, factors_of, product
from .tensor import interval, permute, tensor_morphisms


@dataclass(frozen=True)
class Splitting:
    """A product with chosen cut positions (flat offsets, strictly increasing)."""
    space: SimplicialSet
    cuts: tuple

    @staticmethod
    def of_blocks(blocks: Sequence[SimplicialSet]) -> "Splitting":
        if not blocks:
            raise CrossedError("need at least one block")
        widths = [len(factors_of(K)) for K in blocks]
        cuts, acc = [], 0
        for w in widths[:-1]:
            acc += w
            cuts.append(acc)
        return Splitting(product(*blocks), tuple(cuts))

    @property
    def r(self) -> int:
        return len(self.cuts)

    def pieces(self) -> list:
        F = factors_of(self.space)
        edges = (0,) + self.cuts + (len(F),)
        return [product(*F[a:b]) for a, b in zip(edges, edges[1:])]

    def merge(self, i: int) -> "Splitting":
        """Drop the i-th cut (1-based): blocks i-1 and i become one."""
        return Splitting(self.space, self.cuts[:i - 1] + self.cuts[i:])

    def left(self, i: int) -> "Splitting":
        c = self.cuts[i - 1]
        L = product(*factors_of(self.space)[:c])
        return Splitting(L, self.cuts[:i - 1])

    def right(self, i: int) -> "Splitting":
        c = self.cuts[i - 1]
        R = product(*factors_of(self.space)[c:])
        return Splitting(R, tuple(x - c for x in self.cuts[i:]))


@lru_cache(maxsize=None)
def multi_a(S: Splitting) -> CxMorphism:
    """pi(K_0 x ... x K_r) -> pi(K_0) (x) ... (x) pi(K_r)."""
    if not S.cuts:
        return identity_morphism(pi(S.space))
    a = split_a(S.space, S.cuts[0])
    R = S.right(1)
    rest = multi_a(R)
    L = S.left(1).space
    return tensor_morphisms(identity_morphism(pi(L)), rest).compose(a)


@lru_cache(maxsize=None)
def multi_b(S: Splitting) -> CxMorphism:
    if not S.cuts:
        return identity_morphism(pi(S.space))
    b = split_b(S.space, S.cuts[0])
    R = S.right(1)
    L = S.left(1).space
    return b.compose(tensor_morphisms(identity_morphism(pi(L)), multi_b(R)))


@lru_cache(maxsize=None)
def multi_h(S: Splitting) -> RNHomotopy:
    """The r-fold homotopy pi(P) (x) I^r -> pi(P) for the splitting."""
    P = pi(S.space)
    r = S.r
    src = rn_source(P, r, None)
    if r == 0:
        return RNHomotopy(P, 0, None, identity_morphism(P))
    I = identity_morphism(interval())
    # reverse the cube slots so the innermost step sees t_r first
    f = permute(src, [0] + list(range(r, 0, -1)))
    for k in range(r, 0, -1):
        f = tensor_morphisms(split_h(S.space, S.cuts[k - 1]), *([I] * (k - 1))).compose(f)
    return RNHomotopy(P, r, None, f)


def corner_maps(S: Splitting, alpha: Sequence[int]):
    """(a^alpha, b^alpha, h^alpha): split exactly at the cuts where alpha is 1."""
    if len(alpha) != S.r:
        raise CrossedError(f"corner needs {S.r} coordinates")
    sub = Splitting(S.space, tuple(c for c, x in zip(S.cuts, alpha) if x == 1))
    return multi_a(sub), multi_b(sub), corner(multi_h(S), alpha)


def split_maps(S: Splitting, i: int):
    """(a^(i), b^(i)) with Id on the cube: split only at the i-th cut."""
    a = split_a(S.space, S.cuts[i - 1])
    b = split_b(S.space, S.cuts[i - 1])
    return a, b


def _with_cube(f: CxMorphism, r: int) -> CxMorphism:
    if r == 0:
        return f
    I = identity_morphism(interval())
    return tensor_morphisms(f, *([I] * r))


def _cmp(name: str, f: CxMorphism, g: CxMorphism, cap):
    diffs = f.differences(g, cap)
    return name, not diffs, diffs[:3]


def inner_composite(S: Splitting, i: int) -> RNHomotopy:
    """b^(i) . (h_left hat h_right) . (a^(i) (x) Id)."""
    a, b = split_maps(S, i)
    hl, hr = multi_h(S.left(i)), multi_h(S.right(i))
    hh = hat_tensor(hl, hr)
    f = b.compose(hh.morphism).compose(_with_cube(a, S.r - 1))
    return RNHomotopy(pi(S.space), S.r - 1, None, f)


def face_relations(S: Splitting, cap: int | None = None) -> list:
    """Check the boundary relations of the r-fold homotopy; returns (name, ok, sample)."""
    out = []
    h = multi_h(S)
    P = pi(S.space)
    if S.r == 0:
        out.append(_cmp("unsplit is identity", h.morphism, identity_morphism(P), cap))
        return out
    for i in range(1, S.r + 1):
        lo = homotopy_face(h, i, 0)
        hi = homotopy_face(h, i, 1)
        out.append(_cmp(f"lower face {i} merges blocks", lo.morphism, multi_h(S.merge(i)).morphism, cap))
        out.append(_cmp(f"upper face {i} splits blocks", hi.morphism, inner_composite(S, i).morphism, cap))
        a, b = split_maps(S, i)
        bc, ac = _with_cube(b, S.r - 1), a
        out.append(_cmp(f"faces {i} agree after b", lo.morphism.compose(bc), hi.morphism.compose(bc), cap))
        out.append(_cmp(f"faces {i} agree before a", ac.compose(lo.morphism), ac.compose(hi.morphism), cap))
    return out


def split_relations(S: Splitting, cap: int | None = None) -> list:
    out = []
    r = S.r
    for i in range(1, r + 1):
        a, b = split_maps(S, i)
        hi = homotopy_face(multi_h(S), i, 1).morphism
        fa, fb = _with_cube(a, r - 1), _with_cube(b, r - 1)
        out.append(_cmp(f"upper face {i} fixed by b.a on the right", hi, hi.compose(fb).compose(fa), cap))
        out.append(_cmp(f"upper face {i} fixed by b.a on the left", hi, b.compose(a).compose(hi), cap))
        merged = multi_h(S.merge(i))
        hh = hat_tensor(multi_h(S.left(i)), multi_h(S.right(i)))
        out.append(_cmp(f"merged homotopy commutes with b at {i}",
                        merged.morphism.compose(fb), b.compose(hh.morphism), cap))
        out.append(_cmp(f"merged homotopy commutes with a at {i}",
                        a.compose(merged.morphism), hh.morphism.compose(fa), cap))
    return out


def corner_relations(S: Splitting, cap: int | None = None) -> list:
    out = []
    for alpha in itertools.product((0, 1), repeat=S.r):
        a, b, h = corner_maps(S, alpha)
        out.append(_cmp(f"corner {''.join(map(str, alpha))} is b.a", h, b.compose(a), cap))
    return out


def sdr_relations(K: SimplicialSet, L: SimplicialSet, cap: int | None = None) -> list:
    """a.b = Id, the two ends of h, and the two side conditions."""
    P = product(K, L)
    j = len(factors_of(K))
    a, b, h = split_a(P, j), split_b(P, j), split_h(P, j)
    T = a.target
    H = RNHomotopy(pi(P), 1, None, h)
    out = [_cmp("a.b is the identity", a.compose(b), identity_morphism(T), cap),
           _cmp("lower end of h is the identity", homotopy_face(H, 1, 0).morphism,
                identity_morphism(pi(P)), cap),
           _cmp("upper end of h is b.a", homotopy_face(H, 1, 1).morphism, b.compose(a), cap)]
    hb = h.compose(_with_cube(b, 1))
    out.append(_cmp("h.(b x Id) is degenerate", hb, degenerate_homotopy(b, 1).morphism, cap))
    ah = a.compose(h)
    out.append(_cmp("a.h is degenerate", ah, degenerate_homotopy(a, 1).morphism, cap))
    return out


def assoc_interchange_check(K: SimplicialSet, L: SimplicialSet, M: SimplicialSet,
                            cap: int | None = None) -> list:
    """The associativity squares for a and b and the two interchange squares."""
    wk, wl = len(factors_of(K)), len(factors_of(L))
    KL, LM, P = product(K, L), product(L, M), product(K, L, M)
    iK, iM = identity_morphism(pi(K)), identity_morphism(pi(M))
    a_kl, b_kl = split_a(KL, wk), split_b(KL, wk)
    a_lm, b_lm = split_a(LM, wl), split_b(LM, wl)
    a_kl_m, b_kl_m = split_a(P, wk + wl), split_b(P, wk + wl)
    a_k_lm, b_k_lm = split_a(P, wk), split_b(P, wk)
    return [
        _cmp("b associativity", b_kl_m.compose(tensor_morphisms(b_kl, iM)),
             b_k_lm.compose(tensor_morphisms(iK, b_lm)), cap),
        _cmp("a associativity", tensor_morphisms(a_kl, iM).compose(a_kl_m),
             tensor_morphisms(iK, a_lm).compose(a_k_lm), cap),
        _cmp("interchange a after b", a_k_lm.compose(b_kl_m),
             tensor_morphisms(iK, b_lm).compose(tensor_morphisms(a_kl, iM)), cap),
        _cmp("interchange a after b (mirror)", a_kl_m.compose(b_k_lm),
             tensor_morphisms(b_kl, iM).compose(tensor_morphisms(iK, a_lm)), cap),
    ]
