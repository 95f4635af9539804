"""(r, n)-homotopies: morphisms C (x) pi(n) (x) I^(x)r -> D.

``n=None`` drops the simplex slot (pure r-fold homotopies); ``r=0`` with a
simplex slot gives an n-simplex of the enriched hom.  Cube coordinates are
the last r slots of the source, in order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .crossed import CxMorphism, FreeCrossedComplex, identity_morphism
from .errors import CrossedError
from .ez import split_a
from .groupoid import identity
from .pi import pi, pi_map
from .simplicial import SimplicialMap, coface, codegeneracy, diagonal_map, std_simplex, product
from .tensor import (END, flat_factors, insert_object, interval, permute, tensor,
                     tensor_morphisms, _wrap)


def rn_source(C: FreeCrossedComplex, r: int, n: int | None) -> FreeCrossedComplex:
    parts = [C]
    if n is not None:
        parts.append(pi(std_simplex(n)))
    parts += [interval()] * r
    return tensor(*parts)


@dataclass
class RNHomotopy:
    base: FreeCrossedComplex
    r: int
    n: int | None
    morphism: CxMorphism

    def __post_init__(self):
        if self.morphism.source is not rn_source(self.base, self.r, self.n):
            raise CrossedError("homotopy source does not match (base, r, n)")

    @property
    def source(self):
        return self.morphism.source

    @property
    def target(self):
        return self.morphism.target

    @property
    def width(self) -> int:
        return len(flat_factors(self.base))

    def cube_slot(self, i: int) -> int:
        """Flat slot of cube direction i (1-based)."""
        return self.width + (0 if self.n is None else 1) + i - 1

    def equals(self, other: "RNHomotopy", cap: int | None = None) -> bool:
        return (self.r, self.n) == (other.r, other.n) and self.morphism.equals(other.morphism, cap)

    def differences(self, other: "RNHomotopy", cap: int | None = None):
        return self.morphism.differences(other.morphism, cap)

    def __repr__(self):
        return f"<RNHomotopy r={self.r} n={self.n} {self.morphism.name}>"


def as_homotopy(f: CxMorphism, n: int | None = None, base: FreeCrossedComplex | None = None) -> RNHomotopy:
    """View a morphism as a 0-fold homotopy (with simplex slot when n is given)."""
    if base is None:
        if n is None:
            base = f.source
        else:
            fs = flat_factors(f.source)
            base = tensor(*fs[:-1])
    return RNHomotopy(base, 0, n, f)


def drop_slots(T: FreeCrossedComplex, drop) -> CxMorphism:
    """Collapse the given slots to a point: degenerate in those directions."""
    F = flat_factors(T)
    drop = set(drop)
    keep = [k for k in range(len(F)) if k not in drop]
    S = tensor(*(F[k] for k in keep))
    wt, ws = len(F), len(keep)

    def proj(x):
        xs = _wrap(wt, x)
        out = tuple(xs[k] for k in keep)
        return out[0] if ws == 1 else out

    def on_gen(g):
        gs = _wrap(wt, g)
        if any(F[k].gen_dim(gs[k]) for k in drop):
            d = T.gen_dim(g)
            b = proj(T.gen_base(g))
            if d == 1:
                return S.path_element(identity(b))
            return S.zero(d, b)
        return S.gen_element(proj(g))

    return CxMorphism(T, S, proj, on_gen, name=f"drop{sorted(drop)}")


def degenerate_homotopy(f: CxMorphism, r: int, n: int | None = None,
                        base: FreeCrossedComplex | None = None) -> RNHomotopy:
    """The r-fold homotopy that is constant at f (f may carry a simplex slot)."""
    C = base if base is not None else (f.source if n is None else tensor(*flat_factors(f.source)[:-1]))
    src = rn_source(C, r, n)
    w = len(flat_factors(src))
    p = drop_slots(src, range(w - r, w))
    return RNHomotopy(C, r, n, f.compose(p))


def homotopy_face(h: RNHomotopy, i: int, alpha) -> RNHomotopy:
    """delta^alpha_i(h) = h . (Id (x) f^alpha_i)."""
    if not 1 <= i <= h.r:
        raise CrossedError(f"face direction {i} out of range 1..{h.r}")
    lower = rn_source(h.base, h.r - 1, h.n)
    inc = insert_object(lower, h.source, h.cube_slot(i), END[alpha])
    return RNHomotopy(h.base, h.r - 1, h.n, h.morphism.compose(inc))


def corner(h: RNHomotopy, alpha) -> CxMorphism:
    """Restriction of h to the corner alpha of the cube."""
    out = h
    for a in reversed(list(alpha)):
        out = homotopy_face(out, out.r, a)
    return out.morphism


def simplex_operator(h: RNHomotopy, phi) -> RNHomotopy:
    """Apply the monotone map phi: [m] -> [n] in the simplex slot."""
    if h.n is None:
        raise CrossedError("homotopy has no simplex slot")
    m = len(phi) - 1
    Dm, Dn = std_simplex(m), std_simplex(h.n)
    op = SimplicialMap(Dm, Dn, lambda c: Dn.from_sequence([phi[v] for v in c]), name="op")
    parts = [identity_morphism(f) for f in flat_factors(h.base)]
    parts.append(pi_map(op))
    parts += [identity_morphism(interval())] * h.r
    return RNHomotopy(h.base, h.r, m, h.morphism.compose(tensor_morphisms(*parts)))


def simplex_face(h: RNHomotopy, i: int) -> RNHomotopy:
    return simplex_operator(h, coface(h.n, i))


def simplex_degeneracy(h: RNHomotopy, j: int) -> RNHomotopy:
    return simplex_operator(h, codegeneracy(h.n, j))


def hat_tensor(h: RNHomotopy, k: RNHomotopy) -> RNHomotopy:
    """(h (x) k) . (Id (x) tau (x) Id) for pure cubical homotopies."""
    if h.n is not None or k.n is not None:
        raise CrossedError("hat tensor is defined for pure cubical homotopies")
    wc, we = h.width, k.width
    C = tensor(h.base, k.base)
    src = rn_source(C, h.r + k.r, None)
    # slots: C | E | I^r | I^s  ->  C | I^r | E | I^s
    perm = (list(range(wc)) + list(range(wc + we, wc + we + h.r)) +
            list(range(wc, wc + we)) + list(range(wc + we + h.r, wc + we + h.r + k.r)))
    sw = permute(src, perm)
    hk = tensor_morphisms(h.morphism, k.morphism)
    if sw.target is not hk.source:
        raise CrossedError("hat tensor: slot bookkeeping mismatch")
    return RNHomotopy(C, h.r + k.r, None, hk.compose(sw))


def aw_diagonal(n: int) -> CxMorphism:
    """pi(n) -> pi(n) (x) pi(n): front/back split of the diagonal."""
    d = diagonal_map(n, 2)
    D = std_simplex(n)
    return split_a(product(D, D), 1).compose(pi_map(d))


def convolve(k: RNHomotopy, h: RNHomotopy) -> RNHomotopy:
    """The (r+s, n)-homotopy k o h, via the diagonal of the simplex slot."""
    if h.n is None or k.n is None or h.n != k.n:
        raise CrossedError("convolution needs homotopies over the same simplex")
    if h.target is not k.base:
        raise CrossedError("convolution: target of h is not the base of k")
    n, r, s = h.n, h.r, k.r
    C = h.base
    wc = h.width
    Pn = pi(std_simplex(n))
    I = identity_morphism(interval())
    ids_c = [identity_morphism(f) for f in flat_factors(C)]
    aw = aw_diagonal(n)
    stage1 = tensor_morphisms(*ids_c, aw, *([I] * (r + s)))
    # slots now: C | n | n | I^r | I^s  ->  C | n | I^r | n | I^s
    mid = stage1.target
    perm = (list(range(wc + 1)) + list(range(wc + 2, wc + 2 + r)) + [wc + 1] +
            list(range(wc + 2 + r, wc + 2 + r + s)))
    sw = permute(mid, perm)
    rest = [identity_morphism(Pn)] + [I] * s
    stage3 = tensor_morphisms(h.morphism, *rest)
    if sw.target is not stage3.source:
        raise CrossedError("convolution: slot bookkeeping mismatch")
    total = k.morphism.compose(stage3.compose(sw.compose(stage1)))
    return RNHomotopy(C, r + s, n, total)


def identity_simplex(C: FreeCrossedComplex, n: int) -> RNHomotopy:
    """The degenerate identity n-simplex of the enriched hom CRS(C, C)."""
    src = rn_source(C, 0, n)
    w = len(flat_factors(src))
    return RNHomotopy(C, 0, n, drop_slots(src, [w - 1]))
