"""Tensor products of free crossed complexes.

Tensors are always flattened: ``tensor(tensor(A, B), C)`` and
``tensor(A, tensor(B, C))`` are the same object with factors (A, B, C), so
the associativity isomorphism is the identity on generators.  A generator
is the tuple of its factor items (objects included).

Boundary conventions for a generator c (x) d:

* (1,1):  (c (x) sd)(tc (x) d)(c (x) td)^-1(sc (x) d)^-1, a loop at (sc, sd);
* one factor of dimension 2, the rest objects: the lifted boundary loop;
* total dimension >= 3: the graded Leibniz rule on vectors, where an arrow e
  contributes  (te, twisted back along e^-1) - (se).
Twists of products are lifted factor by factor, first factor first.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Sequence

from .crossed import CxElement, CxMorphism, FreeCrossedComplex, _acc, identity_morphism
from .errors import CrossedError
from .groupoid import Path, ProductSolver, compose, identity, inverse
from .pi import pi
from .simplicial import std_simplex


class TensorComplex(FreeCrossedComplex):
    def __init__(self, factors: tuple, dim_cap: int | None = None):
        self.factors = tuple(factors)
        self.name = "(x)".join(f.name for f in self.factors)
        tops = [f.top_dim() for f in self.factors]
        self._top = None if any(t is None for t in tops) else sum(tops)
        self.dim_cap = dim_cap
        self.solver_kind = "product"

    def top_dim(self):
        return self._top

    def objects(self):
        memo = self._cache("objects")
        if "o" not in memo:
            memo["o"] = tuple(itertools.product(*(f.objects() for f in self.factors)))
        return memo["o"]

    def _gens(self, d):
        out = []
        caps = [f.effective_top(d) for f in self.factors]
        for dims in _compositions(d, caps):
            out.extend(itertools.product(*(f.gens(k) for f, k in zip(self.factors, dims))))
        return out

    def dims_of(self, g) -> tuple:
        return tuple(f.gen_dim(x) for f, x in zip(self.factors, g))

    def gen_dim(self, g):
        return sum(self.dims_of(g))

    def endpoints(self, g):
        dims = self.dims_of(g)
        i = dims.index(1)
        s, t = self.factors[i].endpoints(g[i])
        return (g[:i] + (s,) + g[i + 1:], g[:i] + (t,) + g[i + 1:])

    def base(self, g):
        return tuple(f.gen_base(x) for f, x in zip(self.factors, g))

    def _boundary(self, g):
        dims = self.dims_of(g)
        n = sum(dims)
        F = self.factors
        if n == 2:
            big = [i for i, d in enumerate(dims) if d > 0]
            if len(big) == 1:
                i = big[0]
                loop = F[i].boundary(g[i]).path
                return self.path_element(lift_path(loop, i, 1, self.base(g)))
            i, j = big
            c, dd = F[i].arrow_path(g[i]), F[j].arrow_path(g[j])
            return self.path_element(_block_square(self.base(g), (i, 1, c), (j, 1, dd)))
        chains_base = [_gen_chain(f, x) for f, x in zip(F, g)]
        total = {}
        sign = 1
        for i, (f, x) in enumerate(zip(F, g)):
            d = dims[i]
            if d == 0:
                continue
            chains = list(chains_base)
            if d == 1:
                s, t = f.endpoints(x)
                chains[i] = ({(t, inverse(f.arrow_path(x))): 1, (s, identity(s)): -1}, s)
            else:
                b = f.boundary(x)
                chains[i] = (f.fox(b.path) if d == 2 else dict(b.terms), b.src)
            for k, c in _chain_product(self, [1] * len(F), chains).items():
                _acc(total, k, c * sign)
            if d % 2:
                sign = -sign
        x = self.base(g)
        return CxElement(n - 1, x, x, (), self.make_terms(total, x))

    def _make_solver(self):
        F = self.factors

        def project(p: Path):
            out = []
            for i in range(len(F)):
                letters = [(g[i], e) for g, e in p.letters if F[i].gen_dim(g[i]) == 1]
                out.append(Path(p.src[i], p.tgt[i], tuple(letters)))
            return out

        def lift(i, q, objs):
            return lift_path(q, i, 1, objs)

        return ProductSolver([f.solver for f in F], project, lift)


def _compositions(d, caps):
    if not caps:
        if d == 0:
            yield ()
        return
    for k in range(min(d, caps[0]) + 1):
        for rest in _compositions(d - k, caps[1:]):
            yield (k,) + rest


def _wrap(width: int, item) -> tuple:
    return (item,) if width == 1 else tuple(item)


def lift_path(p: Path, offset: int, width: int, objs: tuple) -> Path:
    """Embed a path of a block of ``width`` factors at ``offset`` into a tensor."""
    pre, post = tuple(objs[:offset]), tuple(objs[offset + width:])
    letters = tuple((pre + _wrap(width, g) + post, e) for g, e in p.letters)
    return Path(pre + _wrap(width, p.src) + post, pre + _wrap(width, p.tgt) + post, letters)


def _gen_chain(f: FreeCrossedComplex, x):
    b = f.gen_base(x)
    return ({(x, identity(b)): 1}, b)


def _element_chain(B: FreeCrossedComplex, e: CxElement):
    if e.dim == 0:
        return ({(e.src, identity(e.src)): 1}, e.src)
    if e.dim == 1:
        return (B.fox(e.path), e.src)
    return (dict(e.terms), e.src)


def _chain_product(T: TensorComplex, widths: Sequence[int], chains: Sequence) -> dict:
    """Raw (uncanonicalized) product of per-block chains in T.

    Each chain is ``(terms, base)`` with terms ``{(item, twist): coeff}``.
    """
    offsets = [0]
    for w in widths:
        offsets.append(offsets[-1] + w)
    out = {}
    items = [list(ch.items()) for ch, _ in chains]
    bases = [_wrap(w, b) for w, (_, b) in zip(widths, chains)]
    for combo in itertools.product(*items):
        gen = ()
        coeff = 1
        for w, ((it, _), c) in zip(widths, combo):
            gen += _wrap(w, it)
            coeff *= c
        cur = list(T.base(gen))
        pieces = []
        for k, ((_, tw), _) in enumerate(combo):
            if tw.letters:
                pieces.append(lift_path(tw, offsets[k], widths[k], tuple(cur)))
            cur[offsets[k]:offsets[k + 1]] = bases[k]
        path = compose(*pieces) if pieces else identity(tuple(cur))
        _acc(out, (gen, path), coeff)
    return out


def block_width(B: FreeCrossedComplex) -> int:
    return len(B.factors) if isinstance(B, TensorComplex) else 1


def tensor_elements(T: TensorComplex, blocks: Sequence) -> CxElement:
    """The tensor product of elements, one per block.

    ``blocks`` is a sequence of ``(B, e)`` with B a complex covering a run of
    consecutive factors of T (a single factor or a tensor of several).
    """
    widths = [block_width(B) for B, _ in blocks]
    dims = [e.dim for _, e in blocks]
    n = sum(dims)
    offsets = [0]
    for w in widths:
        offsets.append(offsets[-1] + w)
    objs = ()
    for w, (_, e) in zip(widths, blocks):
        objs += _wrap(w, e.src)
    if n == 0:
        return T.obj(objs)
    if n == 1:
        i = dims.index(1)
        return T.path_element(lift_path(blocks[i][1].path, offsets[i], widths[i], objs))
    raw = _chain_product(T, widths, [_element_chain(B, e) for B, e in blocks])
    terms = T.make_terms(raw, objs)
    if n > 2:
        return CxElement(n, objs, objs, (), terms)
    big = [i for i, d in enumerate(dims) if d > 0]
    if len(big) == 1:
        i = big[0]
        word = lift_path(blocks[i][1].path, offsets[i], widths[i], objs)
    else:
        i, j = big
        word = _block_square(objs, (offsets[i], widths[i], blocks[i][1].path),
                             (offsets[j], widths[j], blocks[j][1].path))
    return CxElement(2, objs, objs, word.letters, terms)


def _block_square(objs, left, right) -> Path:
    (oi, wi, c), (oj, wj, d) = left, right

    def at(ci, dj):
        o = list(objs)
        o[oi:oi + wi] = _wrap(wi, ci)
        o[oj:oj + wj] = _wrap(wj, dj)
        return tuple(o)
    p1 = lift_path(c, oi, wi, at(c.src, d.src))
    p2 = lift_path(d, oj, wj, at(c.tgt, d.src))
    p3 = lift_path(c, oi, wi, at(c.src, d.tgt))
    p4 = lift_path(d, oj, wj, at(c.src, d.src))
    return compose(p1, p2, inverse(p3), inverse(p4))


@lru_cache(maxsize=None)
def _tensor(factors: tuple) -> FreeCrossedComplex:
    return TensorComplex(factors)


def flat_factors(C: FreeCrossedComplex) -> tuple:
    return C.factors if isinstance(C, TensorComplex) else (C,)


def tensor(*cs: FreeCrossedComplex) -> FreeCrossedComplex:
    """Flattened tensor product; one factor is returned as is."""
    flat = []
    for c in cs:
        flat.extend(flat_factors(c))
    if len(flat) == 1:
        return flat[0]
    return _tensor(tuple(flat))


def split_gen(C: FreeCrossedComplex, widths: Sequence[int], g) -> list:
    """Split a generator (or object) of a tensor into per-block items."""
    if sum(widths) == 1:
        return [g]
    out = []
    k = 0
    for w in widths:
        part = g[k:k + w]
        out.append(part[0] if w == 1 else tuple(part))
        k += w
    return out


def tensor_morphisms(*maps: CxMorphism) -> CxMorphism:
    """f_1 (x) ... (x) f_k between the flattened tensors."""
    S = tensor(*(m.source for m in maps))
    T = tensor(*(m.target for m in maps))
    sw = [block_width(m.source) for m in maps]
    if len(maps) == 1:
        return maps[0]

    def on_obj(x):
        parts = split_gen(S, sw, x)
        out = ()
        for m, p in zip(maps, parts):
            out += _wrap(block_width(m.target), m.on_object(p))
        return out[0] if len(out) == 1 else out

    def on_gen(g):
        parts = split_gen(S, sw, g)
        return tensor_elements(T, [(m.target, m.image(p)) for m, p in zip(maps, parts)])

    return CxMorphism(S, T, on_obj, on_gen, name="(x)".join(m.name for m in maps))


def koszul_sign(dims: Sequence[int], perm: Sequence[int]) -> int:
    """Sign of moving item perm[k] to position k, with graded commutativity."""
    s = 0
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                s += dims[perm[a]] * dims[perm[b]]
    return -1 if s % 2 else 1


def permute(C: FreeCrossedComplex, perm: Sequence[int]) -> CxMorphism:
    """Slot permutation: factor perm[k] of C becomes factor k of the result."""
    F = flat_factors(C)
    T = tensor(*(F[p] for p in perm))
    if list(perm) == list(range(len(F))):
        return identity_morphism(C)

    def on_obj(x):
        return tuple(x[p] for p in perm)

    def on_gen(g):
        dims = C.dims_of(g)
        h = tuple(g[p] for p in perm)
        e = T.gen_element(h)
        sgn = koszul_sign(dims, perm)
        return e if sgn == 1 else T.inv(e)

    return CxMorphism(C, T, on_obj, on_gen, name=f"perm{tuple(perm)}")


def tensor_symmetry(C: FreeCrossedComplex, D: FreeCrossedComplex) -> CxMorphism:
    """The symmetry C (x) D -> D (x) C, moving blocks as wholes."""
    wc, wd = len(flat_factors(C)), len(flat_factors(D))
    perm = list(range(wc, wc + wd)) + list(range(wc))
    return permute(tensor(C, D), perm)


def interval() -> FreeCrossedComplex:
    return pi(std_simplex(1))


def point() -> FreeCrossedComplex:
    return pi(std_simplex(0))


def interval_cube(r: int) -> FreeCrossedComplex:
    """The r-fold tensor power of the interval; r = 0 gives the point."""
    if r < 0:
        raise CrossedError("cube dimension must be >= 0")
    if r == 0:
        return point()
    return tensor(*([interval()] * r))


END = {"-": (0,), "+": (1,), 0: (0,), 1: (1,)}


def insert_object(C: FreeCrossedComplex, T: FreeCrossedComplex, pos: int, x) -> CxMorphism:
    """The inclusion C -> T placing the fixed object x in slot ``pos``.

    C is T with slot ``pos`` removed; if that leaves nothing, C is the point.
    """
    wt = len(flat_factors(T))

    def on_obj(y):
        if wt == 1:
            return x
        ys = _wrap(wt - 1, y)
        return ys[:pos] + (x,) + ys[pos:]

    def on_gen(g):
        if wt == 1:
            return T.obj(x)
        gs = _wrap(wt - 1, g)
        return T.gen_element(gs[:pos] + (x,) + gs[pos:])

    return CxMorphism(C, T, on_obj, on_gen, name=f"ins{pos}")


def face_inclusion(r: int, i: int, alpha) -> CxMorphism:
    """Inclusion of the alpha face of the r-cube in direction i (1-based)."""
    if not 1 <= i <= r:
        raise CrossedError(f"face direction {i} out of range 1..{r}")
    src = interval_cube(r - 1)
    tgt = interval_cube(r)
    if r == 1:
        return CxMorphism(src, tgt, lambda y: END[alpha], lambda g: tgt.obj(END[alpha]),
                          name=f"f{alpha}{i}")
    f = insert_object(src, tgt, i - 1, END[alpha])
    f.name = f"f{alpha}{i}"
    return f


def unit_iso(C: FreeCrossedComplex) -> CxMorphism:
    """C -> C (x) pi(0), appending the point."""
    T = tensor(C, point())
    w = len(flat_factors(C))
    return insert_object(C, T, w, (0,))


def unit_iso_inverse(C: FreeCrossedComplex) -> CxMorphism:
    """C (x) pi(0) -> C, dropping the point slot."""
    T = tensor(C, point())
    w = len(flat_factors(C))

    def strip(g):
        return g[0] if w == 1 else tuple(g[:w])

    return CxMorphism(T, C, strip, lambda g: C.gen_element(strip(g)), name="unit")
