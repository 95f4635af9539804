"""Free crossed complexes, their elements in normal form, and morphisms.

Element representation, by dimension:

* 0: an object.
* 1: a freely reduced word in the arrow generators (a ``Path``).
* 2: the pair (boundary loop, abelianized vector).  The vector is a finite
  sum of terms ``(gen, twist)`` with integer coefficients, where ``twist`` is
  the canonical representative of a class in the quotient groupoid running
  from the generator's base to the element's base.  For free crossed modules
  this pair determines the element.
* >= 3: the vector alone (the word is empty).

Twists are canonicalized by the complex's solver, so two elements are equal
iff their dataclass fields are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable

from .errors import CapOverflow, CrossedError, EndpointMismatch
from .groupoid import (Path, PresentationSolver, Presentation, arrow, compose, conjugate,
                       identity, inverse)


@dataclass(frozen=True)
class CxElement:
    dim: int
    src: Hashable
    tgt: Hashable
    word: tuple = ()
    terms: frozenset = frozenset()

    @property
    def base(self):
        return self.src

    @property
    def path(self) -> Path:
        return Path(self.src, self.tgt, self.word)

    @property
    def is_trivial(self) -> bool:
        return not self.word and not self.terms

    def vector(self) -> dict:
        return dict(self.terms)

    def __repr__(self):
        if self.dim == 0:
            return f"obj({self.src!r})"
        if self.dim == 1:
            return repr(self.path)
        ts = " + ".join(f"{c}*{g!r}^{t!r}" for (g, t), c in sorted(self.terms, key=repr)) or "0"
        if self.dim == 2:
            return f"[{self.path!r} | {ts}]"
        return f"[{ts}]@{self.src!r}"


def _acc(out: dict, key, c: int):
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class FreeCrossedComplex:
    """Abstract free crossed complex.

    Subclasses provide ``objects``, ``_gens(d)``, ``gen_dim``, ``endpoints``
    (dimension 1), ``base`` (dimension >= 2) and ``_boundary`` (dimension
    >= 2).  The quotient groupoid solver is built lazily from the 1- and
    2-dimensional data unless a subclass supplies ``_make_solver``.
    """

    name = "C"
    dim_cap: int | None = None
    solver_kind: str | None = "auto"

    # -- structure ----------------------------------------------------------
    def objects(self) -> tuple:
        raise NotImplementedError

    def _gens(self, d: int) -> tuple:
        raise NotImplementedError

    def gen_dim(self, g) -> int:
        raise NotImplementedError

    def endpoints(self, g) -> tuple:
        raise NotImplementedError

    def base(self, g):
        raise NotImplementedError

    def _boundary(self, g) -> CxElement:
        raise NotImplementedError

    def top_dim(self) -> int | None:
        return None

    def _cache(self, key):
        d = self.__dict__.setdefault("_caches", {})
        return d.setdefault(key, {})

    def gens(self, d: int) -> tuple:
        if d == 0:
            return self.objects()
        top = self.top_dim()
        if d < 0 or (top is not None and d > top):
            return ()
        if self.dim_cap is not None and d > self.dim_cap:
            raise CapOverflow(f"{self.name}: generators of dimension {d} exceed cap {self.dim_cap}")
        memo = self._cache("gens")
        if d not in memo:
            memo[d] = tuple(self._gens(d))
        return memo[d]

    def effective_top(self, cap: int | None = None) -> int:
        t = self.top_dim()
        if t is None:
            t = self.dim_cap if cap is None else cap
            if t is None:
                raise CapOverflow(f"{self.name}: unbounded and no cap given")
        elif cap is not None:
            t = min(t, cap)
        if self.dim_cap is not None:
            t = min(t, self.dim_cap)
        return t

    def boundary(self, g) -> CxElement:
        memo = self._cache("boundary")
        hit = memo.get(g)
        if hit is None:
            hit = memo[g] = self._boundary(g)
        return hit

    def gen_base(self, g):
        d = self.gen_dim(g)
        if d == 0:
            return g
        if d == 1:
            return self.endpoints(g)[0]
        return self.base(g)

    def counts(self, cap: int | None = None) -> list:
        return [len(self.gens(d)) for d in range(self.effective_top(cap) + 1)]

    @property
    def solver(self):
        s = self.__dict__.get("_solver")
        if s is None:
            s = self.__dict__["_solver"] = self._make_solver()
        return s

    def _make_solver(self):
        arrows = {g: self.endpoints(g) for g in self.gens(1)}
        rels = [self.boundary(g).path for g in self.gens(2)] if self.effective_top() >= 2 else []
        return PresentationSolver(Presentation(self.objects(), arrows, rels), self.solver_kind)

    def canon(self, p: Path) -> Path:
        return self.solver.canon(p)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"

    # -- elements -------------------------------------------------------------
    def obj(self, x) -> CxElement:
        return CxElement(0, x, x)

    def path_element(self, p: Path) -> CxElement:
        return CxElement(1, p.src, p.tgt, p.letters)

    def arrow_path(self, g, sign: int = 1) -> Path:
        s, t = self.endpoints(g)
        return arrow(g, s, t, sign)

    def zero(self, d: int, x) -> CxElement:
        if d == 0:
            return self.obj(x)
        return CxElement(d, x, x)

    def gen_element(self, g) -> CxElement:
        d = self.gen_dim(g)
        if d == 0:
            return self.obj(g)
        if d == 1:
            return self.path_element(self.arrow_path(g))
        x = self.base(g)
        word = self.boundary(g).word if d == 2 else ()
        return CxElement(d, x, x, word, frozenset({((g, identity(x)), 1)}))

    def make_terms(self, raw: dict, base) -> frozenset:
        """Canonicalize the twists of a raw term dictionary."""
        out = {}
        for (g, t), c in raw.items():
            if not c:
                continue
            if t.tgt != base or t.src != self.gen_base(g):
                raise EndpointMismatch(f"twist {t!r} does not run from base of {g!r} to {base!r}")
            _acc(out, (g, self.canon(t)), c)
        return frozenset(out.items())

    def element(self, d: int, base, terms: dict, word: Path | None = None) -> CxElement:
        if d < 2:
            raise CrossedError("element() is for dimension >= 2")
        w = () if word is None else word.letters
        if word is not None and (word.src != base or word.tgt != base):
            raise EndpointMismatch("boundary word must be a loop at the base")
        return CxElement(d, base, base, w, self.make_terms(terms, base))

    def mul(self, a: CxElement, b: CxElement) -> CxElement:
        if a.dim != b.dim:
            raise CrossedError("dimension mismatch in product")
        if a.dim == 1:
            return self.path_element(compose(a.path, b.path))
        if a.dim == 0:
            if a.src != b.src:
                raise EndpointMismatch("objects differ")
            return a
        if a.src != b.src:
            raise EndpointMismatch(f"bases differ: {a.src!r} vs {b.src!r}")
        out = dict(a.terms)
        for k, c in b.terms:
            _acc(out, k, c)
        word = compose(a.path, b.path).letters if a.dim == 2 else ()
        return CxElement(a.dim, a.src, a.src, word, frozenset(out.items()))

    def product(self, items: Iterable[CxElement], d: int, x) -> CxElement:
        acc = self.path_element(identity(x)) if d == 1 else self.zero(d, x)
        for e in items:
            acc = self.mul(acc, e)
        return acc

    def inv(self, a: CxElement) -> CxElement:
        if a.dim == 0:
            return a
        if a.dim == 1:
            return self.path_element(inverse(a.path))
        word = inverse(a.path).letters if a.dim == 2 else ()
        return CxElement(a.dim, a.src, a.src, word, frozenset((k, -c) for k, c in a.terms))

    def scale(self, a: CxElement, k: int) -> CxElement:
        if k == 1:
            return a
        if a.dim == 1 and a.src != a.tgt and k != -1:
            raise EndpointMismatch("powers need a loop")
        if k < 0:
            return self.scale(self.inv(a), -k)
        if a.dim == 1:
            return self.product([a] * k, 1, a.src)
        if a.dim == 2:
            return self.product([a] * k, 2, a.src)
        return CxElement(a.dim, a.src, a.src, (), frozenset((t, c * k) for t, c in a.terms if c * k))

    def act(self, a: CxElement, u: Path) -> CxElement:
        """The action a^u for a path u starting at the base of a."""
        if a.dim < 2:
            raise CrossedError("only elements of dimension >= 2 carry an action")
        if u.src != a.src:
            raise EndpointMismatch(f"cannot act on element at {a.src!r} by path from {u.src!r}")
        if u.is_identity:
            return a
        word = conjugate(a.path, u).letters if a.dim == 2 else ()
        out = {}
        for (g, t), c in a.terms:
            _acc(out, (g, self.canon(compose(t, u))), c)
        return CxElement(a.dim, u.tgt, u.tgt, word, frozenset(out.items()))

    def add_vectors(self, items: Iterable[tuple], d: int, x) -> CxElement:
        """Sum of (coefficient, element) pairs, keeping only vectors."""
        out = {}
        for k, e in items:
            if e.dim != d or e.src != x:
                raise EndpointMismatch(f"summand {e!r} not of dimension {d} at {x!r}")
            for t, c in e.terms:
                _acc(out, t, c * k)
        return CxElement(d, x, x, (), frozenset(out.items()))

    def delta(self, a: CxElement):
        """Boundary: endpoints for d=1, the loop for d=2, an element below otherwise.

        For d >= 3 the result is computed on vectors only, so in dimension 2
        its word is empty; ``realizable`` then checks it lies in the kernel.
        """
        if a.dim == 1:
            return (a.src, a.tgt)
        if a.dim == 2:
            return self.path_element(a.path)
        items = [(c, self.act(self.boundary(g), t)) for (g, t), c in a.terms]
        return self.add_vectors(items, a.dim - 1, a.src)

    def fox(self, p: Path) -> dict:
        """Free derivative of a path, based at its source."""
        out = {}
        prefix = identity(p.src)
        for g, e in p.letters:
            step = self.arrow_path(g, e)
            if e == 1:
                _acc(out, (g, self.canon(inverse(prefix))), 1)
            else:
                _acc(out, (g, self.canon(inverse(compose(prefix, step)))), -1)
            prefix = compose(prefix, step)
        return out

    def _fox_boundary(self, g) -> dict:
        memo = self._cache("fox")
        hit = memo.get(g)
        if hit is None:
            hit = memo[g] = self.fox(self.boundary(g).path)
        return hit

    def d_ab(self, a: CxElement) -> dict:
        """Image of the vector of a 2-dimensional element in the 1-dimensional module."""
        out = {}
        for (g, t), c in a.terms:
            for (e, v), k in self._fox_boundary(g).items():
                _acc(out, (e, self.canon(compose(v, t))), c * k)
        return out

    def realizable(self, a: CxElement) -> bool:
        """Whether a (word, vector) pair in dimension 2 is an actual element."""
        if a.dim != 2:
            return True
        p = a.path
        return self.solver.is_trivial(p) and self.fox(p) == self.d_ab(a)

    def elements_equal(self, a: CxElement, b: CxElement) -> bool:
        if a.dim != b.dim or a.src != b.src or a.tgt != b.tgt:
            raise EndpointMismatch("elements of different type")
        return a == b

    def normalize_element(self, d: int, base, factors: Iterable) -> CxElement:
        """Normal form of a raw product of generator factors.

        In dimension 1 the factors are ``(gen, sign)`` letters.  In dimension
        >= 2 they are ``(gen, twist_path, exponent)`` triples multiplied left
        to right.
        """
        if d == 0:
            return self.obj(base)
        if d == 1:
            acc = identity(base)
            for g, e in factors:
                acc = compose(acc, self.arrow_path(g, e))
            return self.path_element(acc)
        acc = self.zero(d, base)
        for g, t, k in factors:
            acc = self.mul(acc, self.scale(self.act(self.gen_element(g), t), k))
        return acc

    # -- validation -----------------------------------------------------------
    def check_boundaries(self, cap: int | None = None) -> list:
        """Generators whose boundary violates delta delta = 0 or well-typedness."""
        bad = []
        top = self.effective_top(cap)
        for d in range(1, top + 1):
            for g in self.gens(d):
                if d == 1:
                    s, t = self.endpoints(g)
                    if s not in self._objset() or t not in self._objset():
                        bad.append((g, "endpoints"))
                    continue
                b = self.boundary(g)
                if b.dim != d - 1 or b.src != self.base(g):
                    bad.append((g, "type"))
                elif d == 2:
                    if b.path.src != b.path.tgt:
                        bad.append((g, "not a loop"))
                elif d == 3:
                    if b.word or not self.realizable(b):
                        bad.append((g, "boundary not in kernel"))
                elif not self.delta(b).is_trivial:
                    bad.append((g, "delta delta"))
        return bad

    def _objset(self):
        s = self.__dict__.get("_objs")
        if s is None:
            s = self.__dict__["_objs"] = frozenset(self.objects())
        return s


class ExplicitComplex(FreeCrossedComplex):
    """A free crossed complex given by explicit tables (used for parsing)."""

    def __init__(self, name, objects, arrows: dict, higher: dict, solver: str | None = "auto"):
        self.name = name
        self._objects = tuple(objects)
        self._arrows = dict(arrows)
        self._higher = dict(higher)   # gen -> (dim, base, boundary_data)
        self.solver_kind = solver
        self._dims = {g: 1 for g in self._arrows}
        self._dims.update({g: d for g, (d, _, _) in self._higher.items()})
        self.dim_cap = max(self._dims.values(), default=0)

    def objects(self):
        return self._objects

    def _gens(self, d):
        if d == 1:
            return tuple(self._arrows)
        return tuple(g for g, (k, _, _) in self._higher.items() if k == d)

    def gen_dim(self, g):
        return self._dims.get(g, 0)

    def endpoints(self, g):
        return self._arrows[g]

    def base(self, g):
        return self._higher[g][1]

    def top_dim(self):
        return self.dim_cap

    def _boundary(self, g):
        d, x, data = self._higher[g]
        if d == 2:
            return self.normalize_element(1, x, data)
        # boundaries above dimension 2 are stored as vectors with an empty word
        raw = {}
        for h, t, k in data:
            _acc(raw, (h, t), k)
        return self.element(d - 1, x, raw)


# -- morphisms ----------------------------------------------------------------

class CxMorphism:
    """Morphism of free crossed complexes given on objects and generators.

    ``obj_map`` and ``gen_map`` may be dicts or callables; results are cached.
    """

    def __init__(self, source: FreeCrossedComplex, target: FreeCrossedComplex,
                 obj_map, gen_map, name: str = "f"):
        self.source = source
        self.target = target
        self.name = name
        self._obj_fn = obj_map if callable(obj_map) else dict(obj_map).__getitem__
        self._gen_fn = gen_map if callable(gen_map) else dict(gen_map).__getitem__
        self._objs = {}
        self._imgs = {}
        self._paths = {}

    def on_object(self, x):
        hit = self._objs.get(x)
        if hit is None:
            hit = self._objs[x] = self._obj_fn(x)
        return hit

    def image(self, g) -> CxElement:
        hit = self._imgs.get(g)
        if hit is None:
            if self.source.gen_dim(g) == 0:
                hit = self.target.obj(self.on_object(g))
            else:
                hit = self._gen_fn(g)
            self._imgs[g] = hit
        return hit

    def on_path(self, p: Path) -> Path:
        hit = self._paths.get(p)
        if hit is not None:
            return hit
        pieces = [identity(self.on_object(p.src))]
        for g, e in p.letters:
            q = self.image(g).path
            pieces.append(q if e == 1 else inverse(q))
        out = compose(*pieces)
        self._paths[p] = out
        return out

    def __call__(self, a: CxElement) -> CxElement:
        T = self.target
        if a.dim == 0:
            return T.obj(self.on_object(a.src))
        if a.dim == 1:
            return T.path_element(self.on_path(a.path))
        x = self.on_object(a.src)
        out = {}
        for (g, t), c in a.terms:
            img = T.act(self.image(g), self.on_path(t))
            for k, v in img.terms:
                _acc(out, k, v * c)
        word = self.on_path(a.path).letters if a.dim == 2 else ()
        return CxElement(a.dim, x, x, word, frozenset(out.items()))

    def compose(self, first: "CxMorphism") -> "CxMorphism":
        """``self o first``."""
        return CxMorphism(first.source, self.target,
                          lambda x: self.on_object(first.on_object(x)),
                          lambda g: self(first.image(g)),
                          name=f"{self.name}.{first.name}")

    def equals(self, other: "CxMorphism", cap: int | None = None) -> bool:
        return not self.differences(other, cap)

    def differences(self, other: "CxMorphism", cap: int | None = None, limit: int = 5) -> list:
        out = []
        top = self.source.effective_top(cap)
        for d in range(top + 1):
            for g in self.source.gens(d):
                a, b = self.image(g), other.image(g)
                if a != b:
                    out.append((g, a, b))
                    if len(out) >= limit:
                        return out
        return out

    def __repr__(self):
        return f"<CxMorphism {self.name}: {self.source.name} -> {self.target.name}>"


def identity_morphism(C: FreeCrossedComplex) -> CxMorphism:
    return CxMorphism(C, C, lambda x: x, C.gen_element, name="id")


def check_morphism(f: CxMorphism, cap: int | None = None) -> tuple:
    """Return (ok, report) where report names every offending generator."""
    S, T = f.source, f.target
    report = []
    top = S.effective_top(cap)
    for x in S.objects():
        if f.on_object(x) not in T._objset():
            report.append((x, "object image not an object"))
    for d in range(1, top + 1):
        for g in S.gens(d):
            try:
                img = f.image(g)
            except CrossedError as exc:
                report.append((g, f"image failed: {exc}"))
                continue
            if img.dim != d:
                report.append((g, "dimension"))
                continue
            if d == 1:
                s, t = S.endpoints(g)
                if (img.src, img.tgt) != (f.on_object(s), f.on_object(t)):
                    report.append((g, "endpoints"))
                continue
            if img.src != f.on_object(S.base(g)):
                report.append((g, "base"))
                continue
            if d == 2:
                if img.path != f.on_path(S.boundary(g).path):
                    report.append((g, "boundary word"))
                elif not T.realizable(img):
                    report.append((g, "vector does not match word"))
                continue
            lhs = T.delta(img)
            rhs = f(S.boundary(g))
            if d == 3:
                lhs = CxElement(2, lhs.src, lhs.src, (), lhs.terms)
                rhs = CxElement(2, rhs.src, rhs.src, (), rhs.terms)
            if lhs != rhs:
                report.append((g, "boundary"))
    return (not report, report)
