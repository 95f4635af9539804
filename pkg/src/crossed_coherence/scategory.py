"""Finite categories, simplicially enriched categories, and the free resolution S(A).

A k-simplex of S(A)(x, y) is a string g_1, ..., g_m of composable non-identity
arrows from x to y together with a chain of cut sets

    U_0 <= U_1 <= ... <= U_k = {1, ..., m-1}

(cut c sits between g_c and g_(c+1)).  Face d_j for j < k drops U_j; d_k
drops U_k and composes the string across every cut not in U_(k-1).  The
identity of x is the empty string.  Composition concatenates strings and adds
the junction to every cut set.  S(A)(x, y) for a string of length m is the
cube (D[1])^(m-1): vertex i of a simplex is the indicator of U_i.

Only categories in which composites of non-identities are non-identities are
resolved this way (posets, free categories, and the like).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from .coherence import pi_coherent
from .crossed import identity_morphism
from .errors import BudgetExceeded, CrossedError
from .homotopy import RNHomotopy, convolve, identity_simplex, rn_source, simplex_face, simplex_operator
from .multi import Splitting, multi_a
from .nerve import characteristic_map
from .pi import pi, pi_map
from .simplicial import (FiniteSimplicialSet, Realized, Simplex, SimplicialMap, SimplicialSet, assemble,
                         components, product, std_simplex)
from .tensor import insert_object, tensor_morphisms


class FiniteCategory:
    """A finite category given by named non-identity arrows and their composites.

    ``composites[(g, f)]`` is the name of g o f (f first).  Identities are
    implicit and named ``1_x``.
    """

    def __init__(self, name: str, objects, arrows: dict, composites: dict | None = None):
        self.name = name
        self.objects = tuple(objects)
        self.arrows = dict(arrows)
        self.composites = dict(composites or {})
        self.validate()

    def identity(self, x) -> str:
        return f"1_{x}"

    def is_identity(self, a) -> bool:
        return a not in self.arrows

    def ends(self, a) -> tuple:
        if a in self.arrows:
            return self.arrows[a]
        for x in self.objects:
            if a == self.identity(x):
                return x, x
        raise CrossedError(f"{self.name}: unknown arrow {a!r}")

    def compose(self, g, f):
        """g o f."""
        if self.ends(f)[1] != self.ends(g)[0]:
            raise CrossedError(f"{self.name}: {g} o {f} is not composable")
        if self.is_identity(f):
            return g
        if self.is_identity(g):
            return f
        try:
            return self.composites[(g, f)]
        except KeyError:
            raise CrossedError(f"{self.name}: composite {g} o {f} is missing") from None

    def hom(self, x, y) -> list:
        out = [a for a, e in self.arrows.items() if e == (x, y)]
        return ([self.identity(x)] if x == y else []) + out

    def validate(self):
        for a, (x, y) in self.arrows.items():
            if x not in self.objects or y not in self.objects:
                raise CrossedError(f"{self.name}: arrow {a} has an unknown end")
        for f, (x, y) in self.arrows.items():
            for g, (y2, z) in self.arrows.items():
                if y2 != y:
                    continue
                gf = self.compose(g, f)
                if self.ends(gf) != (x, z):
                    raise CrossedError(f"{self.name}: {g} o {f} has the wrong ends")
                if self.is_identity(gf):
                    raise CrossedError(f"{self.name}: {g} o {f} is an identity; S(A) needs "
                                       "composites of non-identities to be non-identities")
                for h, (z2, _) in self.arrows.items():
                    if z2 == z and self.compose(h, gf) != self.compose(self.compose(h, g), f):
                        raise CrossedError(f"{self.name}: composition is not associative at {h},{g},{f}")

    def strings(self, x, y, cap: int = 8) -> list:
        """Composable strings of non-identity arrows from x to y (f first)."""
        out = [()] if x == y else []
        stack = [((), x)]
        while stack:
            s, at = stack.pop()
            for a, (u, v) in self.arrows.items():
                if u != at:
                    continue
                t = s + (a,)
                if len(t) > cap:
                    raise BudgetExceeded(f"{self.name}: strings longer than {cap}; is there a loop?")
                if v == y:
                    out.append(t)
                stack.append((t, v))
        return sorted(out, key=lambda t: (len(t), t))

    def __repr__(self):
        return f"<FiniteCategory {self.name}>"


def poset_category(n: int) -> FiniteCategory:
    """[n] = 0 < 1 < ... < n as a category."""
    arrows = {f"{i}{j}": (i, j) for i in range(n + 1) for j in range(i + 1, n + 1)}
    comp = {(f"{j}{k}", f"{i}{j}"): f"{i}{k}"
            for i in range(n + 1) for j in range(i + 1, n + 1) for k in range(j + 1, n + 1)}
    return FiniteCategory(f"[{n}]", range(n + 1), arrows, comp)


def two_object_category() -> FiniteCategory:
    """Objects 0, 1 and a single arrow u: 0 -> 1."""
    return FiniteCategory("[1]", (0, 1), {"u": (0, 1)})


def one_object_category() -> FiniteCategory:
    return FiniteCategory("[0]", (0,), {})


# -- simplicially enriched categories -------------------------------------------

@dataclass
class FiniteSCategory:
    name: str
    objects: tuple
    homs: dict                     # (x, y) -> SimplicialSet
    composition: Callable          # (x, y, z) -> SimplicialMap hom(y,z) x hom(x,y) -> hom(x,z)
    identities: dict               # x -> vertex of hom(x, x)
    _comp: dict = field(default_factory=dict, repr=False)

    def hom(self, x, y) -> SimplicialSet:
        return self.homs[(x, y)]

    def compose_map(self, x, y, z) -> SimplicialMap:
        k = (x, y, z)
        if k not in self._comp:
            self._comp[k] = self.composition(x, y, z)
        return self._comp[k]

    def compose(self, x, y, z, t: Simplex, s: Simplex) -> Simplex:
        """t o s for simplices of equal dimension in hom(y, z) and hom(x, y)."""
        m = self.compose_map(x, y, z)
        P = m.source
        return m(P.normalize([t, s]))

    def identity_simplex(self, x, k: int) -> Simplex:
        H = self.hom(x, x)
        return H.apply(self.identities[x], (0,) * (k + 1))

    def check(self, cap: int = 2) -> list:
        """Composition simplicial, associative and unital on all simplices up to cap."""
        out = []
        obs = self.objects
        for x, y, z in itertools.product(obs, repeat=3):
            if not self._has(x, y) or not self._has(y, z):
                continue
            errs = self.compose_map(x, y, z).check(cap)
            out.append((f"composition {x},{y},{z} is simplicial", not errs, errs[:3]))
        for x, y in itertools.product(obs, repeat=2):
            if not self._has(x, y):
                continue
            bad = []
            H = self.hom(x, y)
            for k in range(cap + 1):
                for s in H.simplices(k):
                    if self.compose(x, y, y, self.identity_simplex(y, k), s) != s or \
                            self.compose(x, x, y, s, self.identity_simplex(x, k)) != s:
                        bad.append(s)
            out.append((f"units on {x},{y}", not bad, bad[:3]))
        for x, y, z, w in itertools.product(obs, repeat=4):
            if not (self._has(x, y) and self._has(y, z) and self._has(z, w)):
                continue
            bad = []
            for k in range(cap + 1):
                for r, t, s in itertools.product(self.hom(z, w).simplices(k), self.hom(y, z).simplices(k),
                                                 self.hom(x, y).simplices(k)):
                    lhs = self.compose(x, z, w, r, self.compose(x, y, z, t, s))
                    rhs = self.compose(x, y, w, self.compose(y, z, w, r, t), s)
                    if lhs != rhs:
                        bad.append((r, t, s))
            out.append((f"associativity on {x},{y},{z},{w}", not bad, bad[:3]))
        return out

    def _has(self, x, y) -> bool:
        return (x, y) in self.homs


def discrete_scategory(A: FiniteCategory) -> FiniteSCategory:
    """A category viewed as simplicially enriched with discrete homs."""
    homs = {}
    for x, y in itertools.product(A.objects, repeat=2):
        arrows = A.hom(x, y)
        if arrows:
            homs[(x, y)] = FiniteSimplicialSet(f"{A.name}({x},{y})", {0: arrows}, {})

    def composition(x, y, z):
        P = product(homs[(y, z)], homs[(x, y)])
        T = homs[(x, z)]

        def img(c):
            t, s = components(P, P.simplex(c))
            return Simplex(A.compose(t.base, s.base), 0)
        return SimplicialMap(P, T, img, name="o")

    ids = {x: Simplex(A.identity(x), 0) for x in A.objects}
    return FiniteSCategory(A.name, A.objects, homs, composition, ids)


# -- the resolution -----------------------------------------------------------------

@dataclass(frozen=True)
class StringSimplex:
    """A string of non-identity arrows with a chain of cut sets (the last is all cuts)."""
    string: tuple
    flags: tuple

    @property
    def dim(self) -> int:
        return len(self.flags) - 1

    @property
    def cuts(self) -> frozenset:
        return frozenset(range(1, len(self.string)))

    def vertex(self, i: int) -> tuple:
        """Cube coordinates of vertex i: 1 where the cut is split."""
        return tuple(1 if c in self.flags[i] else 0 for c in range(1, len(self.string)))


def _string_face(A: FiniteCategory, x: StringSimplex, j: int) -> StringSimplex:
    k = x.dim
    if j < k:
        return StringSimplex(x.string, x.flags[:j] + x.flags[j + 1:])
    keep = sorted(x.flags[k - 1])
    groups, cur = [], [x.string[0]] if x.string else []
    for c in range(1, len(x.string)):
        if c in x.flags[k - 1]:
            groups.append(cur)
            cur = [x.string[c]]
        else:
            cur.append(x.string[c])
    if cur:
        groups.append(cur)
    new = []
    for g in groups:
        a = g[0]
        for b in g[1:]:
            a = A.compose(b, a)
        new.append(a)
    index = {c: i + 1 for i, c in enumerate(keep)}
    flags = tuple(frozenset(index[c] for c in U) for U in x.flags[:k])
    return StringSimplex(tuple(new), flags)


def _string_degen(x: StringSimplex, j: int) -> StringSimplex:
    return StringSimplex(x.string, x.flags[:j + 1] + x.flags[j:])


def _chains(cuts: tuple, k: int):
    """All chains U_0 <= ... <= U_k = cuts, via the first level each cut enters."""
    for levels in itertools.product(range(k + 1), repeat=len(cuts)):
        yield tuple(frozenset(c for c, l in zip(cuts, levels) if l <= i) for i in range(k + 1))


def _object_of(R: Realized, s: Simplex, degen: Callable):
    """The object behind a possibly degenerate simplex of a realized set."""
    x = R.obj(s.base)
    theta = list(s.surjection())
    ops = []
    while len(theta) > s.base_dim + 1:
        j = next(i for i in range(len(theta) - 1) if theta[i] == theta[i + 1])
        ops.append(j)
        del theta[j + 1]
    for j in reversed(ops):
        x = degen(x, j)
    return x


class SResolution(FiniteSCategory):
    """S(A) truncated at simplicial dimension ``dim_cap``."""

    def __init__(self, A: FiniteCategory, dim_cap: int = 3, length_cap: int = 8):
        self.category = A
        self.dim_cap = dim_cap
        homs = {}
        for x, y in itertools.product(A.objects, repeat=2):
            strings = A.strings(x, y, length_cap)
            if not strings:
                continue
            simp = {}
            for k in range(dim_cap + 1):
                simp[k] = [StringSimplex(s, U) for s in strings
                           for U in _chains(tuple(range(1, len(s))), k)]
            homs[(x, y)] = Realized(f"S({A.name})({x},{y})", simp, key=lambda z: z,
                                    face=lambda z, j: _string_face(A, z, j), degen=_string_degen,
                                    dim=lambda z: z.dim, prefix="s")
        ids = {x: homs[(x, x)].locate(StringSimplex((), (frozenset(),))) for x in A.objects}
        super().__init__(f"S({A.name})", A.objects, homs, self._composition, ids)

    def string_of(self, x, y, s: Simplex) -> StringSimplex:
        return _object_of(self.hom(x, y), s, _string_degen)

    def _composition(self, x, y, z) -> SimplicialMap:
        P = product(self.hom(y, z), self.hom(x, y))
        T = self.hom(x, z)

        def img(c):
            t, s = components(P, P.simplex(c))
            return T.locate(concat(self.string_of(y, z, t), self.string_of(x, y, s)))
        return SimplicialMap(P, T, img, name="concat")


def concat(t: StringSimplex, s: StringSimplex) -> StringSimplex:
    """t o s: s's string first, the junction added to every cut set."""
    if not s.string:
        return t
    if not t.string:
        return s
    m = len(s.string)
    flags = tuple(U | frozenset(c + m for c in V) | {m} for U, V in zip(s.flags, t.flags))
    return StringSimplex(s.string + t.string, flags)


def s_resolution(A: FiniteCategory, dim_cap: int = 3, length_cap: int = 8) -> SResolution:
    return SResolution(A, dim_cap, length_cap)


def cube_count_check(n: int) -> tuple:
    """Nondegenerate cell counts of S[n](0, n) against (D[1])^(n-1)."""
    S = s_resolution(poset_category(n), dim_cap=max(n - 1, 0))
    H = S.hom(0, n)
    D1 = std_simplex(1)
    cube = product(*([D1] * (n - 1))) if n > 1 else std_simplex(0)
    top = max(n - 1, 0)
    got, want = H.counts(top), cube.counts(top)
    return f"S[{n}](0,{n}) has the cells of a {n - 1}-cube", got == want, [got, want]


# -- the coherent pi diagram ------------------------------------------------------------

@dataclass
class SFunctor:
    """A functor from a finite category to simplicial sets."""
    category: FiniteCategory
    spaces: dict                   # object -> SimplicialSet
    maps: dict                     # arrow name -> SimplicialMap

    def space(self, x) -> SimplicialSet:
        return self.spaces[x]

    def arrow(self, a) -> SimplicialMap:
        A = self.category
        if A.is_identity(a):
            x = A.ends(a)[0]
            return SimplicialMap(self.spaces[x], self.spaces[x], lambda c: self.spaces[x].simplex(c), name=a)
        return self.maps[a]

    def check(self, cap: int = 3) -> list:
        A = self.category
        out = []
        for a, (x, y) in A.arrows.items():
            f = self.maps[a]
            ok = f.source is self.spaces[x] and f.target is self.spaces[y] and not f.check(cap)
            out.append((f"{a} is a simplicial map", ok, []))
        for (g, f), gf in A.composites.items():
            out.append((f"functorial on {g} o {f}", self.arrow(gf).equals(self.arrow(g).compose(self.arrow(f)), cap), []))
        return out


def as_vertex(f: SimplicialMap) -> SimplicialMap:
    """A map K -> L as the 0-simplex K x D[0] -> L of the enriched hom."""
    K = f.source
    P = product(K, std_simplex(0))
    return SimplicialMap(P, f.target, lambda c: f(assemble(K, list(components(P, P.simplex(c))[:-1]))),
                         name=f.name)


class CoherentPiDiagram:
    """The enriched functor S(A) -> crossed complexes extending pi . K."""

    def __init__(self, K: SFunctor, dim_cap: int = 2):
        self.K = K
        self.resolution = s_resolution(K.category, dim_cap)
        self._cache = {}

    def on_object(self, x):
        return pi(self.K.space(x))

    def image(self, x, y, s: Simplex) -> RNHomotopy:
        """The k-simplex of CRS(pi K x, pi K y) attached to a k-simplex of S(A)(x, y)."""
        key = (x, y, s)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self._image(x, y, s)
        return hit

    def _image(self, x, y, s: Simplex) -> RNHomotopy:
        z = self.resolution.string_of(x, y, s)
        k = z.dim
        PK = self.on_object(x)
        m = len(z.string)
        if m == 0:
            return identity_simplex(PK, k)
        fs = [as_vertex(self.K.arrow(a)) for a in z.string]
        F = pi_coherent(fs, 0)
        if m == 1:
            return simplex_operator(F, (0,) * (k + 1))
        D1 = std_simplex(1)
        Q = product(*([D1] * (m - 1)))
        seqs = [D1.from_sequence([z.vertex(i)[c] for i in range(k + 1)]) for c in range(m - 1)]
        sigma = Q.normalize(seqs) if m > 2 else seqs[0]
        cube = multi_a(Splitting.of_blocks([D1] * (m - 1))).compose(pi_map(characteristic_map(Q, sigma)))
        w = F.width
        lower, upper = rn_source(PK, m - 1, None), rn_source(PK, m - 1, 0)
        ins = insert_object(lower, upper, w, (0,))
        total = F.morphism.compose(ins).compose(tensor_morphisms(identity_morphism(PK), cube))
        return RNHomotopy(PK, 0, k, total)

    def check(self, cap: int = 2) -> list:
        """Strict enriched functoriality, units and simpliciality up to dimension cap."""
        S = self.resolution
        A = S.category
        out = []
        for x, y in S.homs:
            H = S.hom(x, y)
            bad = []
            for k in range(1, cap + 1):
                for s in H.simplices(k):
                    img = self.image(x, y, s)
                    for i in range(k + 1):
                        if simplex_face(img, i).morphism.differences(self.image(x, y, H.face(s, i)).morphism):
                            bad.append((s, i))
            out.append((f"simplicial on S({x},{y})", not bad, bad[:3]))
        for x in A.objects:
            ok = all(not self.image(x, x, S.identity_simplex(x, k)).morphism.differences(
                identity_simplex(self.on_object(x), k).morphism) for k in range(cap + 1))
            out.append((f"unit at {x}", ok, []))
        for x, y, z in itertools.product(A.objects, repeat=3):
            if (x, y) not in S.homs or (y, z) not in S.homs:
                continue
            bad = []
            for k in range(cap + 1):
                for t, s in itertools.product(S.hom(y, z).simplices(k), S.hom(x, y).simplices(k)):
                    lhs = self.image(x, z, S.compose(x, y, z, t, s))
                    rhs = convolve(self.image(y, z, t), self.image(x, y, s))
                    if lhs.morphism.differences(rhs.morphism):
                        bad.append((t, s))
            out.append((f"composition {x},{y},{z}", not bad, bad[:3]))
        return out


def coherent_pi_diagram(K: SFunctor, dim_cap: int = 2) -> CoherentPiDiagram:
    return CoherentPiDiagram(K, dim_cap)
