"""Finite simplicial sets stored by nondegenerate cells and their faces.

Every simplex is kept in degeneracy normal form: a nondegenerate base cell
together with a strictly decreasing list of degeneracy indices.  Simplicial
operators are handled through monotone maps of finite ordinals, written as
tuples ``phi`` with ``phi[k]`` the image of ``k``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Sequence

from .errors import BudgetExceeded, CapOverflow, CrossedError

Cell = Hashable


@dataclass(frozen=True)
class Simplex:
    """``s_{j1} ... s_{jk}(base)`` with ``j1 > ... > jk``."""

    base: Cell
    base_dim: int
    degeneracies: tuple = ()

    @property
    def dim(self) -> int:
        return self.base_dim + len(self.degeneracies)

    @property
    def is_degenerate(self) -> bool:
        return bool(self.degeneracies)

    def surjection(self) -> tuple:
        reps = set(self.degeneracies)
        out = [0]
        for k in range(self.dim):
            out.append(out[-1] if k in reps else out[-1] + 1)
        return tuple(out)

    @staticmethod
    def from_surjection(base, base_dim, theta) -> "Simplex":
        degs = tuple(k for k in range(len(theta) - 1, -1, -1)
                     if k + 1 < len(theta) and theta[k] == theta[k + 1])
        return Simplex(base, base_dim, degs)

    def __repr__(self):
        if not self.degeneracies:
            return f"<{self.base!r}>"
        ss = "".join(f"s{j}" for j in self.degeneracies)
        return f"<{ss} {self.base!r}>"


def coface(m: int, i: int) -> tuple:
    """The injection [m-1] -> [m] skipping i."""
    return tuple(k if k < i else k + 1 for k in range(m))


def codegeneracy(m: int, j: int) -> tuple:
    """The surjection [m+1] -> [m] hitting j twice."""
    return tuple(k if k <= j else k - 1 for k in range(m + 2))


def is_monotone(phi: Sequence[int]) -> bool:
    return all(phi[k] <= phi[k + 1] for k in range(len(phi) - 1))


class SimplicialSet:
    """Abstract simplicial set given by nondegenerate cells and raw faces.

    Subclasses implement ``cells``, ``cell_dim`` and ``raw_face``.  The
    ``solver`` attribute is a hint for the word problem backend used by the
    fundamental crossed complex.
    """

    name: str = "K"
    dim_cap: int | None = None
    solver: str | None = None

    # subclass hooks
    def cells(self, d: int) -> tuple:
        raise NotImplementedError

    def cell_dim(self, c: Cell) -> int:
        raise NotImplementedError

    def raw_face(self, c: Cell, i: int) -> Simplex:
        raise NotImplementedError

    def top_dim(self) -> int | None:
        """Largest dimension carrying cells, or None when unbounded."""
        return None

    # generic machinery
    def _memo(self):
        m = self.__dict__.get("_face_memo")
        if m is None:
            m = self.__dict__["_face_memo"] = {}
        return m

    def check_dim(self, d: int):
        if self.dim_cap is not None and d > self.dim_cap:
            raise CapOverflow(f"{self.name}: dimension {d} exceeds cap {self.dim_cap}")

    def simplex(self, c: Cell) -> Simplex:
        return Simplex(c, self.cell_dim(c))

    def face_on(self, c: Cell, verts: tuple) -> Simplex:
        """Restriction of the nondegenerate cell c to a vertex subset."""
        p = self.cell_dim(c)
        if len(verts) == p + 1:
            return Simplex(c, p)
        memo = self._memo()
        key = (c, verts)
        hit = memo.get(key)
        if hit is not None:
            return hit
        i = max(k for k in range(p + 1) if k not in verts)
        y = self.raw_face(c, i)
        res = self.apply(y, tuple(v if v < i else v - 1 for v in verts))
        memo[key] = res
        return res

    def apply(self, s: Simplex, phi: Sequence[int]) -> Simplex:
        """The simplex ``s . phi`` for a monotone ``phi: [k] -> [dim s]``."""
        theta = s.surjection()
        psi = [theta[v] for v in phi]
        image = sorted(set(psi))
        pos = {v: n for n, v in enumerate(image)}
        rho = [pos[v] for v in psi]
        f = self.face_on(s.base, tuple(image))
        tf = f.surjection()
        return Simplex.from_surjection(f.base, f.base_dim, [tf[r] for r in rho])

    def face(self, s: Simplex, i: int) -> Simplex:
        if s.dim == 0:
            raise CrossedError("vertices have no faces")
        return self.apply(s, coface(s.dim, i))

    def degeneracy(self, s: Simplex, j: int) -> Simplex:
        return self.apply(s, codegeneracy(s.dim, j))

    def vertex(self, s: Simplex, k: int) -> Cell:
        return self.apply(s, (k,)).base

    def vertices(self, s: Simplex) -> tuple:
        return tuple(self.vertex(s, k) for k in range(s.dim + 1))

    def edge(self, s: Simplex, i: int, j: int) -> Simplex:
        return self.apply(s, (i, j))

    def all_cells(self, max_dim: int) -> list:
        out = []
        for d in range(max_dim + 1):
            out.extend(self.cells(d))
        return out

    def simplices(self, m: int) -> list:
        """All m-simplices, degenerate ones included."""
        out = []
        for p in range(m + 1):
            for c in self.cells(p):
                for degs in itertools.combinations(range(m - 1, -1, -1), m - p):
                    out.append(Simplex(c, p, tuple(degs)))
        return out

    def effective_top(self, cap: int | None = None) -> int:
        t = self.top_dim()
        if t is None:
            t = self.dim_cap if cap is None else cap
            if t is None:
                raise CapOverflow(f"{self.name}: unbounded and no cap given")
        elif cap is not None:
            t = min(t, cap)
        return t

    def check_identities(self, max_dim: int | None = None) -> list:
        """Return the list of violated identities d_i d_j = d_{j-1} d_i."""
        bad = []
        top = self.effective_top(max_dim)
        for d in range(2, top + 1):
            for c in self.cells(d):
                s = self.simplex(c)
                for j in range(d + 1):
                    for i in range(j):
                        lhs = self.face(self.face(s, j), i)
                        rhs = self.face(self.face(s, i), j - 1)
                        if lhs != rhs:
                            bad.append((c, i, j, lhs, rhs))
        return bad

    def counts(self, max_dim: int | None = None) -> list:
        top = self.effective_top(max_dim)
        return [len(self.cells(d)) for d in range(top + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.counts()))

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class FiniteSimplicialSet(SimplicialSet):
    """Explicitly listed cells with their face tuples."""

    def __init__(self, name: str, cells: dict, faces: dict, solver: str | None = None):
        self.name = name
        self.solver = solver
        self._cells = {d: tuple(cs) for d, cs in sorted(cells.items()) if cs}
        self._dim = {}
        for d, cs in self._cells.items():
            for c in cs:
                if c in self._dim:
                    raise CrossedError(f"{name}: duplicate cell {c!r}")
                self._dim[c] = d
        self._faces = {c: tuple(fs) for c, fs in faces.items()}
        self.dim_cap = max(self._cells, default=0)
        self.validate()

    def cells(self, d):
        if d < 0:
            return ()
        return self._cells.get(d, ())

    def cell_dim(self, c):
        try:
            return self._dim[c]
        except KeyError:
            raise CrossedError(f"{self.name}: unknown cell {c!r}") from None

    def raw_face(self, c, i):
        return self._faces[c][i]

    def top_dim(self):
        return max(self._cells, default=0)

    def validate(self):
        for c, d in self._dim.items():
            if d == 0:
                if self._faces.get(c):
                    raise CrossedError(f"{self.name}: vertex {c!r} has faces")
                continue
            fs = self._faces.get(c)
            if fs is None or len(fs) != d + 1:
                raise CrossedError(f"{self.name}: cell {c!r} needs {d + 1} faces")
            for f in fs:
                if f.dim != d - 1:
                    raise CrossedError(f"{self.name}: face {f!r} of {c!r} has wrong dimension")
                if self._dim.get(f.base) != f.base_dim:
                    raise CrossedError(f"{self.name}: face base {f.base!r} of {c!r} unresolved")


class StdSimplex(SimplicialSet):
    """The nerve of the poset 0 < 1 < ... < n; cells are increasing tuples."""

    def __init__(self, n: int):
        if n < 0:
            raise CrossedError("standard simplex needs n >= 0")
        self.n = n
        self.name = f"D{n}"
        self.dim_cap = n
        self.solver = "trivial"

    def cells(self, d):
        if d < 0 or d > self.n:
            return ()
        return tuple(itertools.combinations(range(self.n + 1), d + 1))

    def cell_dim(self, c):
        return len(c) - 1

    def raw_face(self, c, i):
        return Simplex(c[:i] + c[i + 1:], len(c) - 2)

    def face_on(self, c, verts):
        return Simplex(tuple(c[v] for v in verts), len(verts) - 1)

    def top_dim(self):
        return self.n

    def top(self) -> Simplex:
        return Simplex(tuple(range(self.n + 1)), self.n)

    def from_sequence(self, seq: Sequence[int]) -> Simplex:
        """The simplex with the given (weakly increasing) vertex sequence."""
        base = tuple(sorted(set(seq)))
        pos = {v: k for k, v in enumerate(base)}
        return Simplex.from_surjection(base, len(base) - 1, [pos[v] for v in seq])

    def to_sequence(self, s: Simplex) -> tuple:
        return tuple(s.base[t] for t in s.surjection())


@lru_cache(maxsize=None)
def std_simplex(n: int) -> StdSimplex:
    return StdSimplex(n)


def boundary_subcomplex(n: int) -> FiniteSimplicialSet:
    """The boundary of the standard n-simplex."""
    if n < 1:
        raise CrossedError("boundary needs n >= 1")
    D = std_simplex(n)
    cells = {d: list(D.cells(d)) for d in range(n)}
    faces = {c: [D.raw_face(c, i) for i in range(len(c))] for d in range(1, n) for c in cells[d]}
    return FiniteSimplicialSet(f"dD{n}", cells, faces, solver="free" if n == 2 else "finite")


# -- products -------------------------------------------------------------

class ProductSet(SimplicialSet):
    """Cartesian product of two or more simplicial sets.

    A cell is the tuple of its components, each a ``Simplex`` of the full
    dimension, jointly nondegenerate (no common repeat position).
    Use ``product`` to obtain cached, flattened instances.
    """

    def __init__(self, factors: tuple, dim_cap: int | None = None):
        self.factors = tuple(factors)
        self.name = "x".join(f.name for f in self.factors)
        tops = [f.top_dim() for f in self.factors]
        self._top = None if any(t is None for t in tops) else sum(tops)
        if dim_cap is None:
            if self._top is None:
                caps = [f.dim_cap for f in self.factors]
                dim_cap = min(c for c in caps if c is not None)
            else:
                dim_cap = self._top
        self.dim_cap = dim_cap
        self.solver = "product"
        self._cell_cache = {}

    def top_dim(self):
        return self._top

    def cells(self, d):
        if d < 0:
            return ()
        if self._top is not None and d > self._top:
            return ()
        self.check_dim(d)
        hit = self._cell_cache.get(d)
        if hit is not None:
            return hit
        out = []
        per_factor = []
        for f in self.factors:
            opts = []
            for p in range(d + 1):
                for c in f.cells(p):
                    for rep in itertools.combinations(range(d), d - p):
                        opts.append((c, p, frozenset(rep)))
            per_factor.append(opts)
        for combo in itertools.product(*per_factor):
            common = frozenset.intersection(*(r for _, _, r in combo))
            if common:
                continue
            comps = tuple(Simplex(c, p, tuple(sorted(r, reverse=True))) for c, p, r in combo)
            out.append(comps)
        res = tuple(out)
        self._cell_cache[d] = res
        return res

    def cell_dim(self, c):
        return c[0].dim

    def raw_face(self, c, i):
        comps = [f.face(s, i) for f, s in zip(self.factors, c)]
        return self.normalize(comps)

    def normalize(self, comps: Sequence[Simplex]) -> Simplex:
        """The product simplex with the given components, in normal form."""
        m = comps[0].dim
        common = set(comps[0].degeneracies)
        for s in comps[1:]:
            common &= set(s.degeneracies)
        if not common:
            return Simplex(tuple(comps), m)
        section = tuple(k for k in range(m + 1) if (k - 1) not in common)
        base = tuple(f.apply(s, section) for f, s in zip(self.factors, comps))
        return Simplex(base, m - len(common), tuple(sorted(common, reverse=True)))

    def components(self, s: Simplex) -> tuple:
        """Full-dimensional components of a product simplex."""
        if not s.degeneracies:
            return s.base
        theta = s.surjection()
        return tuple(f.apply(b, theta) for f, b in zip(self.factors, s.base))

    def apply(self, s, phi):
        theta = s.surjection()
        psi = [theta[v] for v in phi]
        comps = [f.apply(b, psi) for f, b in zip(self.factors, s.base)]
        return self.normalize(comps)

    def face_on(self, c, verts):
        return self.normalize([f.apply(b, verts) for f, b in zip(self.factors, c)])


@lru_cache(maxsize=None)
def _product(factors: tuple, dim_cap) -> SimplicialSet:
    return ProductSet(factors, dim_cap)


def product(*factors: SimplicialSet, dim_cap: int | None = None) -> SimplicialSet:
    """Flattened cartesian product; a single factor is returned unchanged."""
    flat = []
    for f in factors:
        if isinstance(f, ProductSet):
            flat.extend(f.factors)
        else:
            flat.append(f)
    if len(flat) == 1:
        return flat[0]
    return _product(tuple(flat), dim_cap)


def simplex_product(K: SimplicialSet, L: SimplicialSet, dim_cap: int | None = None) -> SimplicialSet:
    return product(K, L, dim_cap=dim_cap)


def factors_of(P: SimplicialSet) -> tuple:
    return P.factors if isinstance(P, ProductSet) else (P,)


def components(P: SimplicialSet, s: Simplex) -> tuple:
    if isinstance(P, ProductSet):
        return P.components(s)
    return (s,)


def assemble(P: SimplicialSet, comps: Sequence[Simplex]) -> Simplex:
    """Inverse of ``components``: build a simplex of P from its components."""
    if isinstance(P, ProductSet):
        return P.normalize(comps)
    (s,) = comps
    return s


def restrict(P: SimplicialSet, s: Simplex, lo: int, hi: int) -> Simplex:
    """Project a simplex of P onto the sub-product of factors lo..hi-1."""
    fs = factors_of(P)
    comps = components(P, s)
    return assemble(product(*fs[lo:hi]), comps[lo:hi])


class DisjointUnion(SimplicialSet):
    def __init__(self, parts: Sequence[SimplicialSet]):
        self.parts = tuple(parts)
        self.name = "+".join(p.name for p in self.parts)
        self.solver = "union"
        tops = [p.top_dim() for p in self.parts]
        self._top = None if any(t is None for t in tops) else max(tops)
        self.dim_cap = self._top

    def cells(self, d):
        return tuple((k, c) for k, p in enumerate(self.parts) for c in p.cells(d))

    def cell_dim(self, c):
        return self.parts[c[0]].cell_dim(c[1])

    def raw_face(self, c, i):
        f = self.parts[c[0]].raw_face(c[1], i)
        return Simplex((c[0], f.base), f.base_dim, f.degeneracies)

    def top_dim(self):
        return self._top


def disjoint_union(*parts: SimplicialSet) -> DisjointUnion:
    return DisjointUnion(parts)


# -- maps -------------------------------------------------------------------

class SimplicialMap:
    """A simplicial map given by images of nondegenerate cells.

    ``images`` may be a dict or a function; function images are cached.
    """

    def __init__(self, source: SimplicialSet, target: SimplicialSet, images, name: str = "f"):
        self.source = source
        self.target = target
        self.name = name
        if callable(images):
            self._fn = images
            self._images = {}
        else:
            self._fn = None
            self._images = dict(images)

    def image(self, c: Cell) -> Simplex:
        hit = self._images.get(c)
        if hit is None:
            if self._fn is None:
                raise CrossedError(f"{self.name}: no image for {c!r}")
            hit = self._fn(c)
            self._images[c] = hit
        return hit

    def __call__(self, s: Simplex) -> Simplex:
        img = self.image(s.base)
        if not s.degeneracies:
            return img
        return self.target.apply(img, s.surjection())

    def compose(self, first: "SimplicialMap") -> "SimplicialMap":
        """``self o first``."""
        return SimplicialMap(first.source, self.target,
                             lambda c: self(first(first.source.simplex(c))),
                             name=f"{self.name}.{first.name}")

    def table(self, max_dim: int | None = None) -> dict:
        top = self.source.effective_top(max_dim)
        return {c: self.image(c) for c in self.source.all_cells(top)}

    def check(self, max_dim: int | None = None) -> list:
        bad = []
        top = self.source.effective_top(max_dim)
        for d in range(1, top + 1):
            for c in self.source.cells(d):
                img = self.image(c)
                if img.dim != d:
                    bad.append((c, "dimension"))
                    continue
                for i in range(d + 1):
                    if self(self.source.raw_face(c, i)) != self.target.face(img, i):
                        bad.append((c, i))
        return bad

    def equals(self, other: "SimplicialMap", max_dim: int | None = None) -> bool:
        top = self.source.effective_top(max_dim)
        return all(self.image(c) == other.image(c) for c in self.source.all_cells(top))

    def __repr__(self):
        return f"<SimplicialMap {self.name}: {self.source.name} -> {self.target.name}>"


def identity_map(K: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(K, K, lambda c: K.simplex(c), name="id")


def poset_vertex_sequence(K: SimplicialSet, s: Simplex):
    """Vertex sequence of a simplex of a standard simplex or a product of them."""
    if isinstance(K, StdSimplex):
        return K.to_sequence(s)
    if isinstance(K, ProductSet) and all(isinstance(f, StdSimplex) for f in K.factors):
        seqs = [f.to_sequence(c) for f, c in zip(K.factors, K.components(s))]
        return tuple(zip(*seqs))
    raise CrossedError(f"{K.name} is not a nerve of a product of finite ordinals")


def poset_simplex(K: SimplicialSet, seq):
    """Simplex of a standard simplex (or product of them) with given vertex sequence."""
    if isinstance(K, StdSimplex):
        return K.from_sequence(seq)
    if isinstance(K, ProductSet) and all(isinstance(f, StdSimplex) for f in K.factors):
        comps = [f.from_sequence([v[k] for v in seq]) for k, f in enumerate(K.factors)]
        return K.normalize(comps)
    raise CrossedError(f"{K.name} is not a nerve of a product of finite ordinals")


def monotone_map(source: SimplicialSet, target: SimplicialSet, vertex_fn: Callable, name="f") -> SimplicialMap:
    """Map between nerves of (products of) ordinals induced by a monotone vertex map."""
    def img(c):
        seq = poset_vertex_sequence(source, source.simplex(c))
        return poset_simplex(target, [vertex_fn(v) for v in seq])
    return SimplicialMap(source, target, img, name=name)


def diagonal_map(n: int, r: int) -> SimplicialMap:
    """The r-fold diagonal of the standard n-simplex."""
    D = std_simplex(n)
    if r < 1:
        raise CrossedError("diagonal needs r >= 1")
    if r == 1:
        return identity_map(D)
    P = product(*([D] * r))
    return SimplicialMap(D, P, lambda c: P.normalize([D.simplex(c)] * r), name=f"d{r}")


def product_map(maps: Sequence[SimplicialMap]) -> SimplicialMap:
    """f_0 x ... x f_k between the flattened products."""
    S = product(*[m.source for m in maps])
    T = product(*[m.target for m in maps])

    widths = [len(factors_of(m.source)) for m in maps]

    def img(c):
        comps = components(S, S.simplex(c))
        out, at = [], 0
        for m, w in zip(maps, widths):
            s = assemble(m.source, list(comps[at:at + w]))
            at += w
            out.extend(components(m.target, m(s)))
        return assemble(T, out)
    return SimplicialMap(S, T, img, name="x".join(m.name for m in maps))


def projection(P: SimplicialSet, lo: int, hi: int) -> SimplicialMap:
    T = product(*factors_of(P)[lo:hi])
    return SimplicialMap(P, T, lambda c: restrict(P, P.simplex(c), lo, hi), name=f"pr{lo}:{hi}")


# -- mapping spaces -----------------------------------------------------------

def _simplex_index(L: SimplicialSet, m: int) -> dict:
    idx = {}
    for s in L.simplices(m):
        key = tuple(L.face(s, i) for i in range(m + 1)) if m else ()
        idx.setdefault(key, []).append(s)
    return idx


def enumerate_maps(source: SimplicialSet, target: SimplicialSet, budget: int = 200000,
                   fixed: dict | None = None) -> list:
    """All simplicial maps source -> target (source finite), by face-matching search.

    ``fixed`` pins images of some cells.  Raises BudgetExceeded when the
    number of search nodes passes ``budget``.
    """
    top = source.effective_top()
    order = source.all_cells(top)
    indices = {}
    results = []
    nodes = [0]
    fixed = fixed or {}

    def candidates(c, assign):
        d = source.cell_dim(c)
        if c in fixed:
            return [fixed[c]]
        if d not in indices:
            indices[d] = _simplex_index(target, d)
        if d == 0:
            return indices[0].get((), [])
        key = []
        for i in range(d + 1):
            f = source.raw_face(c, i)
            img = assign[f.base]
            key.append(target.apply(img, f.surjection()) if f.degeneracies else img)
        return indices[d].get(tuple(key), [])

    def rec(k, assign):
        nodes[0] += 1
        if nodes[0] > budget:
            raise BudgetExceeded(f"map enumeration {source.name} -> {target.name} exceeded budget {budget}")
        if k == len(order):
            results.append(dict(assign))
            return
        c = order[k]
        for s in candidates(c, assign):
            assign[c] = s
            rec(k + 1, assign)
            del assign[c]

    rec(0, {})
    return [SimplicialMap(source, target, imgs, name="f") for imgs in results]


def mapping_space_simplices(K: SimplicialSet, L: SimplicialSet, n: int, budget: int = 200000) -> list:
    """All simplicial maps K x D[n] -> L."""
    return enumerate_maps(product(K, std_simplex(n)), L, budget)


def ss_compose(g: SimplicialMap, f: SimplicialMap, n: int) -> SimplicialMap:
    """Enriched composite of f in S(K,L)_n and g in S(L,M)_n: (k,t) -> g(f(k,t), t)."""
    D = std_simplex(n)
    KD = f.source
    L = f.target
    LD = product(L, D)
    if g.source is not LD:
        raise CrossedError("enriched composite: source mismatch")

    def img(c):
        s = KD.simplex(c)
        t = components(KD, s)[-1]
        return g(LD_pair(L, D, f(s), t))
    return SimplicialMap(KD, g.target, img, name=f"{g.name}*{f.name}")


def LD_pair(L: SimplicialSet, D: SimplicialSet, x: Simplex, t: Simplex) -> Simplex:
    """The simplex (x, t) of L x D where L may itself be a product."""
    P = product(L, D)
    return P.normalize(list(components(L, x)) + [t])


def ss_identity(K: SimplicialSet, n: int) -> SimplicialMap:
    """The degenerate identity n-simplex of S(K,K): the projection K x D[n] -> K."""
    KD = product(K, std_simplex(n))
    nK = len(factors_of(K))
    return SimplicialMap(KD, K, lambda c: restrict(KD, KD.simplex(c), 0, nK), name="id")


def ss_operator(f: SimplicialMap, K: SimplicialSet, n: int, phi: Sequence[int]) -> SimplicialMap:
    """Apply the simplicial operator phi: [m] -> [n] to f in S(K,L)_n."""
    m = len(phi) - 1
    D, E = std_simplex(n), std_simplex(m)
    KE = product(K, E)
    nK = len(factors_of(K))

    def img(c):
        s = KE.simplex(c)
        comps = components(KE, s)
        t = E.to_sequence(comps[-1])
        t2 = D.from_sequence([phi[v] for v in t])
        return f(product(K, D).normalize(list(comps[:nK]) + [t2]))
    return SimplicialMap(KE, f.target, img, name=f"{f.name}.op")


def ss_face(f: SimplicialMap, K: SimplicialSet, n: int, i: int) -> SimplicialMap:
    return ss_operator(f, K, n, coface(n, i))


def ss_degeneracy(f: SimplicialMap, K: SimplicialSet, n: int, j: int) -> SimplicialMap:
    return ss_operator(f, K, n, codegeneracy(n, j))


def constant_map(K: SimplicialSet, L: SimplicialSet, vertex) -> SimplicialMap:
    v = Simplex(vertex, 0)
    return SimplicialMap(K, L, lambda c: L.apply(v, (0,) * (K.cell_dim(c) + 1)), name="const")


class Realized(FiniteSimplicialSet):
    """A finite simplicial set built from a simplicial object given by all its simplices.

    ``simplices[d]`` lists objects of dimension d; ``key`` makes them hashable;
    ``face(x, i)``, ``degen(x, j)`` and ``dim(x)`` are the simplicial structure
    on objects.  Degenerate objects are recognised as ``s_j d_j x == x``.
    """

    def __init__(self, name: str, simplices: dict, key: Callable, face: Callable, degen: Callable,
                 dim: Callable, solver: str | None = None, prefix: str = "x"):
        self.name = name
        self._key, self._face_fn, self._degen_fn, self._dim_of = key, face, degen, dim
        self._obj = {}
        self._lookup = {}
        cells, faces = {}, {}
        for d in sorted(simplices):
            ids = []
            for x in simplices[d]:
                k = key(x)
                if k in self._lookup:
                    continue
                if d and any(key(degen(face(x, j), j)) == k for j in range(d)):
                    continue
                cid = f"{prefix}{d}_{len(ids)}"
                ids.append(cid)
                self._obj[cid] = x
                self._lookup[k] = Simplex(cid, d)
            cells[d] = ids
        for d, ids in cells.items():
            for cid in ids:
                if d:
                    faces[cid] = tuple(self.locate(face(self._obj[cid], i)) for i in range(d + 1))
        super().__init__(name, cells, faces, solver=solver)

    def locate(self, x) -> Simplex:
        """Normal form of an object (possibly degenerate) as a simplex of this set."""
        k = self._key(x)
        hit = self._lookup.get(k)
        if hit is not None:
            return hit
        d = self._dim_of(x)
        for j in range(d):
            y = self._face_fn(x, j)
            if self._key(self._degen_fn(y, j)) == k:
                s = self.locate(y)
                theta = s.surjection()
                sig = codegeneracy(d - 1, j)
                res = Simplex.from_surjection(s.base, s.base_dim, [theta[v] for v in sig])
                self._lookup[k] = res
                return res
        raise CrossedError(f"{self.name}: object {k!r} is not in the realized range")

    def obj(self, cid):
        return self._obj[cid]
