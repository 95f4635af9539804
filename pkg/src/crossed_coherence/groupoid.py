"""Free groupoid paths and word-problem backends for quotient groupoids.

A path is a freely reduced word of arrow letters ``(gen, +1 | -1)`` with
explicit endpoints; ``p * q`` means "p then q".  A ``Presentation`` bundles
objects, arrows and relator loops; ``PresentationSolver`` turns any path into
a canonical representative of its class in the quotient groupoid.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .errors import BudgetExceeded, EndpointMismatch, UnsupportedSolver


@dataclass(frozen=True)
class Path:
    src: Hashable
    tgt: Hashable
    letters: tuple = ()

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __repr__(self):
        if not self.letters:
            return f"1[{self.src!r}]"
        return "*".join(f"{g!r}" if e == 1 else f"{g!r}^-1" for g, e in self.letters)


def free_reduce(letters: Sequence) -> tuple:
    out = []
    for g, e in letters:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def identity(x) -> Path:
    return Path(x, x, ())


def arrow(g, src, tgt, sign: int = 1) -> Path:
    if sign == 1:
        return Path(src, tgt, ((g, 1),))
    return Path(tgt, src, ((g, -1),))


def compose(*paths: Path) -> Path:
    """Concatenate paths left to right, reducing freely."""
    p = paths[0]
    letters = list(p.letters)
    tgt = p.tgt
    for q in paths[1:]:
        if q.src != tgt:
            raise EndpointMismatch(f"cannot compose path ending at {tgt!r} with path from {q.src!r}")
        letters.extend(q.letters)
        tgt = q.tgt
    return Path(p.src, tgt, free_reduce(letters))


def inverse(p: Path) -> Path:
    return Path(p.tgt, p.src, tuple((g, -e) for g, e in reversed(p.letters)))


def conjugate(w: Path, u: Path) -> Path:
    """u^-1 w u, moving a loop at u.src to a loop at u.tgt."""
    return compose(inverse(u), w, u)


def power(p: Path, k: int) -> Path:
    if p.src != p.tgt and k not in (0, 1, -1):
        raise EndpointMismatch("powers need a loop")
    if k == 0:
        return identity(p.src)
    q = p if k > 0 else inverse(p)
    return compose(*([q] * abs(k)))


# -- group backends -----------------------------------------------------------
# Words are tuples of (index, sign) over generators 0..n-1.

def _invw(w):
    return tuple((g, -e) for g, e in reversed(w))


class FreeGroup:
    kind = "free"

    def __init__(self, ngens: int):
        self.ngens = ngens

    def normal_form(self, w):
        return free_reduce(w)


class TrivialGroup:
    kind = "trivial"

    def __init__(self, ngens: int):
        self.ngens = ngens

    def normal_form(self, w):
        return ()


class FiniteGroup:
    """Coset enumeration against the trivial subgroup (HLT strategy).

    Normal forms are shortlex-least words, with letter order
    g0 < g0^-1 < g1 < g1^-1 < ...
    """

    kind = "finite"

    def __init__(self, ngens: int, relators: Sequence, budget: int = 20000):
        self.ngens = ngens
        self.relators = [free_reduce(r) for r in relators if free_reduce(r)]
        self.table = self._enumerate(budget)
        self.order = len(self.table)
        self._words = self._shortlex_words()

    def _col(self, g, e):
        return 2 * g + (0 if e == 1 else 1)

    def _enumerate(self, budget):
        ncols = 2 * self.ngens
        idents = []
        nbrs = []

        def new():
            if len(idents) >= budget:
                raise BudgetExceeded(f"coset enumeration exceeded {budget} cosets")
            idents.append(len(idents))
            nbrs.append([None] * ncols)
            return idents[-1]

        def find(c):
            while idents[c] != c:
                idents[c] = idents[idents[c]]
                c = idents[c]
            return c

        def unify(a, b):
            stack = [(a, b)]
            while stack:
                a, b = stack.pop()
                a, b = find(a), find(b)
                if a == b:
                    continue
                a, b = min(a, b), max(a, b)
                idents[b] = a
                for col in range(ncols):
                    na, nb = nbrs[a][col], nbrs[b][col]
                    if na is None:
                        nbrs[a][col] = nb
                    elif nb is not None:
                        stack.append((na, nb))

        def follow(c, col):
            c = find(c)
            if nbrs[c][col] is None:
                nbrs[c][col] = new()
            return find(nbrs[c][col])

        rels = [tuple(self._col(g, e) for g, e in r) for r in self.relators]
        rels += [(2 * g, 2 * g + 1) for g in range(self.ngens)]
        rels += [(2 * g + 1, 2 * g) for g in range(self.ngens)]
        new()
        c = 0
        while c < len(idents):
            if find(c) == c:
                for col in range(ncols):
                    follow(c, col)
                for r in rels:
                    d = c
                    for col in r:
                        d = follow(d, col)
                    unify(d, c)
            c += 1
        live = [k for k in range(len(idents)) if find(k) == k]
        index = {k: n for n, k in enumerate(live)}
        return [[index[find(nbrs[k][col])] for col in range(ncols)] for k in live]

    def _shortlex_words(self):
        words = {0: ()}
        q = deque([0])
        while q:
            c = q.popleft()
            for g in range(self.ngens):
                for e in (1, -1):
                    d = self.table[c][self._col(g, e)]
                    if d not in words:
                        words[d] = words[c] + ((g, e),)
                        q.append(d)
        return words

    def element(self, w) -> int:
        c = 0
        for g, e in w:
            c = self.table[c][self._col(g, e)]
        return c

    def normal_form(self, w):
        return self._words[self.element(w)]


class AbelianGroup:
    """Finitely generated abelian group; normal forms g0^k0 g1^k1 ...

    Relator exponent vectors are put in row echelon form; a vector is reduced
    into the fundamental domain of each pivot.  Only valid when the presented
    group is actually abelian.
    """

    kind = "abelian"

    def __init__(self, ngens: int, relators: Sequence):
        self.ngens = ngens
        rows = [self.exponents(r) for r in relators]
        self.rows = self._echelon([r for r in rows if any(r)])

    def exponents(self, w):
        v = [0] * self.ngens
        for g, e in w:
            v[g] += e
        return v

    def _echelon(self, rows):
        rows = [list(r) for r in rows]
        out = []
        for col in range(self.ngens):
            while True:
                nz = [r for r in rows if r[col] != 0]
                if not nz:
                    break
                piv = min(nz, key=lambda r: abs(r[col]))
                rest = []
                for r in rows:
                    if r is piv:
                        continue
                    if r[col]:
                        q = r[col] // piv[col]
                        r = [a - q * b for a, b in zip(r, piv)]
                    if any(r):
                        rest.append(r)
                if all(r[col] == 0 for r in rest):
                    if piv[col] < 0:
                        piv = [-a for a in piv]
                    out.append(piv)
                    rows = rest
                    break
                rows = rest + [piv]
        # reduce entries above pivots
        for i, r in enumerate(out):
            col = next(c for c in range(self.ngens) if r[c])
            for k in range(i):
                q = out[k][col] // r[col]
                out[k] = [a - q * b for a, b in zip(out[k], r)]
        return out

    def reduce(self, v):
        v = list(v)
        for r in self.rows:
            col = next(c for c in range(self.ngens) if r[c])
            q = v[col] // r[col]
            if q:
                v = [a - q * b for a, b in zip(v, r)]
        return v

    def normal_form(self, w):
        v = self.reduce(self.exponents(w))
        out = []
        for g, k in enumerate(v):
            out.extend([(g, 1 if k > 0 else -1)] * abs(k))
        return tuple(out)


class RewritingGroup:
    """Knuth-Bendix completion for shortlex order on g0 < g0^-1 < g1 < ..."""

    kind = "rewriting"

    def __init__(self, ngens: int, relators: Sequence, budget: int = 400):
        self.ngens = ngens
        rels = [free_reduce(r) for r in relators if free_reduce(r)]
        self.eliminated = {}
        rels = self._tietze(rels)
        self.kept = [g for g in range(ngens) if g not in self.eliminated]
        self._pos = {g: k for k, g in enumerate(self.kept)}
        local = [tuple((self._pos[g], e) for g, e in r) for r in rels]
        self.rules = self._complete(local, budget)

    def _tietze(self, rels):
        """Drop generators occurring exactly once in some relator."""
        while True:
            for r in rels:
                counts = {}
                for g, _ in r:
                    counts[g] = counts.get(g, 0) + 1
                once = [g for g, k in counts.items() if k == 1]
                if once:
                    break
            else:
                return rels
            g = max(once)
            k = next(i for i, (h, _) in enumerate(r) if h == g)
            e = r[k][1]
            # r = u g^e v = 1  =>  g = (v u)^-1 for e = 1, g = v u for e = -1
            vu = r[k + 1:] + r[:k]
            self.eliminated[g] = vu if e == -1 else _invw(vu)
            rels = [free_reduce(self._subst(x, {g: self.eliminated[g]})) for x in rels if x is not r]
            rels = [x for x in rels if x]
            self.eliminated = {h: free_reduce(self._subst(w, {g: self.eliminated[g]}))
                               for h, w in self.eliminated.items()}

    @staticmethod
    def _subst(w, table):
        out = []
        for g, e in w:
            if g in table:
                out.extend(table[g] if e == 1 else _invw(table[g]))
            else:
                out.append((g, e))
        return tuple(out)

    @staticmethod
    def _key(w):
        return (len(w), [2 * g + (0 if e == 1 else 1) for g, e in w])

    def _orient(self, u, v):
        if u == v:
            return None
        return (u, v) if self._key(u) > self._key(v) else (v, u)

    def _rewrite(self, w, rules):
        w = list(w)
        changed = True
        while changed:
            changed = False
            for lhs, rhs in rules:
                n = len(lhs)
                for i in range(len(w) - n + 1):
                    if tuple(w[i:i + n]) == lhs:
                        w[i:i + n] = rhs
                        changed = True
                        break
                if changed:
                    break
        return tuple(w)

    def _complete(self, relators, budget):
        rules = []
        for g in range(len(self.kept)):
            rules.append((((g, 1), (g, -1)), ()))
            rules.append((((g, -1), (g, 1)), ()))
        queue = deque()
        for r in relators:
            k = (len(r) + 1) // 2
            queue.append((r[:k], _invw(r[k:])))
        added = 0
        while queue:
            u, v = queue.popleft()
            rule = self._orient(self._rewrite(u, rules), self._rewrite(v, rules))
            if rule is None:
                continue
            added += 1
            if added > budget:
                raise BudgetExceeded("Knuth-Bendix completion exceeded budget")
            kept = []
            for lhs, rhs in rules:
                if self._contains(lhs, rule[0]):
                    queue.append((lhs, rhs))
                else:
                    kept.append((lhs, rhs))
            rules = kept + [rule]
            rules = [(l, self._rewrite(r, rules)) for l, r in rules]
            for other in rules:
                queue.extend(self._critical(rule, other))
                queue.extend(self._critical(other, rule))
        return sorted(rules, key=lambda r: self._key(r[0]))

    @staticmethod
    def _contains(w, sub):
        n = len(sub)
        return any(w[i:i + n] == sub for i in range(len(w) - n + 1))

    @staticmethod
    def _critical(a, b):
        (l1, r1), (l2, r2) = a, b
        out = []
        for k in range(1, min(len(l1), len(l2))):
            if l1[-k:] == l2[:k]:
                out.append((r1 + l2[k:], l1[:-k] + r2))
        if len(l2) < len(l1):
            for i in range(len(l1) - len(l2) + 1):
                if l1[i:i + len(l2)] == l2:
                    out.append((r1, l1[:i] + r2 + l1[i + len(l2):]))
        return out

    def normal_form(self, w):
        w = free_reduce(self._subst(w, self.eliminated))
        nf = self._rewrite(tuple((self._pos[g], e) for g, e in w), self.rules)
        return tuple((self.kept[g], e) for g, e in nf)


def make_group(kind: str, ngens: int, relators: Sequence, budget: int = 20000):
    rels = [free_reduce(r) for r in relators]
    rels = [r for r in rels if r]
    if kind == "trivial":
        return TrivialGroup(ngens)
    if not rels or kind == "free":
        if rels and kind == "free":
            raise UnsupportedSolver("free backend requested for a presentation with relators")
        return FreeGroup(ngens)
    if kind == "abelian":
        return AbelianGroup(ngens, rels)
    if kind == "rewriting":
        return RewritingGroup(ngens, rels, budget=min(budget, 2000))
    if kind in ("finite", "auto", None):
        try:
            return FiniteGroup(ngens, rels, budget)
        except BudgetExceeded:
            if kind == "finite":
                raise
            raise UnsupportedSolver("no backend decides this presentation; name one explicitly") from None
    raise UnsupportedSolver(f"unknown solver kind {kind!r}")


# -- groupoids ----------------------------------------------------------------

@dataclass
class Presentation:
    objects: tuple
    arrows: dict            # gen -> (src, tgt)
    relators: list = field(default_factory=list)   # loops (Path)


class PresentationSolver:
    """Canonical representatives in the quotient groupoid of a presentation.

    Each connected component gets a breadth-first spanning tree rooted at its
    least object; the vertex group at the root is presented on the non-tree
    arrows and handed to a group backend.
    """

    def __init__(self, pres: Presentation, kind: str | None = "auto", budget: int = 20000):
        self.pres = pres
        self.kind = kind
        adj = {x: [] for x in pres.objects}
        for g in sorted(pres.arrows, key=repr):
            s, t = pres.arrows[g]
            adj[s].append((g, 1, t))
            adj[t].append((g, -1, s))
        self.root = {}
        self.to_root = {}          # x -> Path x -> root
        tree = set()
        for r in pres.objects:
            if r in self.root:
                continue
            self.root[r] = r
            self.to_root[r] = identity(r)
            q = deque([r])
            while q:
                x = q.popleft()
                for g, e, y in adj[x]:
                    if y in self.root:
                        continue
                    self.root[y] = r
                    step = arrow(g, *pres.arrows[g], sign=-e)   # y -> x
                    self.to_root[y] = compose(step, self.to_root[x])
                    tree.add(g)
                    q.append(y)
        self.tree = tree
        comps = {}
        for g in sorted(pres.arrows, key=repr):
            if g in tree:
                continue
            comps.setdefault(self.root[pres.arrows[g][0]], []).append(g)
        self.index = {}
        self.gens = {}
        for r, gs in comps.items():
            self.gens[r] = gs
            for k, g in enumerate(gs):
                self.index[g] = k
        rels = {}
        for w in pres.relators:
            r = self.root[w.src]
            rels.setdefault(r, []).append(self._group_word(w))
        self.groups = {}
        roots = sorted(set(self.root.values()), key=repr)
        for r in roots:
            self.groups[r] = make_group(kind, len(self.gens.get(r, [])), rels.get(r, []), budget)
        self._memo = {}

    def _group_word(self, p: Path):
        return free_reduce([(self.index[g], e) for g, e in p.letters if g not in self.tree])

    def canon(self, p: Path) -> Path:
        hit = self._memo.get(p)
        if hit is not None:
            return hit
        if p.src not in self.root or self.root[p.src] != self.root.get(p.tgt):
            raise EndpointMismatch(f"path {p!r} leaves its component")
        r = self.root[p.src]
        nf = self.groups[r].normal_form(self._group_word(p))
        pieces = [self.to_root[p.src]]
        for i, e in nf:
            g = self.gens[r][i]
            step = arrow(g, *self.pres.arrows[g], sign=e)
            pieces += [inverse(self.to_root[step.src]), step, self.to_root[step.tgt]]
        pieces.append(inverse(self.to_root[p.tgt]))
        out = compose(*pieces)
        self._memo[p] = out
        return out

    def equal(self, p: Path, q: Path) -> bool:
        return p.src == q.src and p.tgt == q.tgt and self.canon(p) == self.canon(q)

    def is_trivial(self, p: Path) -> bool:
        return p.src == p.tgt and self.canon(p).is_identity


class ProductSolver:
    """Quotient groupoid of a product: canonicalize each factor, then lift.

    ``project(p)`` returns one factor path per factor; ``lift(i, q, objs)``
    embeds a factor-i path into the product with the other coordinates
    fixed at ``objs``.  Lifts are applied factor 1 first.
    """

    def __init__(self, solvers: Sequence, project, lift):
        self.solvers = list(solvers)
        self.project = project
        self.lift = lift
        self._memo = {}

    def canon(self, p: Path) -> Path:
        hit = self._memo.get(p)
        if hit is not None:
            return hit
        parts = self.project(p)
        objs = [q.src for q in parts]
        pieces = []
        for i, q in enumerate(parts):
            c = self.solvers[i].canon(q)
            if c.letters:
                pieces.append(self.lift(i, c, tuple(objs)))
            objs[i] = q.tgt
        out = compose(*pieces) if pieces else identity(p.src)
        self._memo[p] = out
        return out

    def equal(self, p: Path, q: Path) -> bool:
        return p.src == q.src and p.tgt == q.tgt and self.canon(p) == self.canon(q)

    def is_trivial(self, p: Path) -> bool:
        return p.src == p.tgt and self.canon(p).is_identity
