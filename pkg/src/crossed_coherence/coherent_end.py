"""Truncated coherent ends: homotopy coherent transformations between diagrams.

For functors F, G: A -> simplicial sets, level p of the cosimplicial object
Y(F, G) is the product over strings a_1, ..., a_p (A_0 -> ... -> A_p, identities
allowed) of maps

    D[p] x F(A_0) x D[n] -> G(A_p).

Cofaces: d^0 precomposes with F(a_1), d^j (0 < j < p) composes a_j and
a_(j+1), d^p postcomposes with G(a_p); codegeneracy s^j inserts an identity.
A P-truncated coherent transformation of dimension n is a family phi^0..phi^P
with phi^p . (coface^j x Id) = d^j phi^(p-1) and
phi^p at (.., id at j+1, ..) = phi^(p-1) . (codegeneracy^j x Id).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExceeded, CrossedError
from .scategory import FiniteCategory, SFunctor
from .simplicial import (SimplicialMap, SimplicialSet, assemble, coface, codegeneracy, components,
                         enumerate_maps, factors_of, product, std_simplex)


def composable_strings(A: FiniteCategory, p: int) -> list:
    """All strings (a_1, ..., a_p) of arrows, identities included; p = 0 gives objects."""
    if p == 0:
        return [(x,) for x in A.objects]
    arrows = [A.identity(x) for x in A.objects] + list(A.arrows)
    out = []
    for s in itertools.product(arrows, repeat=p):
        if all(A.ends(s[i])[1] == A.ends(s[i + 1])[0] for i in range(p - 1)):
            out.append(s)
    return out


def string_ends(A: FiniteCategory, s: tuple, p: int) -> tuple:
    if p == 0:
        return s[0], s[0]
    return A.ends(s[0])[0], A.ends(s[-1])[1]


def level_source(F: SFunctor, x, p: int, n: int) -> SimplicialSet:
    return product(std_simplex(p), F.space(x), std_simplex(n))


@dataclass
class CoherentTransformation:
    """A P-truncated family of components indexed by (p, string)."""
    F: SFunctor
    G: SFunctor
    P: int
    n: int
    components: dict               # (p, string) -> SimplicialMap

    def component(self, p: int, s: tuple) -> SimplicialMap:
        return self.components[(p, s)]

    def key(self) -> tuple:
        return tuple(sorted((k, tuple(sorted(m.table().items(), key=repr)))
                            for k, m in self.components.items()), key=repr)


class _Ops:
    """Cell-level evaluation of the cosimplicial structure."""

    def __init__(self, A: FiniteCategory, F: SFunctor, G: SFunctor, n: int):
        self.A, self.F, self.G, self.n = A, F, G, n

    def split(self, x, p, src: SimplicialSet, s):
        comps = components(src, s)
        w = len(factors_of(self.F.space(x)))
        return comps[0], assemble(self.F.space(x), list(comps[1:1 + w])), comps[-1]

    def join(self, x, p, t, y, u):
        src = level_source(self.F, x, p, self.n)
        return src.normalize([t] + list(components(self.F.space(x), y)) + [u])

    def coface_value(self, lower: dict, s: tuple, p: int, j: int, cell_simplex):
        """(d^j phi^(p-1))_s evaluated on a simplex of D[p-1] x F(A_0) x D[n]."""
        A = self.A
        x0, _ = string_ends(A, s, p)
        src = level_source(self.F, x0, p - 1, self.n)
        t, y, u = self.split(x0, p - 1, src, cell_simplex)
        if j == 0:
            a1 = s[0]
            x1 = A.ends(a1)[1]
            rest = s[1:] if p > 1 else (x1,)
            y1 = self.F.arrow(a1)(y)
            return lower[rest](self.join(x1, p - 1, t, y1, u))
        if j == p:
            rest = s[:-1] if p > 1 else (x0,)
            return self.G.arrow(s[-1])(lower[rest](cell_simplex))
        merged = s[:j - 1] + (A.compose(s[j], s[j - 1]),) + s[j + 1:]
        return lower[merged](cell_simplex)

    def face_cell(self, x0, p: int, j: int, cell_simplex):
        """Image of a simplex under coface^j x Id x Id."""
        src = level_source(self.F, x0, p - 1, self.n)
        t, y, u = self.split(x0, p - 1, src, cell_simplex)
        Dp = std_simplex(p)
        t2 = Dp.from_sequence([coface(p, j)[v] for v in std_simplex(p - 1).to_sequence(t)])
        return self.join(x0, p, t2, y, u)

    def degenerate_value(self, lower: dict, s: tuple, p: int, cell_simplex):
        """For a string with an identity at position j+1: phi^(p-1) . (codegeneracy^j x Id)."""
        A = self.A
        j = next(i for i, a in enumerate(s) if A.is_identity(a))
        x0, _ = string_ends(A, s, p)
        rest = s[:j] + s[j + 1:]
        if not rest:
            rest = (x0,)
        src = level_source(self.F, x0, p, self.n)
        t, y, u = self.split(x0, p, src, cell_simplex)
        Dl = std_simplex(p - 1)
        t2 = Dl.from_sequence([codegeneracy(p - 1, j)[v] for v in std_simplex(p).to_sequence(t)])
        return lower[rest](self.join(x0, p - 1, t2, y, u))


def coherent_end_level(A: FiniteCategory, F: SFunctor, G: SFunctor, p: int, n: int,
                       budget: int = 200000) -> dict:
    """Y(F, G)^p in dimension n: for each string, all maps D[p] x F(A_0) x D[n] -> G(A_p)."""
    out = {}
    for s in composable_strings(A, p):
        x0, xp = string_ends(A, s, p)
        out[s] = enumerate_maps(level_source(F, x0, p, n), G.space(xp), budget)
    return out


def coh_space(A: FiniteCategory, F: SFunctor, G: SFunctor, P: int = 2, n: int = 0,
              budget: int = 200000) -> list:
    """All P-truncated coherent transformations F -> G of dimension n."""
    if F.category is not A or G.category is not A:
        raise CrossedError("functors must live on the given category")
    ops = _Ops(A, F, G, n)
    levels = [composable_strings(A, p) for p in range(P + 1)]
    spent = [0]
    results = []

    def fill_level(p, lower, acc):
        if p > P:
            results.append(dict(acc))
            return
        strings = levels[p]
        fill_string(p, strings, 0, lower, {}, acc)

    def fill_string(p, strings, k, lower, current, acc):
        if k == len(strings):
            for s, m in current.items():
                acc[(p, s)] = m
            fill_level(p + 1, dict(current), acc)
            for s in current:
                acc.pop((p, s), None)
            return
        s = strings[k]
        x0, xp = string_ends(A, s, p)
        src = level_source(F, x0, p, n)
        tgt = G.space(xp)
        if p and any(A.is_identity(a) for a in s):
            m = SimplicialMap(src, tgt, lambda c, s=s, src=src: ops.degenerate_value(lower, s, p, src.simplex(c)))
            cands = [m]
        else:
            fixed = {}
            ok = True
            if p:
                low = level_source(F, x0, p - 1, n)
                for j in range(p + 1):
                    for c in low.all_cells(low.effective_top()):
                        cs = low.simplex(c)
                        cell = ops.face_cell(x0, p, j, cs)
                        val = ops.coface_value(lower, s, p, j, cs)
                        if cell.degeneracies:
                            raise CrossedError("coface image is degenerate")
                        if fixed.get(cell.base, val) != val:
                            ok = False
                        fixed[cell.base] = val
            cands = enumerate_maps(src, tgt, budget, fixed=fixed) if ok else []
        for m in cands:
            spent[0] += 1
            if spent[0] > budget:
                raise BudgetExceeded("coherent end enumeration exceeded budget")
            current[s] = m
            fill_string(p, strings, k + 1, lower, current, acc)
            del current[s]

    fill_level(0, {}, {})
    return [CoherentTransformation(F, G, P, n, comps) for comps in results]


def _coface_failures(ops: _Ops, lower: dict, s: tuple, p: int, j: int, m: SimplicialMap) -> list:
    A = ops.A
    x0, _ = string_ends(A, s, p)
    low = level_source(ops.F, x0, p - 1, ops.n)
    bad = []
    for c in low.all_cells(low.effective_top()):
        cs = low.simplex(c)
        if m(ops.face_cell(x0, p, j, cs)) != ops.coface_value(lower, s, p, j, cs):
            bad.append(c)
    return bad


def compatibility_checks(T: CoherentTransformation) -> list:
    """Every coface and codegeneracy condition on every stored level."""
    A = T.F.category
    ops = _Ops(A, T.F, T.G, T.n)
    out = []
    for p in range(1, T.P + 1):
        lower = {s: m for (q, s), m in T.components.items() if q == p - 1}
        for s in composable_strings(A, p):
            m = T.component(p, s)
            for j in range(p + 1):
                bad = _coface_failures(ops, lower, s, p, j, m)
                out.append((f"level {p} {'.'.join(map(str, s))} coface {j}", not bad, bad[:3]))
            if any(A.is_identity(a) for a in s):
                src = m.source
                bad = [c for c in src.all_cells(src.effective_top())
                       if m(src.simplex(c)) != ops.degenerate_value(lower, s, p, src.simplex(c))]
                out.append((f"level {p} {'.'.join(map(str, s))} codegeneracy", not bad, bad[:3]))
    return out


def brute_force_count(A: FiniteCategory, F: SFunctor, G: SFunctor, n: int, budget: int = 200000) -> int:
    """Count 1-truncated transformations by filtering unconstrained components.

    Level-1 components on identity strings are forced; every other string is
    filtered independently against its coface conditions.
    """
    ops = _Ops(A, F, G, n)
    y0 = coherent_end_level(A, F, G, 0, n, budget)
    y1 = coherent_end_level(A, F, G, 1, n, budget)
    s0 = list(y0)
    free = [s for s in y1 if not A.is_identity(s[0])]
    count = 0
    for pick0 in itertools.product(*(y0[s] for s in s0)):
        lower = dict(zip(s0, pick0))
        total = 1
        for s in free:
            total *= sum(1 for m in y1[s]
                         if not any(_coface_failures(ops, lower, s, 1, j, m) for j in (0, 1)))
        count += total
    return count
