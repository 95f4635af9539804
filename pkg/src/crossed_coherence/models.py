"""Normalized chains on products of standard simplices.

A model cell is a tuple of weakly increasing vertex sequences, one per
factor, all of the same length.  Chains are dicts cell -> integer.  These
give the Alexander-Whitney, shuffle and homotopy formulas that the crossed
maps push forward along characteristic maps.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def dim(c) -> int:
    return len(c[0]) - 1


def face(c, i):
    return tuple(s[:i] + s[i + 1:] for s in c)


def degen(c, i):
    return tuple(s[:i + 1] + s[i:] for s in c)


def is_degenerate(c) -> bool:
    return any(all(s[k] == s[k + 1] for s in c) for k in range(dim(c)))


def _add(v: dict, k, coef: int):
    n = v.get(k, 0) + coef
    if n:
        v[k] = n
    else:
        v.pop(k, None)


def boundary(c) -> dict:
    out = {}
    if dim(c) == 0:
        return out
    for i in range(dim(c) + 1):
        f = face(c, i)
        if not is_degenerate(f):
            _add(out, f, (-1) ** i)
    return out


def alexander_whitney(c, split: int) -> dict:
    """Sum over i of front_i(left factors) (x) back_i(right factors)."""
    out = {}
    m = dim(c)
    left, right = c[:split], c[split:]
    for i in range(m + 1):
        f = tuple(s[:i + 1] for s in left)
        b = tuple(s[i:] for s in right)
        if not is_degenerate(f) and not is_degenerate(b):
            _add(out, (f, b), 1)
    return out


def shuffles(p: int, q: int):
    """(mu, nu, sign) for the (p, q)-shuffles."""
    for mu in itertools.combinations(range(p + q), p):
        nu = tuple(i for i in range(p + q) if i not in mu)
        perm = list(mu) + list(nu)
        inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
        yield mu, nu, (-1) ** inv


def apply_degs(c, idxs):
    for i in idxs:
        c = degen(c, i)
    return c


def shuffle_product(x, y) -> dict:
    out = {}
    for mu, nu, sg in shuffles(dim(x), dim(y)):
        c = apply_degs(x, nu) + apply_degs(y, mu)
        if not is_degenerate(c):
            _add(out, c, sg)
    return out


def back_and_forth(c, split: int) -> dict:
    """Shuffle product after Alexander-Whitney: the chain-level b.a."""
    out = {}
    for (x, y), k in alexander_whitney(c, split).items():
        for z, s in shuffle_product(x, y).items():
            _add(out, z, k * s)
    return out


def model_of(c):
    """Split a cell into the vertex sets it uses and a cell on those sets."""
    bases = tuple(tuple(sorted(set(s))) for s in c)
    model = tuple(tuple(b.index(v) for v in s) for s, b in zip(c, bases))
    return bases, model


def relabel(cell, bases):
    return tuple(tuple(b[v] for v in s) for s, b in zip(cell, bases))


def push(vec: dict, bases) -> dict:
    out = {}
    for c, k in vec.items():
        r = relabel(c, bases)
        if not is_degenerate(r):
            _add(out, r, k)
    return out


@lru_cache(maxsize=None)
def homotopy_model(model, split: int) -> tuple:
    """Chain homotopy on a model cell, built by coning off acyclic models.

    Satisfies  d H(c) = H(d c) + (-1)^m (b a(c) - c)  for m = dim c, together
    with H = 0 on vertices, a H = 0, H b = 0 and H H = 0.
    """
    m = dim(model)
    tops = tuple(max(s) for s in model)
    rest = {}
    for f, s in boundary(model).items():
        for g, t in homotopy(f, split).items():
            _add(rest, g, s * t)
    for g, t in back_and_forth(model, split).items():
        _add(rest, g, t * (-1) ** m)
    _add(rest, model, -(-1) ** m)
    out = {}
    for c, k in rest.items():
        cc = tuple(seq + (tp,) for seq, tp in zip(c, tops))
        if not is_degenerate(cc):
            _add(out, cc, k * (-1) ** (m + 1))
    return tuple(sorted(out.items()))


def homotopy(c, split: int) -> dict:
    if dim(c) == 0 or is_degenerate(c):
        return {}
    bases, model = model_of(c)
    return push(dict(homotopy_model(model, split)), bases)


def apply_linear(fn, vec: dict) -> dict:
    out = {}
    for c, k in vec.items():
        for g, t in fn(c).items():
            _add(out, g, k * t)
    return out
