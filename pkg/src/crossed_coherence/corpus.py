"""Curated corpus of small simplicial sets, keyed by short identifiers."""

from __future__ import annotations

from .errors import CrossedError
from .simplicial import FiniteSimplicialSet, Simplex, boundary_subcomplex, product, std_simplex


def _v(x):
    return Simplex(x, 0)


def _e(x):
    return Simplex(x, 1)


def one_vertex_surface(name: str, upper: tuple, lower: tuple, solver: str) -> FiniteSimplicialSet:
    """Two triangles on one vertex and three loops; faces given as (d0, d1, d2)."""
    loops = {g: (_v("v"), _v("v")) for g in "abc"}
    faces = dict(loops)
    faces["U"] = tuple(_e(g) for g in upper)
    faces["L"] = tuple(_e(g) for g in lower)
    return FiniteSimplicialSet(name, {0: ["v"], 1: ["a", "b", "c"], 2: ["U", "L"]}, faces, solver=solver)


def torus() -> FiniteSimplicialSet:
    # boundaries a.b.c^-1 and b.a.c^-1: fundamental group Z^2
    return one_vertex_surface("torus", ("b", "c", "a"), ("a", "c", "b"), "abelian")


def klein_bottle() -> FiniteSimplicialSet:
    # boundaries a.b.c^-1 and c.a.b^-1: fundamental group <a, b | a b a b^-1>
    return one_vertex_surface("klein", ("b", "c", "a"), ("a", "b", "c"), "rewriting")


def projective_plane() -> FiniteSimplicialSet:
    # one triangle with faces (a, s0 v, a): boundary a.a, fundamental group Z/2
    faces = {"a": (_v("v"), _v("v")), "t": (_e("a"), Simplex("v", 0, (0,)), _e("a"))}
    return FiniteSimplicialSet("rp2", {0: ["v"], 1: ["a"], 2: ["t"]}, faces, solver="finite")


_BUILDERS = {
    "D0": lambda: std_simplex(0),
    "D1": lambda: std_simplex(1),
    "D2": lambda: std_simplex(2),
    "D3": lambda: std_simplex(3),
    "dD2": lambda: boundary_subcomplex(2),
    "dD3": lambda: boundary_subcomplex(3),
    "D1xD1": lambda: product(std_simplex(1), std_simplex(1)),
    "torus": torus,
    "klein": klein_bottle,
    "rp2": projective_plane,
}

_CACHE = {}


def corpus_ids() -> list:
    return list(_BUILDERS)


def get(name: str):
    if name not in _BUILDERS:
        raise CrossedError(f"unknown corpus item {name!r}; known: {', '.join(_BUILDERS)}")
    if name not in _CACHE:
        _CACHE[name] = _BUILDERS[name]()
    return _CACHE[name]


def register(name: str, K) -> None:
    """Add a simplicial set (for instance a parsed file) to the registry."""
    _BUILDERS[name] = lambda: K
    _CACHE.pop(name, None)


def unregister(name: str) -> None:
    _BUILDERS.pop(name, None)
    _CACHE.pop(name, None)
