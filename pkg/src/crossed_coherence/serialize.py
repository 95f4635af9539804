"""Canonical text format for simplicial sets, free crossed complexes and S-categories.

Every document starts with a versioned header and a kind line, then
dimension-ordered sections of one record per line.  Records are Python
literals (read back with ``ast.literal_eval``), so cell names may be strings,
integers or nested tuples.

    # crossed-coherence text v1
    kind simplicial-set
    name D1
    solver trivial
    dim 0
      (0,)
      (1,)
    dim 1
      ((0, 1), ({'simplex': ((1,), 0, ())}, {'simplex': ((0,), 0, ())}))

Simplicial set records are ``(cell, faces)``.  A simplex (a face, or a
component of a product cell) is written ``{'simplex': (base, base_dim,
degeneracies)}``.  Crossed complex records are ``(gen, src, tgt)`` in
dimension 1, ``(gen, base, letters)`` in dimension 2 and ``(gen, base,
terms)`` above, a term being ``(gen, (src, tgt, letters), coefficient)``.
"""

from __future__ import annotations

import ast

from .crossed import ExplicitComplex, FreeCrossedComplex
from .errors import CrossedError, ParseError
from .groupoid import Path
from .simplicial import FiniteSimplicialSet, Simplex, SimplicialSet

HEADER = "# crossed-coherence text v1"


def _enc(x):
    if isinstance(x, Simplex):
        return {"simplex": (_enc(x.base), x.base_dim, tuple(x.degeneracies))}
    if isinstance(x, tuple):
        return tuple(_enc(y) for y in x)
    return x


def _dec(x):
    if isinstance(x, dict):
        base, bd, degs = x["simplex"]
        return Simplex(_dec(base), bd, tuple(degs))
    if isinstance(x, tuple):
        return tuple(_dec(y) for y in x)
    return x


def _lit(x) -> str:
    return repr(_enc(x))


def simplicial_set_lines(K: SimplicialSet, cap: int | None = None) -> list:
    top = K.effective_top(cap)
    out = [f"name {K.name}", f"solver {getattr(K, 'solver', None)}"]
    for d in range(top + 1):
        out.append(f"dim {d}")
        for c in K.cells(d):
            if d == 0:
                out.append(f"  {_lit(c)}")
            else:
                faces = tuple(K.raw_face(c, i) for i in range(d + 1))
                out.append(f"  {_lit((c, faces))}")
    return out


def dump_simplicial_set(K: SimplicialSet, cap: int | None = None) -> str:
    return "\n".join([HEADER, "kind simplicial-set"] + simplicial_set_lines(K, cap)) + "\n"


def _terms(e) -> tuple:
    return tuple(sorted(((g, (t.src, t.tgt, t.letters), c) for (g, t), c in e.terms), key=repr))


def dump_complex(C: FreeCrossedComplex, cap: int | None = None) -> str:
    top = C.effective_top(cap)
    # a tensor's product solver cannot be rebuilt from the tables; "auto" can
    solver = "auto" if C.solver_kind == "product" else C.solver_kind
    out = [HEADER, "kind crossed-complex", f"name {C.name}", f"solver {solver}"]
    for d in range(top + 1):
        out.append(f"dim {d}")
        for g in C.gens(d):
            if d == 0:
                rec = g
            elif d == 1:
                rec = (g,) + tuple(C.endpoints(g))
            elif d == 2:
                rec = (g, C.gen_base(g), C.boundary(g).word)
            else:
                rec = (g, C.gen_base(g), _terms(C.boundary(g)))
            out.append(f"  {_lit(rec)}")
    return "\n".join(out) + "\n"


def dump_scategory(S, cap: int = 2) -> str:
    out = [HEADER, "kind s-category", f"name {S.name}", f"objects {_lit(tuple(S.objects))}"]
    for (x, y) in sorted(S.homs, key=repr):
        out.append(f"hom {_lit((x, y))}")
        out += ["  " + line for line in simplicial_set_lines(S.hom(x, y), cap)]
    return "\n".join(out) + "\n"


# -- parsing ----------------------------------------------------------------------------

class _Reader:
    def __init__(self, text: str):
        self.lines = [(i + 1, line.rstrip()) for i, line in enumerate(text.splitlines()) if line.strip()]
        self.pos = 0

    def peek(self):
        return self.lines[self.pos] if self.pos < len(self.lines) else (None, None)

    def take(self, prefix: str | None = None):
        no, line = self.peek()
        if line is None:
            raise ParseError(f"unexpected end of input, wanted {prefix!r}")
        if prefix is not None and not line.strip().startswith(prefix):
            raise ParseError(f"expected {prefix!r}, got {line.strip()!r}", no)
        self.pos += 1
        return no, line.strip()

    def field(self, key: str) -> str:
        no, line = self.take(key)
        return line[len(key):].strip()


def _literal(text: str, no: int):
    try:
        return _dec(ast.literal_eval(text))
    except (ValueError, SyntaxError, KeyError, TypeError) as e:
        raise ParseError(f"bad record {text!r}: {e}", no) from None


def _header(r: _Reader, kind: str):
    no, line = r.take()
    if line != HEADER:
        raise ParseError(f"missing or unsupported header {line!r}", no)
    got = r.field("kind")
    if got != kind:
        raise ParseError(f"expected kind {kind}, got {got}", r.lines[r.pos - 1][0])


def _solver(s: str):
    return None if s == "None" else s


def _read_simplicial_body(r: _Reader) -> FiniteSimplicialSet:
    name = r.field("name")
    solver = _solver(r.field("solver"))
    cells, faces = {}, {}
    while True:
        no, line = r.peek()
        if line is None or not line.strip().startswith("dim "):
            break
        r.take()
        try:
            d = int(line.strip()[4:])
        except ValueError:
            raise ParseError(f"bad dimension line {line.strip()!r}", no) from None
        cells[d] = []
        while True:
            no, line = r.peek()
            if line is None or not line.startswith("  ") or line.strip().startswith(("dim ", "hom ")):
                break
            if line.startswith("  ") and line.strip().startswith(("name ", "solver ")):
                break
            r.take()
            rec = _literal(line.strip(), no)
            if d == 0:
                cells[d].append(rec)
                continue
            try:
                c, fs = rec
                faces[c] = tuple(fs)
                if not all(isinstance(f, Simplex) for f in fs):
                    raise TypeError
            except (TypeError, ValueError):
                raise ParseError(f"bad cell record {line.strip()!r}", no) from None
            if len(faces[c]) != d + 1:
                raise ParseError(f"cell {c!r} needs {d + 1} faces", no)
            cells[d].append(c)
    try:
        K = FiniteSimplicialSet(name, cells, faces, solver=solver)
        K.validate()
    except CrossedError as e:
        raise ParseError(str(e)) from None
    bad = K.check_identities()
    if bad:
        raise ParseError(f"{name}: simplicial identities fail at {bad[:3]}")
    return K


def load_simplicial_set(text: str) -> FiniteSimplicialSet:
    r = _Reader(text)
    _header(r, "simplicial-set")
    K = _read_simplicial_body(r)
    no, line = r.peek()
    if line is not None:
        raise ParseError(f"trailing input {line.strip()!r}", no)
    return K


def load_complex(text: str) -> ExplicitComplex:
    r = _Reader(text)
    _header(r, "crossed-complex")
    name = r.field("name")
    solver = _solver(r.field("solver"))
    objects, arrows, higher = [], {}, {}
    while r.peek()[1] is not None:
        no, line = r.take("dim ")
        d = int(line[4:])
        while r.peek()[1] is not None and not r.peek()[1].strip().startswith("dim "):
            no, line = r.take()
            rec = _literal(line, no)
            if d == 0:
                objects.append(rec)
            elif d == 1:
                g, s, t = rec
                arrows[g] = (s, t)
            elif d == 2:
                g, x, word = rec
                higher[g] = (2, x, tuple(word))
            else:
                g, x, terms = rec
                higher[g] = (d, x, [(h, Path(ps, pt, tuple(tuple(l) for l in pl)), k)
                                    for h, (ps, pt, pl), k in terms])
    return ExplicitComplex(name, objects, arrows, higher, solver=solver)


def load_scategory(text: str) -> tuple:
    """(name, objects, {(x, y): hom simplicial set}); composition is not stored."""
    r = _Reader(text)
    _header(r, "s-category")
    name = r.field("name")
    no, line = r.take("objects")
    objects = _literal(line[len("objects"):].strip(), no)
    homs = {}
    while r.peek()[1] is not None:
        no, line = r.take("hom ")
        key = _literal(line[4:].strip(), no)
        homs[key] = _read_simplicial_body(r)
    return name, objects, homs


def dump(obj, cap: int | None = None) -> str:
    if isinstance(obj, FreeCrossedComplex):
        return dump_complex(obj, cap)
    if isinstance(obj, SimplicialSet):
        return dump_simplicial_set(obj, cap)
    if hasattr(obj, "homs"):
        return dump_scategory(obj, 2 if cap is None else cap)
    raise TypeError(f"cannot serialize {type(obj).__name__}")
