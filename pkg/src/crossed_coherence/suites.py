"""Verification suites: plan seeded check items, run them (optionally in parallel), report.

A suite is a list of picklable ``Task`` records.  Each task is rebuilt from
corpus names inside the worker, runs a handful of identity checks and returns
``Record`` rows.  Reports are sorted by (suite, item, instance, identity), never by
completion order, and carry no timings, so equal flags and seed give equal
bytes.
"""

from __future__ import annotations

import itertools
import json
import random
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import corpus
from .errors import BudgetExceeded, CapOverflow, CrossedError, InfiniteHom

SUITES = ("ez", "adjunction", "coherence")
STATUS_ORDER = {"fail": 0, "skip": 1, "pass": 2}


@dataclass
class SuiteConfig:
    suite: str = "all"
    corpus: str | None = None      # comma separated ids; None means everything
    dim_cap: int = 3
    level_cap: int = 2
    budget: int = 200000
    seed: int = 0
    jobs: int = 1
    samples: int = 300             # pair samples for the enriched composition check


@dataclass(frozen=True)
class Task:
    suite: str
    kind: str
    label: str
    parts: tuple = ()              # corpus ids this item is built from
    args: tuple = ()


@dataclass
class Record:
    suite: str
    item: str                      # kind of check, e.g. sdr or witness
    instance: str
    identity: str
    status: str                    # pass | fail | skip
    detail: str = ""


@dataclass
class Report:
    records: list = field(default_factory=list)

    @property
    def failures(self) -> list:
        return [r for r in self.records if r.status == "fail"]

    @property
    def skips(self) -> list:
        return [r for r in self.records if r.status == "skip"]

    def exit_code(self) -> int:
        if self.failures:
            return 1
        if self.skips:
            return 3
        return 0

    def summary(self) -> dict:
        out = {"pass": 0, "fail": 0, "skip": 0}
        for r in self.records:
            out[r.status] += 1
        return out

    def render(self, fmt: str = "text") -> str:
        if fmt == "machine":
            lines = [json.dumps(asdict(r), sort_keys=True, ensure_ascii=False) for r in self.records]
            lines.append(json.dumps({"summary": self.summary()}, sort_keys=True))
            return "\n".join(lines) + "\n"
        lines = []
        for r in self.records:
            line = f"{r.status.upper():4} {r.suite:10} {r.item:14} {r.instance:28} {r.identity}"
            lines.append(line)
            if r.detail and r.status != "pass":
                lines += ["     " + d for d in r.detail.splitlines()]
        s = self.summary()
        lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['skip']} skipped")
        return "\n".join(lines) + "\n"


# -- corpus filter ----------------------------------------------------------------------

_ALIASES = [(r"∂\s*Δ\s*\[\s*(\d+)\s*\]", r"dD\1"), (r"Δ\s*\[\s*(\d+)\s*\]", r"D\1"),
            (r"π\s*\(\s*(\d+)\s*\)", r"D\1"), ("×", "x"), (r"\s+", "")]


def normalize_id(text: str) -> str:
    """Map notation such as 'Δ[1]×Δ[1]' or '∂Δ[2]' onto corpus ids."""
    for pat, rep in _ALIASES:
        text = re.sub(pat, rep, text)
    return text


def parse_filter(text: str | None) -> frozenset | None:
    if text is None:
        return None
    items = [normalize_id(x) for x in text.split(",")]
    items = [x for x in items if x]
    if not items:
        raise CrossedError("empty corpus filter")
    known = set(corpus.corpus_ids())
    for x in items:
        if x not in known and not all(p in known for p in x.split("x")):
            raise CrossedError(f"unknown corpus id {x!r}")
    return frozenset(items)


def _selected(task: Task, wanted: frozenset | None) -> bool:
    if wanted is None:
        return True
    return task.label in wanted or bool(wanted & set(task.parts))


# -- planning ---------------------------------------------------------------------------

def _dim(name: str) -> int:
    return corpus.get(name).effective_top()


def plan_ez(cfg: SuiteConfig) -> list:
    ids = corpus.corpus_ids()
    cap = cfg.dim_cap
    tasks = []
    for k in ids:
        if _dim(k) <= cap:
            tasks.append(Task("ez", "complex", k, (k,)))
        if _dim(k) + 1 <= cap:
            tasks.append(Task("ez", "tensor", f"{k}(x)I", (k,)))
    for r in range(1, cap + 1):
        tasks.append(Task("ez", "cube", f"I^{r}", (), (r,)))
    for k, l in itertools.product(ids, repeat=2):
        if _dim(k) + _dim(l) <= cap:
            tasks.append(Task("ez", "sdr", f"{k}x{l}", (k, l)))
    small = ["D0", "D1", "D2", "dD2"]
    for triple in itertools.product(small, repeat=3):
        if sum(_dim(x) for x in triple) <= cap:
            tasks.append(Task("ez", "squares", ",".join(triple), triple))
    for blocks in (("D1", "D1", "D1"), ("dD2", "D1", "D0"), ("D1", "D1", "D1", "D0")):
        tasks.append(Task("ez", "multi", ",".join(blocks), blocks))
    return tasks


def plan_adjunction(cfg: SuiteConfig) -> list:
    tasks = []
    for c in ("D0", "D1"):
        tasks.append(Task("adjunction", "nerve", f"N(pi({c}))", (c,)))
        tasks.append(Task("adjunction", "zeta", f"pi({c}),D1,D1", (c, "D1")))
    for n in range(3):
        for c, d, e in itertools.product(("D0", "D1"), repeat=3):
            tasks.append(Task("adjunction", "ns_compose", f"n={n} pi({c}),pi({d}),pi({e})", (c, d, e), (n,)))
    for k, c in itertools.product(("D0", "D1"), repeat=2):
        for n in (0, 1):
            tasks.append(Task("adjunction", "b_star_a_star", f"n={n} pi({k})->pi({c})", (k, c), (n,)))
    for n in (0, 1):
        for kind in ("sdr_h", "factor", "interchange", "coherent_b", "coherent_a"):
            tasks.append(Task("adjunction", kind, f"n={n} D1", ("D1",), (n,)))
    return tasks


def plan_coherence(cfg: SuiteConfig) -> list:
    tasks = [Task("coherence", "witness", "D1,D1xD1", ("D1", "D1xD1")),
             Task("coherence", "strict_into_D1", "D1,D1xD1 -> D1", ("D1", "D1xD1"))]
    for n in (0, 1):
        for r in (2, 3):
            tasks.append(Task("coherence", "relations", f"n={n} chain of {r}", ("D1", "D1xD1"), (r, n)))
        tasks.append(Task("coherence", "level_one", f"n={n} D1", ("D1",), (n,)))
    for n in range(1, 6):
        tasks.append(Task("coherence", "s_cube", f"S[{n}](0,{n})", (), (n,)))
    tasks.append(Task("coherence", "s_axioms", "S[3]", ()))
    tasks.append(Task("coherence", "pi_diagram", "[2] on D1", ("D1",)))
    for n in (0, 1):
        for P in range(min(cfg.level_cap, 2) + 1):
            tasks.append(Task("coherence", "coherent_end", f"two objects P={P} n={n}", ("D0", "D1"), (P, n)))
        tasks.append(Task("coherence", "coherent_end_count", f"two objects n={n}", ("D0", "D1"), (n,)))
        tasks.append(Task("coherence", "coherent_end_point", f"one object n={n}", ("D1",), (n,)))
    return tasks


PLANNERS = {"ez": plan_ez, "adjunction": plan_adjunction, "coherence": plan_coherence}


def plan(cfg: SuiteConfig) -> list:
    if cfg.suite != "all" and cfg.suite not in SUITES:
        raise CrossedError(f"unknown suite {cfg.suite!r}; choose from {', '.join(SUITES + ('all',))}")
    wanted = parse_filter(cfg.corpus)
    names = SUITES if cfg.suite == "all" else (cfg.suite,)
    tasks = [t for s in names for t in PLANNERS[s](cfg) if _selected(t, wanted)]
    if not tasks:
        raise CrossedError(f"corpus filter {cfg.corpus!r} selects nothing in suite {cfg.suite}")
    return tasks


# -- running ----------------------------------------------------------------------------

def _fmt_diffs(diffs) -> str:
    lines = []
    for d in diffs or []:
        if isinstance(d, tuple) and len(d) == 3:
            g, a, b = d
            lines.append(f"at {g!r}: {a!r} != {b!r}")
        else:
            lines.append(repr(d))
    return "\n".join(lines)


def _rows(task: Task, results) -> list:
    return [Record(task.suite, task.kind, task.label, name, "pass" if ok else "fail", "" if ok else _fmt_diffs(diffs))
            for name, ok, diffs in results]


def _rng(cfg: SuiteConfig, task: Task) -> random.Random:
    return random.Random(f"{cfg.seed}:{task.suite}:{task.label}")


def word_problem_backends(C) -> str:
    groups = getattr(C.solver, "groups", None)
    if groups is None:
        return "product of factors"
    return ", ".join(sorted({type(g).__name__ for g in groups.values()}))


def _run_ez(task: Task, cfg: SuiteConfig) -> list:
    from .multi import (Splitting, assoc_interchange_check, corner_relations, face_relations, split_relations,
                        sdr_relations)
    from .pi import pi
    from .tensor import interval, interval_cube, tensor

    cap = cfg.dim_cap
    if task.kind in ("complex", "tensor", "cube"):
        if task.kind == "complex":
            C = pi(corpus.get(task.parts[0]))
        elif task.kind == "tensor":
            C = tensor(pi(corpus.get(task.parts[0])), interval())
        else:
            C = interval_cube(task.args[0])
        bad = C.check_boundaries(cap)
        name = f"boundary of boundary vanishes (word problem: {word_problem_backends(C)})"
        return _rows(task, [(name, not bad, bad[:3])])
    if task.kind == "sdr":
        K, L = (corpus.get(x) for x in task.parts)
        return _rows(task, sdr_relations(K, L, cap))
    if task.kind == "squares":
        K, L, M = (corpus.get(x) for x in task.parts)
        return _rows(task, assoc_interchange_check(K, L, M, cap))
    if task.kind == "multi":
        S = Splitting.of_blocks([corpus.get(x) for x in task.parts])
        return _rows(task, face_relations(S) + split_relations(S) + corner_relations(S))
    raise CrossedError(f"unknown ez item {task.kind}")


def _run_adjunction(task: Task, cfg: SuiteConfig) -> list:
    from .adjunction import (a_star, a_star_naturality_check, b_star_a_star_check, b_star_naturality_check,
                             coherent_a_star_checks, coherent_b_star_checks, factorization_checks,
                             h_endpoint_checks, h_simplicial_checks, lemma_interchange_check,
                             reconstruction_checks)
    from .crossed import identity_morphism
    from .homotopy import convolve
    from .nerve import (counit_eps, hom_simplices, zeta_associativity_square, nerve_enriched, nerve_set,
                        ss_enriched_compose, unit_eta)
    from .pi import pi, pi_map
    from .simplicial import mapping_space_simplices, std_simplex

    rng = _rng(cfg, task)
    budget = cfg.budget
    D1 = std_simplex(1)
    P = {c: pi(corpus.get(c)) for c in ("D0", "D1")}

    if task.kind == "nerve":
        K = corpus.get(task.parts[0])
        N = nerve_set(pi(K), min(cfg.dim_cap, 3), budget)
        bad = N.check_identities()
        counts = [len(N.cells(d)) for d in range(N.effective_top() + 1)]
        eps = counit_eps(nerve_set(pi(K), 3, budget))
        tri = eps.compose(pi_map(unit_eta(K))).differences(identity_morphism(pi(K)))
        return _rows(task, [(f"simplicial identities (nondegenerate counts {counts})", not bad, bad[:3]),
                            ("eps . pi(eta) is the identity", not tri, tri)])
    if task.kind == "zeta":
        C = P[task.parts[0]]
        upper, lower, both = zeta_associativity_square(C, D1, D1)
        d1, d2 = upper.differences(lower, 2), lower.differences(both, 2)
        return _rows(task, [("zeta square commutes", not d1, d1), ("zeta square equals the diagonal form", not d2, d2)])
    if task.kind == "ns_compose":
        n = task.args[0]
        C, D, E = (P[x] for x in task.parts)
        fs, gs = hom_simplices(C, D, n, budget), hom_simplices(D, E, n, budget)
        pairs = list(itertools.product(range(len(fs)), range(len(gs))))
        if len(pairs) > cfg.samples:
            pairs = sorted(rng.sample(pairs, cfg.samples))
        ND = nerve_set(D)
        bad = []
        for i, j in pairs:
            f, g = fs[i], gs[j]
            lhs = nerve_enriched(convolve(g, f))
            rhs = ss_enriched_compose(nerve_enriched(g), nerve_enriched(f), n, ND)
            d = lhs.differences(rhs, 2)
            if d:
                bad.append(((i, j), d[0][1], d[0][2]))
        return _rows(task, [(f"enriched nerve preserves composition ({len(pairs)} pairs)", not bad, bad[:3])])
    if task.kind == "b_star_a_star":
        n = task.args[0]
        K, C = pi(corpus.get(task.parts[0])), P[task.parts[1]]
        gs = hom_simplices(K, C, n, budget)
        bad = []
        for i, g in enumerate(gs):
            name, ok, diffs = b_star_a_star_check(g)
            if not ok:
                bad.append((i, diffs[0][1], diffs[0][2]))
        return _rows(task, [(f"b*a* is the identity on all {len(gs)} simplices", not bad, bad[:3])])

    n = task.args[0]
    gs = hom_simplices(P["D1"], P["D1"], n, budget)
    fs = mapping_space_simplices(D1, D1, n, budget)
    if task.kind == "sdr_h":
        out = []
        for g in rng.sample(gs, 3):
            F = a_star(g)
            out += h_endpoint_checks(F, n)
            if n:
                out += h_simplicial_checks(F, (0, 1), n)
        return _rows(task, _merge(out))
    if task.kind == "factor":
        g, F = rng.choice(gs), a_star(rng.choice(gs))
        out = factorization_checks(g, F) + reconstruction_checks(rng.choice(gs), rng.choice(fs))
        return _rows(task, out)
    if task.kind == "interchange":
        out = []
        g0 = rng.choice(gs)
        for _ in range(3):
            f, g = rng.choice(fs), rng.choice(gs)
            out.append(("g o pi_S f = b*(a*g o f)", lemma_interchange_check(f, g), []))
            out.append(b_star_naturality_check(a_star(g), f, n))
            out.append(a_star_naturality_check(g0, g))
        return _rows(task, _merge(out))
    if task.kind == "coherent_b":
        out = []
        for _ in range(3):
            f1, f2, F = rng.choice(fs), rng.choice(fs), a_star(rng.choice(gs))
            for chain in ([F], [f1, F], [f1, f2, F]):
                out += [(f"chain of {len(chain)}: {name}", ok, d)
                        for name, ok, d in coherent_b_star_checks(chain, n)]
        return _rows(task, _merge(out))
    if task.kind == "coherent_a":
        out = []
        for _ in range(3):
            out += coherent_a_star_checks(rng.choice(fs), rng.choice(gs))
        return _rows(task, _merge(out))
    raise CrossedError(f"unknown adjunction item {task.kind}")


def _merge(results) -> list:
    """Fold repeated identity names (one per sample) into one result each."""
    order, acc = [], {}
    for name, ok, diffs in results:
        if name not in acc:
            order.append(name)
            acc[name] = [True, []]
        if not ok:
            acc[name][0] = False
            acc[name][1] += list(diffs)[:3]
    return [(name, acc[name][0], acc[name][1]) for name in order]


def _run_coherence(task: Task, cfg: SuiteConfig) -> list:
    from .adjunction import a_star, b_star_a_star_level_one
    from .coherence import (boundary_relations, composite, composition_homotopy, corner_relations,
                            enrichment_relation, phi, simplicial_relations, witness_noncommutativity)
    from .coherent_end import brute_force_count, coh_space, compatibility_checks
    from .crossed import check_morphism
    from .homotopy import convolve, corner
    from .nerve import hom_simplices
    from .pi import pi
    from .scategory import (SFunctor, coherent_pi_diagram, cube_count_check, one_object_category,
                            poset_category, s_resolution, two_object_category)
    from .simplicial import (Simplex, SimplicialMap, identity_map, mapping_space_simplices, product,
                             simplex_product, std_simplex)

    rng = _rng(cfg, task)
    budget = cfg.budget
    D0, D1 = std_simplex(0), std_simplex(1)
    Q = corpus.get("D1xD1")

    if task.kind == "witness":
        w = witness_noncommutativity([D1, Q], 1, budget)
        H = composition_homotopy(w.f0, w.f1, 1)
        ok, errs = check_morphism(H.morphism)
        spaces = " -> ".join(K.name for K in w.spaces)
        d0 = corner(H, (0,)).differences(w.composite_first.morphism)
        d1 = corner(H, (1,)).differences(w.composed_after.morphism)
        out = [(f"phi(f1).phi(f0) differs from phi(f1 f0) on {spaces}", bool(w.differences), []),
               ("composition homotopy is a morphism", ok, errs[:3]),
               ("composition homotopy starts at phi(f1 f0)", not d0, d0),
               ("composition homotopy ends at phi(f1).phi(f0)", not d1, d1)]
        fs = [w.f0, w.f1]
        out += boundary_relations(fs, 1) + simplicial_relations(fs, 1) + corner_relations(fs, 1)
        return _rows(task, out)
    if task.kind == "strict_into_D1":
        bad = []
        for K0, K1 in ((D1, D1), (D1, Q), (Q, D1)):
            A = mapping_space_simplices(K0, K1, 1, budget)
            B = mapping_space_simplices(K1, D1, 1, budget)
            for (i, f0), (j, f1) in itertools.product(enumerate(A), enumerate(B)):
                lhs = phi(composite([f0, f1], 1), 1)
                d = lhs.differences(convolve(phi(f1, 1), phi(f0, 1)))
                if d:
                    bad.append(((K0.name, K1.name, i, j), d[0][1], d[0][2]))
        return _rows(task, [("phi(f1).phi(f0) = phi(f1 f0) when the last space is D1", not bad, bad[:3])])
    if task.kind == "relations":
        r, n = task.args
        out = []
        for _ in range(3):
            spaces = [rng.choice([D1, Q])]
            for _ in range(r - 1):
                # maps between two squares at n = 1 are too many to enumerate
                spaces.append(D1 if n and spaces[-1] is Q else rng.choice([D1, Q]))
            spaces.append(D1)
            fs = [rng.choice(mapping_space_simplices(spaces[i], spaces[i + 1], n, budget)) for i in range(r)]
            out += boundary_relations(fs, n) + simplicial_relations(fs, n) + corner_relations(fs, n)
            if n == 0:
                out.append(enrichment_relation(fs))
        return _rows(task, _merge(out))
    if task.kind == "level_one":
        n = task.args[0]
        P1 = pi(D1)
        fs = mapping_space_simplices(D1, D1, n, budget)
        gs = hom_simplices(P1, P1, n, budget)
        out = []
        for _ in range(3):
            out += b_star_a_star_level_one(rng.choice(fs), rng.choice(gs))
        return _rows(task, _merge(out))
    if task.kind == "s_cube":
        n = task.args[0]
        name, ok, diffs = cube_count_check(n)
        cube = D0 if n == 1 else D1
        for _ in range(n - 2):
            cube = simplex_product(cube, D1)
        H = s_resolution(poset_category(n), dim_cap=max(n - 1, 0)).hom(0, n)
        top = max(n - 1, 0)
        same = H.counts(top) == cube.counts(top)
        return _rows(task, [(name, ok, diffs), ("counts agree with simplex_product", same,
                                                [H.counts(top), cube.counts(top)])])
    if task.kind == "s_axioms":
        return _rows(task, s_resolution(poset_category(3), dim_cap=2).check(2))
    if task.kind == "pi_diagram":
        A = poset_category(2)
        c0 = SimplicialMap(D1, D1, lambda c: D1.apply(Simplex((0,), 0), (0,) * len(c)), name="c0")
        idm = identity_map(D1)
        K = SFunctor(A, {0: D1, 1: D1, 2: D1}, {"01": c0, "12": idm, "02": idm.compose(c0)})
        return _rows(task, K.check() + coherent_pi_diagram(K, 2).check(2))
    if task.kind.startswith("coherent_end"):
        A = two_object_category()
        inc0 = SimplicialMap(D0, D1, {(0,): Simplex((0,), 0)}, name="inc0")
        F = SFunctor(A, {0: D0, 1: D1}, {"u": inc0})
        G = SFunctor(A, {0: D1, 1: D1}, {"u": identity_map(D1)})
        if task.kind == "coherent_end":
            P, n = task.args
            Ts = coh_space(A, F, G, P, n, budget)
            out = []
            for T in Ts:
                out += compatibility_checks(T)
            return _rows(task, [(f"{len(Ts)} families stored", bool(Ts), [])] + _merge(out))
        if task.kind == "coherent_end_count":
            n = task.args[0]
            got, want = len(coh_space(A, F, G, 1, n, budget)), brute_force_count(A, F, G, n, budget)
            return _rows(task, [("level-1 count matches brute force", got == want, [(got, want)])])
        n = task.args[0]
        O = one_object_category()
        F1 = SFunctor(O, {0: D1}, {})
        got = len(coh_space(O, F1, F1, 0, n, budget))
        want = len(mapping_space_simplices(D1, D1, n, budget))
        return _rows(task, [("level 0 is the mapping space", got == want, [(got, want)])])
    raise CrossedError(f"unknown coherence item {task.kind}")


RUNNERS = {"ez": _run_ez, "adjunction": _run_adjunction, "coherence": _run_coherence}


def run_task(task: Task, cfg: SuiteConfig) -> list:
    try:
        rows = RUNNERS[task.suite](task, cfg)
    except (BudgetExceeded, CapOverflow, InfiniteHom) as e:
        rows = [Record(task.suite, task.kind, task.label, "budget or cap", "skip", f"{type(e).__name__}: {e}")]
    return rows


def _sort_key(r: Record):
    return (r.suite, r.item, r.instance, r.identity, STATUS_ORDER[r.status], r.detail)


def run_suite(suite: str = "all", corpus_filter: str | None = None, dim_cap: int = 3, seed: int = 0,
              level_cap: int = 2, budget: int = 200000, jobs: int = 1, samples: int = 300) -> Report:
    cfg = SuiteConfig(suite, corpus_filter, dim_cap, level_cap, budget, seed, jobs, samples)
    return run_config(cfg)


def run_config(cfg: SuiteConfig) -> Report:
    tasks = plan(cfg)
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            chunks = list(pool.map(run_task, tasks, itertools.repeat(cfg)))
    else:
        chunks = [run_task(t, cfg) for t in tasks]
    records = [r for chunk in chunks for r in chunk]
    return Report(sorted(records, key=_sort_key))
