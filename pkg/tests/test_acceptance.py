"""Acceptance gate: one test and one printed PASS/FAIL line per criterion.

All suite items are run once (grouped by kind and timed here, since reports
carry no timings); criterion 10 then reruns ``run_suite("all")`` end to end.
Run directly with ``python3 tests/test_acceptance.py`` or through pytest; the
lines appear in the terminal summary.
"""

import sys
import time
from collections import defaultdict

import pytest

from conftest import ACCEPTANCE_LINES
from crossed_coherence import corpus
from crossed_coherence.pi import pi
from crossed_coherence.serialize import dump, load_complex, load_simplicial_set
from crossed_coherence.suites import Report, SuiteConfig, plan, run_suite, run_task

CRITERIA = {
    1: ("deformation retraction a, b, h on corpus pairs", [("ez", "sdr")], 60),
    2: ("associativity and interchange squares", [("ez", "squares")], 60),
    3: ("multi-splitting relations for r = 2, 3", [("ez", "multi")], 300),
    4: ("boundary of boundary on pi, tensors and cubes", [("ez", "complex"), ("ez", "tensor"), ("ez", "cube")], 60),
    5: ("nerve enrichment: zeta square and composition", [("adjunction", "nerve"), ("adjunction", "zeta"),
                                                          ("adjunction", "ns_compose")], 120),
    6: ("adjunction b*a*, H, factorizations, interchange", [("adjunction", k) for k in (
        "b_star_a_star", "sdr_h", "factor", "interchange", "coherent_b", "coherent_a")], 300),
    7: ("non-strictness witness and coherence relations", [("coherence", k) for k in (
        "witness", "strict_into_D1", "relations")], 300),
    8: ("S-resolution homs are cubes", [("coherence", k) for k in ("s_cube", "s_axioms", "pi_diagram")], 10),
    9: ("coherent end compatibility and level-1 identity", [("coherence", k) for k in (
        "coherent_end", "coherent_end_count", "coherent_end_point", "level_one")], 120),
}


@pytest.fixture(scope="module")
def grouped():
    cfg = SuiteConfig()
    by_kind = defaultdict(list)
    for t in plan(cfg):
        by_kind[(t.suite, t.kind)].append(t)
    out = {}
    for key, tasks in by_kind.items():
        start = time.perf_counter()
        rows = [r for t in tasks for r in run_task(t, cfg)]
        out[key] = (rows, time.perf_counter() - start)
    return out


def _judge(grouped, number, extra_ok=True, extra_note=""):
    title, keys, limit = CRITERIA[number]
    rows = [r for k in keys for r in grouped[k][0]]
    seconds = sum(grouped[k][1] for k in keys)
    bad = [r for r in rows if r.status != "pass"]
    ok = bool(rows) and not bad and seconds < limit and extra_ok
    note = f"{len(rows)} identities, {len(bad)} not passing, {seconds:.1f}s (limit {limit}s)"
    if extra_note:
        note += f"; {extra_note}"
    ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'} {title} ({note})")
    return ok, rows, bad


def _instances(rows):
    return {r.instance for r in rows}


def test_criterion_1(grouped):
    need = {f"{k}x{l}" for k in ("D1", "D2", "dD2") for l in ("D0", "D1")}
    have = _instances(grouped[("ez", "sdr")][0])
    ok, rows, bad = _judge(grouped, 1, need <= have, f"{len(have)} pairs")
    assert ok, bad[:5]


def test_criterion_2(grouped):
    have = _instances(grouped[("ez", "squares")][0])
    ok, rows, bad = _judge(grouped, 2, "D1,D1,D1" in have, f"{len(have)} triples")
    assert ok, bad[:5]


def test_criterion_3(grouped):
    need = {"D1,D1,D1", "dD2,D1,D0", "D1,D1,D1,D0"}
    ok, rows, bad = _judge(grouped, 3, need <= _instances(grouped[("ez", "multi")][0]))
    assert ok, bad[:5]


def test_criterion_4(grouped):
    rows = [r for k in CRITERIA[4][1] for r in grouped[k][0]]
    text = " ".join(r.identity for r in rows)
    covered = set(corpus.corpus_ids()) <= _instances(rows)
    backends = all(b in text for b in ("AbelianGroup", "FiniteGroup", "RewritingGroup"))
    ok, rows, bad = _judge(grouped, 4, covered and backends, "abelian, finite and rewriting backends exercised")
    assert ok, bad[:5]


def test_criterion_5(grouped):
    n_values = {r.instance.split()[0] for r in grouped[("adjunction", "ns_compose")][0]}
    ok, rows, bad = _judge(grouped, 5, n_values == {"n=0", "n=1", "n=2"})
    assert ok, bad[:5]


def test_criterion_6(grouped):
    count = len(_instances(grouped[("adjunction", "b_star_a_star")][0]))
    ok, rows, bad = _judge(grouped, 6, count == 8, "b*a* on all 8 (K, C, n) hom sets")
    assert ok, bad[:5]


def test_criterion_7(grouped):
    ok, rows, bad = _judge(grouped, 7)
    assert ok, bad[:5]


def test_criterion_8(grouped):
    ns = {r.instance for r in grouped[("coherence", "s_cube")][0]}
    ok, rows, bad = _judge(grouped, 8, {f"S[{n}](0,{n})" for n in range(1, 5)} <= ns)
    assert ok, bad[:5]


def test_criterion_9(grouped):
    levels = _instances(grouped[("coherence", "coherent_end")][0])
    need = {f"two objects P={P} n={n}" for P in range(3) for n in range(2)}
    ok, rows, bad = _judge(grouped, 9, need <= levels)
    assert ok, bad[:5]


def test_criterion_10(grouped):
    start = time.perf_counter()
    report = run_suite("all", None, 3, 0)
    seconds = time.perf_counter() - start
    rows = sorted((r for rows, _ in grouped.values() for r in rows),
                  key=lambda r: (r.suite, r.item, r.instance, r.identity))
    deterministic = report.render("machine") == Report(rows).render("machine")
    round_trips = True
    for name in corpus.corpus_ids():
        K = corpus.get(name)
        t = dump(K)
        c = dump(pi(K), 3)
        round_trips &= dump(load_simplicial_set(t)) == t and dump(load_complex(c), 3) == c
    ok = report.exit_code() == 0 and deterministic and round_trips and seconds < 1200
    ACCEPTANCE_LINES.append(
        f"criterion 10: {'PASS' if ok else 'FAIL'} infrastructure (run_suite all: {report.summary()}, "
        f"{seconds:.1f}s of 1200s; byte-identical reports: {deterministic}; round trips: {round_trips})")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
