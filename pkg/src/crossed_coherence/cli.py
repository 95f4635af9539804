"""Command line: run verification suites, build and print objects, show a witness.

Exit codes: 0 all identities hold, 1 an identity failed, 2 usage or parse
error, 3 an enumeration budget or dimension cap was exhausted.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import corpus
from .errors import BudgetExceeded, CapOverflow, CrossedError, InfiniteHom, ParseError
from .serialize import dump, load_simplicial_set
from .suites import SUITES, SuiteConfig, normalize_id, run_config

CORPUS_ENV = "CROSSED_COHERENCE_CORPUS"


def load_corpus_dir(path: str) -> list:
    """Register every ``*.txt`` simplicial set in a directory under its stored name."""
    names = []
    for f in sorted(Path(path).glob("*.txt")):
        try:
            K = load_simplicial_set(f.read_text())
        except ParseError as e:
            raise ParseError(f"{f}: {e}") from None
        corpus.register(K.name, K)
        names.append(K.name)
    return names


def resolve_space(text: str):
    """A corpus id (notation such as 'Δ[2]' allowed) or a file in the text format."""
    p = Path(text)
    if p.is_file():
        return load_simplicial_set(p.read_text())
    return corpus.get(normalize_id(text))


def _common(p: argparse.ArgumentParser):
    p.add_argument("--dim-cap", type=int, default=3)
    p.add_argument("--budget", type=int, default=200000)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="crossed-coherence", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and print a report")
    v.add_argument("--suite", default="all", choices=SUITES + ("all",))
    v.add_argument("--corpus", default=None, help="comma separated corpus ids, e.g. 'Δ[1]×Δ[1],D2'")
    v.add_argument("--level-cap", type=int, default=2)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=300)
    v.add_argument("--format", default="text", choices=("text", "machine"))
    v.add_argument("--jobs", type=int, default=1)
    _common(v)

    b = sub.add_parser("build", help="construct an object and print it in the text format")
    b.add_argument("object", choices=("pi", "nerve", "tensor", "s-resolution", "simplicial-set"))
    b.add_argument("inputs", nargs="+", help="corpus ids or files; an integer n for s-resolution")
    _common(b)

    p = sub.add_parser("pi", help="generator counts and word problem backend of pi(K)")
    p.add_argument("space")
    _common(p)

    w = sub.add_parser("witness", help="find maps whose enriched pi does not compose strictly")
    w.add_argument("--n", type=int, default=1)
    w.add_argument("--spaces", default="D1,D1xD1")
    _common(w)

    ap.add_argument("--corpus-dir", default=os.environ.get(CORPUS_ENV),
                    help=f"directory of extra simplicial sets (default ${CORPUS_ENV})")
    return ap


def _build(args) -> str:
    from .nerve import nerve_set
    from .pi import pi
    from .scategory import poset_category, s_resolution
    from .tensor import tensor

    if args.object == "s-resolution":
        n = int(args.inputs[0])
        return dump(s_resolution(poset_category(n), dim_cap=args.dim_cap), args.dim_cap)
    spaces = [resolve_space(x) for x in args.inputs]
    if args.object == "simplicial-set":
        return dump(spaces[0], args.dim_cap)
    if args.object == "pi":
        return dump(pi(spaces[0]), args.dim_cap)
    if args.object == "tensor":
        return dump(tensor(*(pi(K) for K in spaces)), args.dim_cap)
    return dump(nerve_set(pi(spaces[0]), args.dim_cap, args.budget), args.dim_cap)


def _pi_summary(args) -> str:
    from .pi import pi
    from .suites import word_problem_backends

    C = pi(resolve_space(args.space))
    counts = C.counts(args.dim_cap)
    lines = [C.name, f"generators by dimension: {counts}", f"word problem: {word_problem_backends(C)}"]
    bad = C.check_boundaries(args.dim_cap)
    lines.append("boundary of boundary vanishes" if not bad else f"boundary failures: {bad[:3]}")
    return "\n".join(lines) + "\n"


def _witness(args) -> str:
    from .coherence import composition_homotopy, witness_noncommutativity
    from .homotopy import corner

    spaces = [resolve_space(x) for x in args.spaces.split(",")]
    w = witness_noncommutativity(spaces, args.n, args.budget)
    H = composition_homotopy(w.f0, w.f1, args.n)
    lines = [f"spaces: {' -> '.join(K.name for K in w.spaces)}  (n = {w.n})",
             f"f0: {sorted(w.f0.table().items(), key=repr)}",
             f"f1: {sorted(w.f1.table().items(), key=repr)}"]
    for g, a, b in w.differences:
        lines.append(f"at {g!r}: phi(f1 f0) gives {a!r}, phi(f1) phi(f0) gives {b!r}")
    ok0 = not corner(H, (0,)).differences(w.composite_first.morphism)
    ok1 = not corner(H, (1,)).differences(w.composed_after.morphism)
    lines.append(f"composition homotopy ends match: {ok0 and ok1}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.corpus_dir:
            load_corpus_dir(args.corpus_dir)
        if args.command == "verify":
            cfg = SuiteConfig(args.suite, args.corpus, args.dim_cap, args.level_cap, args.budget,
                              args.seed, args.jobs, args.samples)
            report = run_config(cfg)
            sys.stdout.write(report.render(args.format))
            return report.exit_code()
        if args.command == "build":
            sys.stdout.write(_build(args))
        elif args.command == "pi":
            sys.stdout.write(_pi_summary(args))
        else:
            sys.stdout.write(_witness(args))
        return 0
    except (BudgetExceeded, CapOverflow, InfiniteHom) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (CrossedError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
