"""Run a verification suite, write the report, print a timing summary.

    python3 scripts/run_verification.py --suite all --out report.txt
"""

import argparse
import time

from crossed_coherence.suites import SuiteConfig, run_config


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--suite", default="all")
    ap.add_argument("--corpus", default=None)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--format", default="text", choices=("text", "machine"))
    ap.add_argument("--out", default=None)
    args = ap.parse_args()
    cfg = SuiteConfig(args.suite, args.corpus, seed=args.seed, jobs=args.jobs)
    start = time.perf_counter()
    report = run_config(cfg)
    elapsed = time.perf_counter() - start
    text = report.render(args.format)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        print(text, end="")
    print(f"{report.summary()} in {elapsed:.1f}s, exit code {report.exit_code()}")
    return report.exit_code()


if __name__ == "__main__":
    raise SystemExit(main())
