#!/usr/bin/env python3
"""Run the bundled judgment corpus and report results, timing, and determinism.

Usage: python scripts/run_golden_corpus.py [--repeats N]
"""

import argparse
import sys
import time
from pathlib import Path

from tempcoh import parse_axioms, parse_lexicon, run_corpus

REPO_ROOT = Path(__file__).resolve().parents[1]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--corpus", type=Path, default=REPO_ROOT / "corpus")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    lexicon = parse_lexicon((args.corpus / "lexicon.txt").read_text())
    axioms = parse_axioms((args.corpus / "axioms.txt").read_text())

    outputs = []
    elapsed = []
    for _ in range(args.repeats):
        started = time.perf_counter()
        report = run_corpus(args.corpus, lexicon, axioms)
        elapsed.append(time.perf_counter() - started)
        outputs.append("".join(case.actual for case in report.cases))

    for case in report.cases:
        print(f"{'PASS' if case.passed else 'FAIL'} {case.name}")
        if not case.passed:
            print(f"  expected:\n{case.expected}")
            print(f"  actual:\n{case.actual}")
    ok = report.passed
    deterministic = len(set(outputs)) == 1
    print(f"cases: {len(report.cases)}, failures: {len(report.failures)}")
    print(f"runs: {args.repeats}, deterministic: {deterministic}")
    print("timing per run: " + ", ".join(f"{t * 1000:.1f} ms" for t in elapsed))
    return 0 if ok and deterministic else 1


if __name__ == "__main__":
    sys.exit(main())
