#!/usr/bin/env python3
"""Print the staged derivation for every discourse in the bundled corpus.

Shows, per case, the minted time points and tense constraints, the cue
set of each adjacent pair, the candidate relations considered, and the
final verdict.
"""

import argparse
import sys
from pathlib import Path

from tempcoh import interpret, parse_axioms, parse_discourse, parse_lexicon

REPO_ROOT = Path(__file__).resolve().parents[1]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--corpus", type=Path, default=REPO_ROOT / "corpus")
    args = parser.parse_args()

    lexicon = parse_lexicon((args.corpus / "lexicon.txt").read_text())
    axioms = parse_axioms((args.corpus / "axioms.txt").read_text())

    for disc_path in sorted(args.corpus.glob("*.disc")):
        print(f"=== {disc_path.name}")
        for line in disc_path.read_text().splitlines():
            if line.strip() and not line.lstrip().startswith("#"):
                print(f"    {line}")
        discourse = parse_discourse(disc_path.read_text(), lexicon)
        interp = interpret(discourse, lexicon, axioms)
        for line in interp.trace:
            print(f"  {line}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
