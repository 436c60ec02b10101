"""Command-line interface: single-discourse interpretation and corpus regression.

Exit codes: 0 success, 1 infelicitous verdict in plain (non `--json`)
single-file mode, 2 unreadable or malformed input, 3 corpus failures.
JSON goes to stdout; `--trace` derivation lines go to stderr so stdout
stays machine-readable.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .interpret import (
    CorpusError,
    enumerate_assignments,
    interpret,
    interpretation_to_dict,
    render_json,
    run_corpus,
)
from .parsing import (
    ParseError,
    UnknownLemmaError,
    parse_axioms,
    parse_discourse,
    parse_lexicon,
    validate_axioms,
)


def _load_inputs(args):
    lexicon = parse_lexicon(args.lexicon.read_text(encoding="utf-8"))
    axioms = parse_axioms(args.axioms.read_text(encoding="utf-8"))
    validate_axioms(axioms, lexicon)
    return lexicon, axioms


def _print_trace(trace) -> None:
    for line in trace:
        print(line, file=sys.stderr)


def _relation_line(rel) -> str:
    return f"{rel.kind.value}({rel.first}, {rel.second})"


def _cmd_interpret(args) -> int:
    lexicon, axioms = _load_inputs(args)
    discourse = parse_discourse(args.discourse.read_text(encoding="utf-8"), lexicon)
    interp = interpret(discourse, lexicon, axioms)
    if args.trace:
        _print_trace(interp.trace)
    assignments = (
        enumerate_assignments(discourse, lexicon, axioms) if args.all else None
    )

    if args.json:
        data = interpretation_to_dict(interp)
        if assignments is not None:
            data["assignments"] = [
                {
                    "relations": [
                        {"kind": r.kind.value, "first": r.first, "second": r.second}
                        for r in a.relations
                    ],
                    "event_order": [
                        {"before": before, "after": after}
                        for before, after in a.event_order
                    ],
                }
                for a in assignments
            ]
        sys.stdout.write(render_json(data))
        return 0

    print(f"verdict: {'felicitous' if interp.felicitous else 'infelicitous'}")
    if interp.felicitous:
        print("relations:")
        for rel in interp.relations:
            print(f"  {_relation_line(rel)}")
        if not interp.relations:
            print("  (none)")
        print("event order:")
        for before, after in interp.event_order:
            print(f"  {before} < {after}")
        if not interp.event_order:
            print("  (unordered)")
    else:
        print("diagnostics:")
        for diag in interp.diagnostics:
            print(f"  {diag.code.value}: {diag.message}")
    if assignments is not None:
        print("assignments:")
        for i, a in enumerate(assignments, start=1):
            rels = ", ".join(_relation_line(r) for r in a.relations) or "(none)"
            order = ", ".join(f"{x} < {y}" for x, y in a.event_order) or "unordered"
            print(f"  {i}. {rels}; {order}")
        if not assignments:
            print("  (none)")
    return 0 if interp.felicitous else 1


def _cmd_corpus(args) -> int:
    lexicon, axioms = _load_inputs(args)
    report = run_corpus(args.directory, lexicon, axioms)
    if args.json:
        data = {
            "cases": [
                {"name": case.name, "passed": case.passed} for case in report.cases
            ],
            "total": len(report.cases),
            "failed": len(report.failures),
        }
        sys.stdout.write(render_json(data))
    else:
        for case in report.cases:
            print(f"{'PASS' if case.passed else 'FAIL'} {case.name}")
            if not case.passed:
                print("  expected:")
                print("    " + "\n    ".join(case.expected.rstrip().splitlines()))
                print("  actual:")
                print("    " + "\n    ".join(case.actual.rstrip().splitlines()))
        print(f"{len(report.cases) - len(report.failures)}/{len(report.cases)} cases passed")
    return 0 if report.passed else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tempcoh",
        description="Temporal interpretation of small annotated discourses",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_interpret = sub.add_parser(
        "interpret", help="interpret one discourse file and print the verdict"
    )
    p_interpret.add_argument("discourse", type=Path, help="discourse file")
    p_interpret.add_argument("--lexicon", type=Path, required=True, help="verb lexicon file")
    p_interpret.add_argument("--axioms", type=Path, required=True, help="causal axiom file")
    p_interpret.add_argument("--json", action="store_true", help="emit JSON on stdout")
    p_interpret.add_argument(
        "--all", action="store_true", help="also list every surviving assignment"
    )
    p_interpret.add_argument(
        "--trace", action="store_true", help="print the staged derivation on stderr"
    )
    p_interpret.set_defaults(func=_cmd_interpret)

    p_corpus = sub.add_parser(
        "corpus", help="run every *.disc case in a directory against expectations"
    )
    p_corpus.add_argument("directory", type=Path, help="corpus directory")
    p_corpus.add_argument("--lexicon", type=Path, required=True, help="verb lexicon file")
    p_corpus.add_argument("--axioms", type=Path, required=True, help="causal axiom file")
    p_corpus.add_argument("--json", action="store_true", help="emit JSON on stdout")
    p_corpus.set_defaults(func=_cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ParseError, UnknownLemmaError, CorpusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
