"""End-to-end interpretation of a discourse and the corpus regression runner.

Clauses are processed left to right. The tense stage mints event points
and asserts each clause's tense constraints while accumulating salient
event times. The coherence stage then walks adjacent pairs, trying each
pair's candidate relations in cue-priority order and keeping the first
complete assignment whose constraints stay consistent and whose semantic
prerequisites hold (a depth-first search, so a dead end later in the
discourse backtracks to a lower-priority candidate earlier). A discourse
with no such assignment is infelicitous and carries a diagnostic naming
the blocking clauses.

The JSON output is deterministic: stable key order, two-space indent,
newline terminated. Corpus expectation files use the same shape minus
the diagnostic message text, so expectations compare byte-for-byte
against the canonicalized output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Mapping

from .coherence import (
    CoherenceRelation,
    RelationKind,
    candidate_relations,
    derive_cues,
    relation_constraint,
    semantic_support,
)
from .network import PointKind, PointRelation, TemporalNetwork, TimePoint
from .parsing import CausalAxiom, Discourse, Lexicon, parse_discourse
from .tense import (
    TenseResolutionContext,
    UnresolvedReferenceTimeError,
    event_point_id,
    resolve_tense,
)

SPEECH_POINT_ID = "speech"

DISCOURSE_SUFFIX = ".disc"
EXPECTATION_SUFFIX = ".expected.json"


class DiagnosticCode(Enum):
    UNRESOLVED_REFERENCE_TIME = "UNRESOLVED_REFERENCE_TIME"
    NO_COHERENCE_RELATION = "NO_COHERENCE_RELATION"
    TEMPORAL_CLASH = "TEMPORAL_CLASH"


_MESSAGE_TEMPLATES = {
    DiagnosticCode.UNRESOLVED_REFERENCE_TIME: (
        "clause {clauses}: the past perfect depends on a previously introduced "
        "event time, but none is available"
    ),
    DiagnosticCode.NO_COHERENCE_RELATION: (
        "clause(s) {clauses}: no coherence relation is licensed by the "
        "connective, tense, context, and causal knowledge"
    ),
    DiagnosticCode.TEMPORAL_CLASH: (
        "clause(s) {clauses}: the temporal constraints admit no consistent ordering"
    ),
}


@dataclass(frozen=True)
class Diagnostic:
    """Why a discourse failed to receive a felicitous interpretation."""

    code: DiagnosticCode
    clause_ids: tuple[str, ...]
    message: str

    @classmethod
    def make(cls, code: DiagnosticCode, clause_ids: tuple[str, ...]) -> "Diagnostic":
        message = _MESSAGE_TEMPLATES[code].format(clauses=", ".join(clause_ids))
        return cls(code=code, clause_ids=clause_ids, message=message)


@dataclass(frozen=True)
class Interpretation:
    """Verdict, chosen relations, closed network, and entailed event ordering."""

    felicitous: bool
    relations: tuple[CoherenceRelation, ...]
    network: TemporalNetwork
    event_order: tuple[tuple[str, str], ...]
    diagnostics: tuple[Diagnostic, ...]
    trace: tuple[str, ...] = ()


@dataclass(frozen=True)
class Assignment:
    """One complete, surviving coherence assignment (used by `--all`)."""

    relations: tuple[CoherenceRelation, ...]
    network: TemporalNetwork
    event_order: tuple[tuple[str, str], ...]


def _speech_point() -> TimePoint:
    return TimePoint(id=SPEECH_POINT_ID, kind=PointKind.SPEECH)


def _describe_constraints(result) -> str:
    return ", ".join(f"{a.id} {rel.value} {b.id}" for a, b, rel in result.new_constraints)


def _tense_stage(
    discourse: Discourse,
) -> tuple[TemporalNetwork, Diagnostic | None, list[str]]:
    """Run tense resolution over all clauses; stops at the first defect."""
    trace: list[str] = []
    speech = _speech_point()
    net = TemporalNetwork.empty().add_point(speech)
    ctx = TenseResolutionContext(speech_time=speech)
    for clause in discourse.clauses:
        try:
            result = resolve_tense(clause, ctx)
        except UnresolvedReferenceTimeError:
            trace.append(
                f"[tense] clause {clause.id}: {clause.tense.value} has no salient "
                "event time to anchor its reference time"
            )
            diag = Diagnostic.make(
                DiagnosticCode.UNRESOLVED_REFERENCE_TIME, (clause.id,)
            )
            return net.close(), diag, trace
        net = net.add_point(result.event_time)
        for a, b, rel in result.new_constraints:
            net = net.assert_constraint(a, b, rel)
        net = net.close()
        trace.append(
            f"[tense] clause {clause.id}: minted {result.event_time.id} "
            f"({clause.tense.value}), reference time {result.reference_time.id}; "
            f"asserted {_describe_constraints(result)}"
        )
        if not net.is_consistent():
            trace.append(f"[tense] clause {clause.id}: constraints clash")
            diag = Diagnostic.make(DiagnosticCode.TEMPORAL_CLASH, (clause.id,))
            return net, diag, trace
        ctx = ctx.remember(result.event_time)
    return net, None, trace


def build_tense_network(discourse: Discourse) -> TemporalNetwork:
    """The closed network after tense resolution only, before any coherence constraint.

    Raises :class:`UnresolvedReferenceTimeError` if a past perfect cannot
    be anchored. A clash shows up as an inconsistent network.
    """
    net, diag, _ = _tense_stage(discourse)
    if diag is not None and diag.code is DiagnosticCode.UNRESOLVED_REFERENCE_TIME:
        raise UnresolvedReferenceTimeError(diag.clause_ids[0])
    return net


def _event_order(
    net: TemporalNetwork, discourse: Discourse
) -> tuple[tuple[str, str], ...]:
    """Entailed precedences between event points, in discourse order."""
    ids = [event_point_id(c.id) for c in discourse.clauses]
    order: list[tuple[str, str]] = []
    for i, a in enumerate(ids):
        for b in ids[i + 1 :]:
            rel = net.query(a, b)
            if rel is PointRelation.PRECEDES:
                order.append((a, b))
            elif rel is PointRelation.FOLLOWS:
                order.append((b, a))
    return tuple(order)


def _describe_cues(cues) -> str:
    conn = cues.connective.value if cues.connective else "none"
    return (
        f"connective={conn}, tense_cue={str(cues.tense_cue).lower()}, "
        f"parallel_context={str(cues.parallel_context).lower()}"
    )


class _Search:
    """Depth-first search over per-pair candidate relations in priority order."""

    def __init__(self, discourse, axioms, trace, collect_all=False):
        self.discourse = discourse
        self.axioms = axioms
        self.trace = trace
        self.pairs = list(zip(discourse.clauses, discourse.clauses[1:]))
        self.collect_all = collect_all
        self.complete: list[tuple[tuple[CoherenceRelation, ...], TemporalNetwork]] = []
        # Deepest pair index at which a branch died, and why; later shallower
        # failures never override it, so the diagnostic names the furthest
        # pair the interpretation reached.
        self.failure: tuple[int, DiagnosticCode, tuple[str, ...]] | None = None

    def _record_failure(
        self, idx: int, code: DiagnosticCode, clause_ids: tuple[str, ...]
    ) -> None:
        if self.failure is None or idx > self.failure[0]:
            self.failure = (idx, code, clause_ids)

    def run(self, idx, net, chosen):
        if idx == len(self.pairs):
            self.complete.append((tuple(chosen), net))
            return not self.collect_all
        first, second = self.pairs[idx]
        cues = derive_cues(self.discourse, second)
        candidates = candidate_relations((first, second), cues, self.axioms)
        pair_label = f"({first.id}, {second.id})"
        self.trace.append(f"[cues] pair {pair_label}: {_describe_cues(cues)}")
        names = ", ".join(c.kind.name for c in candidates) or "none"
        self.trace.append(f"[coherence] pair {pair_label}: candidates: {names}")
        any_supported = False
        for candidate in candidates:
            if not semantic_support(candidate, self.discourse, self.axioms):
                self.trace.append(
                    f"[coherence] pair {pair_label}: {candidate.kind.name} rejected, "
                    "no semantic support"
                )
                continue
            any_supported = True
            trial = net
            constraint = relation_constraint(candidate)
            if constraint is not None:
                (a, b), rel = constraint
                trial = trial.assert_constraint(a, b, rel)
                asserted = f"; asserted {a} {rel.value} {b}"
            else:
                asserted = "; no ordering constraint"
            trial = trial.close()
            if not trial.is_consistent():
                self.trace.append(
                    f"[coherence] pair {pair_label}: {candidate.kind.name} rejected, "
                    "temporal clash"
                )
                continue
            self.trace.append(
                f"[coherence] pair {pair_label}: {candidate.kind.name} holds{asserted}"
            )
            if self.run(idx + 1, trial, chosen + [candidate]):
                return True
            self.trace.append(
                f"[coherence] pair {pair_label}: backtracking from {candidate.kind.name}"
            )
        code = (
            DiagnosticCode.TEMPORAL_CLASH
            if any_supported
            else DiagnosticCode.NO_COHERENCE_RELATION
        )
        self._record_failure(idx, code, (first.id, second.id))
        return False


def interpret(
    discourse: Discourse, lexicon: Lexicon, axioms: list[CausalAxiom]
) -> Interpretation:
    """Interpret a discourse: tense stage, then coherence resolution.

    Returns a felicitous Interpretation with one relation per adjacent
    pair and the entailed event ordering, or an infelicitous one whose
    diagnostics name the blocking clauses. Pure and deterministic.
    """
    net, diag, trace = _tense_stage(discourse)
    if diag is not None:
        trace.append(f"[result] infelicitous: {diag.code.value}")
        return Interpretation(
            felicitous=False,
            relations=(),
            network=net.close(),
            event_order=(),
            diagnostics=(diag,),
            trace=tuple(trace),
        )
    search = _Search(discourse, axioms, trace)
    if search.run(0, net, []):
        relations, final = search.complete[0]
        order = _event_order(final, discourse)
        rendered = ", ".join(f"{a} < {b}" for a, b in order) or "none"
        trace.append(f"[result] felicitous; entailed event order: {rendered}")
        return Interpretation(
            felicitous=True,
            relations=relations,
            network=final,
            event_order=order,
            diagnostics=(),
            trace=tuple(trace),
        )
    idx, code, clause_ids = search.failure
    diag = Diagnostic.make(code, clause_ids)
    trace.append(f"[result] infelicitous: {diag.code.value}")
    return Interpretation(
        felicitous=False,
        relations=(),
        network=net,
        event_order=(),
        diagnostics=(diag,),
        trace=tuple(trace),
    )


def enumerate_assignments(
    discourse: Discourse, lexicon: Lexicon, axioms: list[CausalAxiom]
) -> list[Assignment]:
    """Every complete coherence assignment that survives, in priority order."""
    net, diag, trace = _tense_stage(discourse)
    if diag is not None:
        return []
    search = _Search(discourse, axioms, trace, collect_all=True)
    search.run(0, net, [])
    return [
        Assignment(
            relations=relations,
            network=final,
            event_order=_event_order(final, discourse),
        )
        for relations, final in search.complete
    ]


def interpretation_to_dict(interp: Interpretation) -> dict[str, Any]:
    """The stable JSON form of an interpretation."""
    return {
        "felicitous": interp.felicitous,
        "relations": [
            {"kind": rel.kind.value, "first": rel.first, "second": rel.second}
            for rel in interp.relations
        ],
        "event_order": [
            {"before": before, "after": after} for before, after in interp.event_order
        ],
        "diagnostics": [
            {
                "code": diag.code.value,
                "clauses": list(diag.clause_ids),
                "message": diag.message,
            }
            for diag in interp.diagnostics
        ],
    }


def render_json(data: Mapping[str, Any]) -> str:
    return json.dumps(data, indent=2) + "\n"


class CorpusError(ValueError):
    """A corpus case is unusable: missing or malformed expectation file."""


def comparison_form(data: Mapping[str, Any]) -> dict[str, Any]:
    """Project output or expectation data onto the compared subset.

    Keeps felicity, relations, event order, and diagnostic codes with
    their clause ids; diagnostic message wording is not compared.
    """
    return {
        "felicitous": data["felicitous"],
        "relations": [
            {"kind": r["kind"], "first": r["first"], "second": r["second"]}
            for r in data["relations"]
        ],
        "event_order": [
            {"before": o["before"], "after": o["after"]} for o in data["event_order"]
        ],
        "diagnostics": [
            {"code": d["code"], "clauses": list(d["clauses"])}
            for d in data["diagnostics"]
        ],
    }


_EXPECTED_TOP_KEYS = {"felicitous", "relations", "event_order", "diagnostics"}
_RELATION_KINDS = {kind.value for kind in RelationKind}
_DIAGNOSTIC_CODES = {code.value for code in DiagnosticCode}


def _malformed(path: Path, why: str) -> CorpusError:
    return CorpusError(f"{path.name}: malformed expectation: {why}")


def load_expectation(path: Path) -> dict[str, Any]:
    """Load and validate one expectation file."""
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise _malformed(path, f"invalid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise _malformed(path, "top level must be an object")
    if set(data) != _EXPECTED_TOP_KEYS:
        raise _malformed(
            path, f"keys must be exactly {sorted(_EXPECTED_TOP_KEYS)}, got {sorted(data)}"
        )
    if not isinstance(data["felicitous"], bool):
        raise _malformed(path, "felicitous must be a boolean")
    for rel in data["relations"]:
        if not isinstance(rel, dict) or set(rel) != {"kind", "first", "second"}:
            raise _malformed(path, "each relation needs kind/first/second")
        if rel["kind"] not in _RELATION_KINDS:
            raise _malformed(path, f"unknown relation kind {rel['kind']!r}")
    for entry in data["event_order"]:
        if not isinstance(entry, dict) or set(entry) != {"before", "after"}:
            raise _malformed(path, "each event_order entry needs before/after")
    for diag in data["diagnostics"]:
        if not isinstance(diag, dict) or not {"code", "clauses"} <= set(diag):
            raise _malformed(path, "each diagnostic needs code and clauses")
        if not set(diag) <= {"code", "clauses", "message"}:
            raise _malformed(path, "diagnostic keys are code/clauses/message")
        if diag["code"] not in _DIAGNOSTIC_CODES:
            raise _malformed(path, f"unknown diagnostic code {diag['code']!r}")
    return data


@dataclass(frozen=True)
class CaseResult:
    name: str
    passed: bool
    expected: str
    actual: str


@dataclass(frozen=True)
class CorpusReport:
    cases: tuple[CaseResult, ...]

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    @property
    def failures(self) -> tuple[CaseResult, ...]:
        return tuple(case for case in self.cases if not case.passed)


def run_corpus(
    directory: Path, lexicon: Lexicon, axioms: list[CausalAxiom]
) -> CorpusReport:
    """Interpret every `*.disc` case in `directory` against its expectation file.

    Cases are processed in lexicographic filename order. A discourse file
    without a sibling `<name>.expected.json` raises :class:`CorpusError`,
    as does a malformed expectation.
    """
    results: list[CaseResult] = []
    for disc_path in sorted(Path(directory).glob("*" + DISCOURSE_SUFFIX)):
        name = disc_path.name[: -len(DISCOURSE_SUFFIX)]
        expectation_path = disc_path.with_name(name + EXPECTATION_SUFFIX)
        if not expectation_path.exists():
            raise CorpusError(f"missing expectation file for {disc_path.name}")
        expectation = load_expectation(expectation_path)
        discourse = parse_discourse(disc_path.read_text(encoding="utf-8"), lexicon)
        interp = interpret(discourse, lexicon, axioms)
        actual = render_json(comparison_form(interpretation_to_dict(interp)))
        expected = render_json(comparison_form(expectation))
        results.append(
            CaseResult(
                name=name, passed=actual == expected, expected=expected, actual=actual
            )
        )
    return CorpusReport(cases=tuple(results))
