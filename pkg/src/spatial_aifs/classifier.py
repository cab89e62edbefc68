"""Nearest-pattern classification by maximal similarity."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import AifsPattern, EmptyInput, LengthMismatch
from .measures import SSM_IDS, MeasureId, MeasureSpec, measure_value
from .report import round_half_up

TIE_TOL = 1e-9
PRINT_DECIMALS = 4


@dataclass(frozen=True)
class ClassificationProblem:
    known: tuple[AifsPattern, ...]
    unknown: tuple[AifsPattern, ...]
    universe: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "known", tuple(self.known))
        object.__setattr__(self, "unknown", tuple(self.unknown))
        object.__setattr__(self, "universe", tuple(self.universe))
        if not self.known:
            raise EmptyInput("at least one known pattern is required")
        labels = [p.label for p in self.known]
        dupes = sorted({lab for lab in labels if labels.count(lab) > 1})
        if dupes:
            raise ValueError(f"duplicate known labels: {dupes}")
        k = len(self.known[0])
        for p in self.known + self.unknown:
            if len(p) != k:
                raise LengthMismatch(f"pattern {p.label!r} has length {len(p)}, expected {k}")
        if self.universe and len(self.universe) != k:
            raise LengthMismatch(f"universe has {len(self.universe)} features, patterns have {k}")

    @property
    def k(self) -> int:
        return len(self.known[0])


@dataclass
class MeasureOutcome:
    measure: str
    values: dict[str, float]
    decision: str | None  # None means Unclassified
    tied: list[str] = field(default_factory=list)
    printed_tied: list[str] = field(default_factory=list)

    @property
    def printed_decision(self) -> str | None:
        """Decision under ties judged on values rounded to the printed precision."""
        if len(self.printed_tied) > 1:
            return None
        return self.printed_tied[0]

    def to_dict(self) -> dict:
        return {
            "measure": self.measure,
            "values": self.values,
            "decision": self.decision,
            "tied": self.tied,
            "printed_tied": self.printed_tied,
        }


@dataclass
class QueryReport:
    query: str
    outcomes: list[MeasureOutcome]
    strong: bool

    def outcome(self, measure: str) -> MeasureOutcome:
        for o in self.outcomes:
            if o.measure == measure:
                return o
        raise KeyError(measure)

    def to_dict(self) -> dict:
        return {
            "query": self.query,
            "strong": self.strong,
            "outcomes": [o.to_dict() for o in self.outcomes],
        }


@dataclass
class ClassificationReport:
    known: list[str]
    queries: list[QueryReport]

    def query(self, label: str) -> QueryReport:
        for q in self.queries:
            if q.query == label:
                return q
        raise KeyError(label)

    def to_dict(self) -> dict:
        return {"known": self.known, "queries": [q.to_dict() for q in self.queries]}


def argmax_labels(values: dict[str, float], tol: float = TIE_TOL) -> list[str]:
    """Labels whose value is within ``tol`` of the maximum, in input order."""
    best = max(values.values())
    return [lab for lab, v in values.items() if best - v <= tol]


def printed_argmax(values: dict[str, float], decimals: int = PRINT_DECIMALS) -> list[str]:
    shown = {lab: round_half_up(v, decimals) for lab, v in values.items()}
    best = max(shown.values())
    return [lab for lab, v in shown.items() if v == best]


def _outcome(spec: MeasureSpec, known, query) -> MeasureOutcome:
    values = {b.label: measure_value(spec.id, spec.params, b, query) for b in known}
    tied = argmax_labels(values)
    return MeasureOutcome(
        measure=spec.label,
        values=values,
        decision=tied[0] if len(tied) == 1 else None,
        tied=tied if len(tied) > 1 else [],
        printed_tied=printed_argmax(values),
    )


def _is_strong(by_id: dict[MeasureId, MeasureOutcome]) -> bool:
    if not all(m in by_id for m in SSM_IDS):
        return False
    decisions = {by_id[m].decision for m in SSM_IDS}
    return None not in decisions and len(decisions) == 1


def classify(problem: ClassificationProblem, measures) -> ClassificationReport:
    """Classify every unknown pattern under every measure in ``measures``.

    ``measures`` is a list of ``MeasureSpec`` (bare ``MeasureId`` values are
    accepted and use default parameters). A query is flagged strong when all
    three spatial branches are present, classified, and agree.
    """
    specs = [m if isinstance(m, MeasureSpec) else MeasureSpec(MeasureId(m)) for m in measures]
    if not specs:
        raise ValueError("no measures selected")
    queries = []
    for q in problem.unknown:
        outcomes = [_outcome(s, problem.known, q) for s in specs]
        by_id = {s.id: o for s, o in zip(specs, outcomes)}
        queries.append(QueryReport(q.label, outcomes, _is_strong(by_id)))
    return ClassificationReport([b.label for b in problem.known], queries)


@dataclass(frozen=True)
class StrongDecision:
    query: str
    decision: str | None
    strong: bool
    branches: tuple[str | None, str | None, str | None]


def strong_classification(problem: ClassificationProblem) -> list[StrongDecision]:
    """Spatial classification of each query.

    The equidominant branch gives the decision; agreement of the other two
    branches only sets the strong flag.
    """
    report = classify(problem, [MeasureSpec(m) for m in SSM_IDS])
    out = []
    for q in report.queries:
        md, nmd, ed = (o.decision for o in q.outcomes)
        out.append(StrongDecision(q.query, ed, q.strong, (md, nmd, ed)))
    return out
