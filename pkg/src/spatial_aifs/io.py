"""Reading and writing classification problems as JSON documents or CSV tables.

JSON layout::

    {"universe": ["y1", "y2"],
     "known":   {"B1": [[0.5, 0.3], [0.7, 0.0]], ...},
     "unknown": {"A":  [[0.4, 0.3], [0.7, 0.1]]}}

CSV layout: a header ``set,label,feature,mu,nu`` and one row per element, where
``set`` is ``known`` or ``unknown``. Elements of a pattern appear in feature order.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

from .classifier import ClassificationProblem
from .core import AifsError, AifsPattern, element_problem

CSV_COLUMNS = ("set", "label", "feature", "mu", "nu")


class DatasetError(AifsError):
    """Malformed or invalid dataset; the message starts with the offending location."""


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float, str)):
        raise DatasetError(f"{where}: expected a number, got {value!r}")
    try:
        v = float(value)
    except ValueError:
        raise DatasetError(f"{where}: expected a number, got {value!r}") from None
    if not math.isfinite(v):
        raise DatasetError(f"{where}: value must be finite, got {value!r}")
    return v


def _element(mu, nu, where: str, field_fmt: str = "{}.{}") -> tuple[float, float]:
    mu = _number(mu, field_fmt.format(where, "mu"))
    nu = _number(nu, field_fmt.format(where, "nu"))
    msg = element_problem(mu, nu)
    if msg:
        raise DatasetError(f"{where}: {msg}")
    return mu, nu


def _check_lengths(universe, groups: dict[str, dict[str, list]]):
    k = len(universe) if universe else None
    for set_name, pats in groups.items():
        for label, pairs in pats.items():
            if k is None:
                k = len(pairs)
            if len(pairs) != k:
                raise DatasetError(f"{set_name}.{label}: {len(pairs)} elements, expected {k}")


def _build(universe, known: dict, unknown: dict) -> ClassificationProblem:
    if not known:
        raise DatasetError("known: at least one known pattern is required")
    _check_lengths(universe, {"known": known, "unknown": unknown})
    return ClassificationProblem(
        tuple(AifsPattern.from_pairs(lab, pairs) for lab, pairs in known.items()),
        tuple(AifsPattern.from_pairs(lab, pairs) for lab, pairs in unknown.items()),
        tuple(universe),
    )


def problem_from_dict(doc) -> ClassificationProblem:
    if not isinstance(doc, dict):
        raise DatasetError("document: expected an object with keys universe, known, unknown")
    extra = set(doc) - {"universe", "known", "unknown"}
    if extra:
        raise DatasetError(f"document: unexpected keys {sorted(extra)}")
    universe = doc.get("universe", [])
    if not isinstance(universe, list) or not all(isinstance(u, str) for u in universe):
        raise DatasetError("universe: expected a list of feature names")
    sets = {}
    for set_name in ("known", "unknown"):
        raw = doc.get(set_name, {})
        if not isinstance(raw, dict):
            raise DatasetError(f"{set_name}: expected an object mapping label to pairs")
        pats = {}
        for label, pairs in raw.items():
            if not isinstance(pairs, list) or not pairs:
                raise DatasetError(f"{set_name}.{label}: expected a non-empty list of [mu, nu] pairs")
            row = []
            for i, pair in enumerate(pairs):
                where = f"{set_name}.{label}[{i}]"
                if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                    raise DatasetError(f"{where}: expected [mu, nu], got {pair!r}")
                row.append(_element(pair[0], pair[1], where))
            pats[label] = row
        sets[set_name] = pats
    return _build(universe, sets["known"], sets["unknown"])


def problem_to_dict(problem: ClassificationProblem) -> dict:
    def pats(ps):
        return {p.label: [list(e.as_tuple()) for e in p.elements] for p in ps}

    return {
        "universe": list(problem.universe),
        "known": pats(problem.known),
        "unknown": pats(problem.unknown),
    }


def read_json(path) -> ClassificationProblem:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise DatasetError(f"{path}: line {e.lineno} column {e.colno}: {e.msg}") from None
    return problem_from_dict(doc)


def read_csv(path) -> ClassificationProblem:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        header = [h.strip() for h in reader.fieldnames or []]
        if tuple(header) != CSV_COLUMNS:
            raise DatasetError(f"{path}: line 1: header must be {','.join(CSV_COLUMNS)}")
        reader.fieldnames = header
        universe: list[str] = []
        sets: dict[str, dict[str, list]] = {"known": {}, "unknown": {}}
        features: dict[tuple[str, str], list[str]] = {}
        for row in reader:
            where = f"{path}: line {reader.line_num}"
            if None in row or any(v is None for v in row.values()):
                raise DatasetError(f"{where}: expected {len(CSV_COLUMNS)} columns")
            set_name = row["set"].strip().lower()
            if set_name not in sets:
                raise DatasetError(f"{where}: set must be 'known' or 'unknown', got {row['set']!r}")
            label, feature = row["label"].strip(), row["feature"].strip()
            if not label:
                raise DatasetError(f"{where}: empty label")
            sets[set_name].setdefault(label, []).append(
                _element(row["mu"].strip(), row["nu"].strip(), where, "{}, column {}")
            )
            seen = features.setdefault((set_name, label), [])
            pos = len(seen)
            seen.append(feature)
            if pos == len(universe):
                universe.append(feature)
            elif universe[pos] != feature:
                raise DatasetError(
                    f"{where}: feature {feature!r} out of order, expected {universe[pos]!r}"
                )
    if not universe:
        raise DatasetError(f"{path}: no data rows")
    return _build(universe, sets["known"], sets["unknown"])


def write_csv(problem: ClassificationProblem, path):
    universe = problem.universe or tuple(f"y{i}" for i in range(1, problem.k + 1))
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_COLUMNS)
        for set_name, pats in (("known", problem.known), ("unknown", problem.unknown)):
            for p in pats:
                for feat, e in zip(universe, p.elements):
                    w.writerow([set_name, p.label, feat, repr(e.mu), repr(e.nu)])


def load_problem(path) -> ClassificationProblem:
    """Load a dataset, choosing the reader by file extension (``.csv`` or JSON otherwise)."""
    path = Path(path)
    if not path.exists():
        raise DatasetError(f"{path}: no such file")
    if path.suffix.lower() == ".csv":
        return read_csv(path)
    return read_json(path)
