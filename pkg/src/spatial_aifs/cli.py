"""Command-line front end: ``spatial-aifs {classify,compare,axioms,catalog}``.

Exit status: 0 success, 1 property or golden-table failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import sys

from .benchmarks import BENCHMARK_NAMES, run_benchmark
from .classifier import classify
from .core import AifsError
from .io import load_problem
from .measures import SSM_IDS, MeasureId, MeasureParams, MeasureSpec, measure_catalog
from .properties import run_properties
from .report import dumps, fmt, text_table

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

GROUPS = {
    "all": tuple(MeasureId),
    "ssm": SSM_IDS,
    "baselines": tuple(m for m in MeasureId if m not in SSM_IDS),
}


class UsageError(Exception):
    pass


def parse_selection(expr: str | None, exclude: str | None = None) -> list[MeasureId]:
    """Resolve ``--measures``/``--exclude`` expressions (ids, ``all``, ``ssm``, ``baselines``)."""

    def resolve(text):
        out = []
        for tok in (t.strip() for t in text.split(",")):
            if not tok:
                continue
            if tok.lower() in GROUPS:
                out.extend(GROUPS[tok.lower()])
                continue
            try:
                out.append(MeasureId.parse(tok))
            except KeyError:
                raise UsageError(f"unknown measure {tok!r}; see the 'catalog' command") from None
        return out

    chosen = resolve(expr or "ssm")
    dropped = set(resolve(exclude)) if exclude else set()
    seen, result = set(), []
    for m in chosen:
        if m not in seen and m not in dropped:
            seen.add(m)
            result.append(m)
    if not result:
        raise UsageError("measure selection is empty")
    return result


def parse_partition(text: str | None):
    """``"1,2"`` gives delta = {1, 2} (gamma = the rest); ``"1,2/3,4"`` sets both."""
    if text is None:
        return None, None
    try:
        parts = text.split("/")
        if len(parts) > 2:
            raise ValueError
        sets = [frozenset(int(t) for t in p.split(",") if t.strip()) for p in parts]
    except ValueError:
        raise UsageError(f"bad --partition {text!r}; expected e.g. 1,2 or 1,2/3,4") from None
    return sets[0], (sets[1] if len(sets) == 2 else None)


def _write(text: str, output: str | None):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- classify ---------------------------------------------------------------------


def _classify_text(problem, report) -> str:
    out = []
    labels = report.known
    for q in report.queries:
        out.append(f"query {q.query}")
        rows = []
        for o in q.outcomes:
            decision = o.decision or "Unclassified"
            if o.tied:
                decision += " (tie: " + ", ".join(o.tied) + ")"
            rows.append([o.measure] + [fmt(o.values[lab]) for lab in labels] + [decision])
        out.append(text_table(["measure"] + labels + ["result"], rows))
        ssm = [o for o in q.outcomes if o.measure in {m.value for m in SSM_IDS}]
        if len(ssm) == 3:
            ed = q.outcome(MeasureId.SSM_ED.value).decision or "Unclassified"
            out.append(f"spatial decision (ED): {ed}; strong: {'yes' if q.strong else 'no'}")
        out.append("")
    return "\n".join(out)


def cmd_classify(args) -> int:
    try:
        problem = load_problem(args.input)
    except (AifsError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    ids = parse_selection(args.measures, args.exclude)
    delta_set, gamma_set = parse_partition(args.partition)
    if MeasureId.S_Az_p_h in ids and delta_set is None:
        raise UsageError("S_Az_p_h needs --partition (indices of the difference block)")
    try:
        params = MeasureParams(p=args.p, z=args.z, delta_set=delta_set, gamma_set=gamma_set)
        specs = [MeasureSpec(m, params) for m in ids]
        report = classify(problem, specs)
    except (AifsError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "structured":
        _write(dumps(report.to_dict()), args.output)
    else:
        _write(_classify_text(problem, report), args.output)
    return EXIT_OK


# --- compare ------------------------------------------------------------------------


def cmd_compare(args) -> int:
    if args.case == "all":
        names = list(BENCHMARK_NAMES)
    elif args.case in BENCHMARK_NAMES:
        names = [args.case]
    else:
        raise UsageError(f"unknown case {args.case!r}; choose all or one of {', '.join(BENCHMARK_NAMES)}")
    selection = parse_selection(args.measures, args.exclude) if args.measures else None
    comps = [run_benchmark(n, selection) for n in names]
    ok = all(c.ok for c in comps)
    if args.format == "structured":
        _write(dumps({"ok": ok, "cases": [c.to_dict() for c in comps]}), args.output)
    else:
        parts = [c.to_text() for c in comps]
        summary = [[c.case, "ok" if c.ok else f"{len(c.failures)} mismatches"] for c in comps]
        parts.append(text_table(["case", "status"], summary))
        _write("\n\n".join(parts) + "\n", args.output)
    return EXIT_OK if ok else EXIT_FAIL


# --- axioms ---------------------------------------------------------------------------


def cmd_axioms(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    report = run_properties(args.trials, args.seed)
    if args.format == "structured":
        _write(dumps(report.to_dict()), args.output)
    else:
        _write(report.to_text() + "\n", args.output)
    return EXIT_OK if report.ok else EXIT_FAIL


# --- catalog ----------------------------------------------------------------------------


def cmd_catalog(args) -> int:
    entries = measure_catalog()
    if args.format == "structured":
        doc = [{"id": e.id.value, "name": e.name, "source": e.source, "params": list(e.params)} for e in entries]
        _write(dumps(doc), args.output)
    else:
        rows = [[e.id.value, e.name, e.source, ", ".join(e.params) or "-"] for e in entries]
        _write(text_table(["id", "name", "source", "params"], rows) + "\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spatial-aifs",
        description="Spatial similarity measures for intuitionistic fuzzy patterns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, measures=True):
        if measures:
            p.add_argument("--measures", help="comma list of ids or all, ssm, baselines")
            p.add_argument("--exclude", help="comma list of ids or groups to drop")
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--output", help="write to this file instead of stdout")

    p = sub.add_parser("classify", help="classify the unknown patterns of a dataset")
    p.add_argument("input", help="JSON document or CSV table")
    common(p)
    p.add_argument("--p", type=int, default=1, help="order parameter (default 1)")
    p.add_argument("--z", type=int, default=2, help="S_Bd parameter (default 2)")
    p.add_argument("--partition", help="S_Az_p_h index partition, e.g. 1,2 or 1,2/3,4")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("compare", help="recompute the reference tables and diff them")
    p.add_argument("case", help="all or one of " + ", ".join(BENCHMARK_NAMES))
    common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("axioms", help="run the seeded property suites")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    common(p, measures=False)
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("catalog", help="list the available measures")
    common(p, measures=False)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
