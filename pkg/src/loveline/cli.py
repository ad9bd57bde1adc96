"""Command-line interface.

Subcommands: ``check`` (parse and validate), ``eval`` (run every query,
text or JSON), ``explain`` (signal trace for one query), ``export-bfo``
(ontology graph in canonical text form), and ``oracle`` (cross-check the
evaluator against the brute-force tick oracle).

Exit codes: 0 success; 1 verdict-level failure (diagnostics present,
unreadable file, oracle mismatch); 2 usage error. Query results go to
stdout, diagnostics and errors to stderr. Output is byte-deterministic
for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from .diagnostics import LovelineError
from .intervals import format_interval_set, format_rational
from .model import QuerySpec, Timeline
from .parser import DslSyntaxError, parse_document, parse_rational
from .ontology import export_graph, project_timeline
from .semantics import Verdict, evaluate, explain, tick_oracle


def _granularity(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except DslSyntaxError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loveline",
        description="Evaluate loves(S,P) queries over declarative timelines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="parse and validate a timeline file")
    check.add_argument("file")

    ev = sub.add_parser("eval", help="evaluate every query in a timeline file")
    ev.add_argument("file")
    ev.add_argument("--format", choices=("text", "json"), default="text")

    ex = sub.add_parser("explain", help="print the signal trace for one query")
    ex.add_argument("file")
    ex.add_argument("--query", type=int, required=True, metavar="N",
                    help="1-based query index")

    bfo = sub.add_parser("export-bfo", help="project the timeline to an "
                         "ontology graph and print it")
    bfo.add_argument("file")

    orc = sub.add_parser("oracle", help="cross-check evaluate against the "
                         "tick oracle for every query")
    orc.add_argument("file")
    orc.add_argument("--granularity", type=_granularity, required=True,
                     metavar="R", help="tick width (rational)")

    return parser


def _load(path: str, err: TextIO) -> Timeline | None:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        print(f"loveline: cannot read {path}: {exc.strerror}", file=err)
        return None
    result = parse_document(text)
    if result.diagnostics:
        for diag in result.diagnostics:
            print(diag.render(path), file=err)
        return None
    return result.timeline


def _threshold_of(query: QuerySpec, timeline: Timeline) -> Fraction:
    if query.threshold is not None:
        return query.threshold
    return timeline.config.threshold_default


def _query_line(query: QuerySpec, threshold: Fraction, verdict: Verdict) -> str:
    word = "HOLDS" if verdict.holds else "FAILS"
    return (
        f"loves({query.subject},{query.object}) over {query.interval} "
        f"T={format_rational(threshold)}: {word} "
        f"s={format_rational(verdict.s)} c={format_rational(verdict.c)}"
    )


def _cmd_check(path: str, out: TextIO, err: TextIO) -> int:
    return 0 if _load(path, err) is not None else 1


def _cmd_eval(path: str, fmt: str, out: TextIO, err: TextIO) -> int:
    timeline = _load(path, err)
    if timeline is None:
        return 1
    results = []
    for query in timeline.queries:
        threshold = _threshold_of(query, timeline)
        verdict = evaluate(
            query.subject, query.object, query.interval, threshold, timeline
        )
        results.append((query, threshold, verdict))
    if fmt == "text":
        for query, threshold, verdict in results:
            print(_query_line(query, threshold, verdict), file=out)
    else:
        payload = [
            {
                "subject": query.subject,
                "object": query.object,
                "interval": str(query.interval),
                "threshold": format_rational(threshold),
                "holds": verdict.holds,
                "s": format_rational(verdict.s),
                "c": format_rational(verdict.c),
                "love_events": [str(iv) for iv in verdict.love_events],
            }
            for query, threshold, verdict in results
        ]
        print(json.dumps(payload, indent=2), file=out)
    return 0


def _format_set(s) -> str:
    return format_interval_set(s) or "(empty)"


def _cmd_explain(path: str, index: int, out: TextIO, err: TextIO) -> int:
    timeline = _load(path, err)
    if timeline is None:
        return 1
    if not 1 <= index <= len(timeline.queries):
        print(
            f"loveline: query index {index} out of range "
            f"(file has {len(timeline.queries)} queries)",
            file=err,
        )
        return 1
    query = timeline.queries[index - 1]
    threshold = _threshold_of(query, timeline)
    verdict = evaluate(
        query.subject, query.object, query.interval, threshold, timeline
    )
    trace = explain(
        query.subject, query.object, query.interval, threshold, timeline
    )
    onset = (
        "(none)"
        if trace.acquaintance_onset is None
        else format_rational(trace.acquaintance_onset)
    )
    print(_query_line(query, threshold, verdict), file=out)
    print(f"condition (i):          {_format_set(trace.condition_i)}", file=out)
    print(f"condition (ii) derived: {_format_set(trace.condition_ii_derived)}",
          file=out)
    print(f"condition (ii) direct:  {_format_set(trace.condition_ii_direct)}",
          file=out)
    print(f"acquaintance onset:     {onset}", file=out)
    print(f"inhibition mask:        {_format_set(trace.inhibition_mask)}",
          file=out)
    print(f"love events:            {_format_set(verdict.love_events)}",
          file=out)
    print(f"first failure:          {trace.first_failure or '(none)'}",
          file=out)
    return 0


def _cmd_export(path: str, out: TextIO, err: TextIO) -> int:
    timeline = _load(path, err)
    if timeline is None:
        return 1
    out.write(export_graph(project_timeline(timeline)))
    return 0


def _cmd_oracle(
    path: str, granularity: Fraction, out: TextIO, err: TextIO
) -> int:
    timeline = _load(path, err)
    if timeline is None:
        return 1
    status = 0
    for query in timeline.queries:
        threshold = _threshold_of(query, timeline)
        fast = evaluate(
            query.subject, query.object, query.interval, threshold, timeline
        )
        try:
            slow = tick_oracle(
                query.subject,
                query.object,
                query.interval,
                threshold,
                timeline,
                granularity,
            )
        except LovelineError as exc:
            print(f"loveline: {exc.code}: {exc}", file=err)
            return 1
        if (fast.holds, fast.s, fast.c) != (slow.holds, slow.s, slow.c):
            status = 1
            print(
                f"mismatch {_query_line(query, threshold, fast)} "
                f"!= oracle {'HOLDS' if slow.holds else 'FAILS'} "
                f"s={format_rational(slow.s)} c={format_rational(slow.c)}",
                file=out,
            )
    return status


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    out, err = sys.stdout, sys.stderr
    if args.command == "check":
        return _cmd_check(args.file, out, err)
    if args.command == "eval":
        return _cmd_eval(args.file, args.format, out, err)
    if args.command == "explain":
        return _cmd_explain(args.file, args.query, out, err)
    if args.command == "export-bfo":
        return _cmd_export(args.file, out, err)
    if args.command == "oracle":
        return _cmd_oracle(args.file, args.granularity, out, err)
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
