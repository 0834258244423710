"""Command line front end.

Machine output is one JSON object per line on stdout; human summaries go to
stderr. For a fixed seed and flags the stdout bytes are deterministic.

Exit codes: 0 success (for run: an output), 1 malformed arguments or oracle
file, 2 run timed out, 3 run still needs a question, 4 selftest property
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

from .evaluator import Budget, NeedQuestion, Output, delta, run_outcome_json
from .partiality import ret
from .combinators import ident, search
from .reducibility import (
    complement_reduction,
    decide_via_reduction,
    manyone_to_turing,
    reduce_refl,
    sdec_from_plain,
    step_semidecider_to_partial,
)
from .dovetail import pt_reduce
from .selftest import TRANSPORT_BUDGETS, run_all, tt_eval_little_endian
from .trees import TableOracle, threshold_tree
from .truthtable import FIXTURES, TruthTable, deficiency, deficiency_reduction, tt_eval, tt_to_turing


class CLIError(Exception):
    pass


BUILTIN_ORACLES: dict[str, Callable[[int], bool]] = {
    "evens": lambda q: q % 2 == 0,
    "odds": lambda q: q % 2 == 1,
    "parity-of": lambda q: q % 2 == 1,
    "all-true": lambda q: True,
    "all-false": lambda q: False,
}

TREES = {
    "threshold": threshold_tree,
    "ident": ident,
    "search": search,
}


def _scalar(q: Any) -> Any:
    return q[-1] if isinstance(q, tuple) else q


def _load_table_file(path: str) -> TableOracle:
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise CLIError(f"cannot read oracle file {path}: {exc}")
    if not isinstance(data, list):
        raise CLIError("oracle file must be a JSON array of {q, a} objects")
    entries = []
    for row in data:
        if not isinstance(row, dict) or "q" not in row or "a" not in row:
            raise CLIError(f"bad oracle row: {row!r}")
        q = row["q"]
        if isinstance(q, list):
            q = tuple(q)
        answers = row["a"]
        if isinstance(answers, bool):
            answers = [answers]
        if not isinstance(answers, list):
            raise CLIError(f"answers must be a bool or a list in row {row!r}")
        entries.append((q, tuple(answers)))
    return TableOracle(entries)


def _resolve_oracle(source: str):
    """A builtin predicate name or a table file path."""
    if source in BUILTIN_ORACLES:
        pred = BUILTIN_ORACLES[source]
        return lambda q: pred(_scalar(q))
    table = _load_table_file(source)
    if not table.is_functional():
        raise CLIError(f"table {source} is relational; one answer per question required")
    by_q = {q: answers[0] for q, answers in table.entries if answers}

    def decider(q: Any) -> bool:
        if q not in by_q:
            raise CLIError(f"oracle table has no answer for question {q}")
        return by_q[q]

    return decider


def _parse_range(text: str) -> range:
    parts = text.split("..")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except (IndexError, ValueError):
        raise CLIError(f"range must look like A..B, got {text!r}")
    if hi < lo:
        raise CLIError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _verdict_word(v: Any) -> str:
    if v is None:
        return "timeout"
    return "true" if v else "false"


def _load_tt_file(path: str) -> TruthTable:
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise CLIError(f"cannot read table file {path}: {exc}")
    if not isinstance(data, list):
        raise CLIError("table file must be a JSON array of {x, queries, table} objects")
    by_x: dict[int, tuple] = {}
    for row in data:
        if not isinstance(row, dict) or not {"x", "queries", "table"} <= set(row):
            raise CLIError(f"bad table row: {row!r}")
        qs, rows = tuple(row["queries"]), tuple(bool(b) for b in row["table"])
        if len(rows) != 2 ** len(qs):
            raise CLIError(f"row for x={row['x']}: {len(rows)} rows cannot cover {len(qs)} queries")
        by_x[row["x"]] = (qs, rows)

    def queries(x: int) -> tuple:
        if x not in by_x:
            raise CLIError(f"table file has no row for input {x}")
        return by_x[x][0]

    def table(x: int) -> tuple:
        if x not in by_x:
            raise CLIError(f"table file has no row for input {x}")
        return by_x[x][1]

    return TruthTable(queries, table)


def _parity_pair(pred: Callable[[int], bool]):
    accept = step_semidecider_to_partial(lambda x, n: pred(x) and n >= x)
    reject = step_semidecider_to_partial(lambda x, n: not pred(x) and n >= x)
    return sdec_from_plain(accept), sdec_from_plain(reject)


def _figures_for_verdicts(directory: str, stem: str, lines: list[tuple]) -> None:
    from .figures import save_figure, verdict_figure

    path = f"{directory.rstrip('/')}/{stem}-verdicts.png"
    save_figure(verdict_figure(lines, stem), path)
    sys.stderr.write(f"figure written to {path}\n")


def cmd_run(args: argparse.Namespace) -> int:
    factory = TREES[args.tree]
    tree = factory()
    decider = _resolve_oracle(args.oracle)
    budget = Budget(args.qfuel, args.sfuel)
    outcome = delta(tree.at(args.input), lambda q: ret(bool(decider(q))), budget)
    _emit(run_outcome_json(outcome, budget))
    if isinstance(outcome, Output):
        sys.stderr.write(f"output {outcome.value} after {len(outcome.transcript)} questions\n")
        return 0
    if isinstance(outcome, NeedQuestion):
        sys.stderr.write(f"needs question {outcome.question}; raise --qfuel\n")
        return 3
    sys.stderr.write("timed out; raise --sfuel\n")
    return 2


def _build_reduction(args: argparse.Namespace):
    kind = args.kind
    if kind == "refl":
        return reduce_refl(), _resolve_oracle(args.oracle), TRANSPORT_BUDGETS["refl"]
    if kind == "manyone":
        shift = args.shift
        return (
            manyone_to_turing(lambda x, s=shift: x + s),
            _resolve_oracle(args.oracle),
            TRANSPORT_BUDGETS["manyone"],
        )
    if kind == "complement":
        return complement_reduction(), _resolve_oracle(args.oracle), TRANSPORT_BUDGETS["complement"]
    if kind == "tt":
        if not args.table:
            raise CLIError("reduce tt needs --table FILE")
        tt = _load_tt_file(args.table)
        return tt_to_turing(tt), _resolve_oracle(args.oracle), TRANSPORT_BUDGETS["tt"]
    if kind == "deficiency":
        fixture = FIXTURES[args.enum]()
        oracle = lambda q, f=fixture: deficiency(f.enum, q, f.witness_bound(q))
        return deficiency_reduction(fixture.enum), oracle, Budget(400, 20)
    if kind == "pt":
        member, complement = _parity_pair(BUILTIN_ORACLES[args.p])
        return pt_reduce(member, complement), lambda y: True, TRANSPORT_BUDGETS["pt"]
    raise CLIError(f"unknown reduction kind {kind!r}")


def cmd_reduce(args: argparse.Namespace) -> int:
    reduction, decider, default_budget = _build_reduction(args)
    budget = Budget(
        args.qfuel if args.qfuel is not None else default_budget.questions,
        args.sfuel if args.sfuel is not None else default_budget.steps,
    )
    if args.kind == "pt" and args.sfuel is None:
        budget = Budget(budget.questions, max(budget.steps, 400))
    inputs = _parse_range(args.range)
    verdicts = decide_via_reduction(reduction, decider, inputs, budget)
    lines = [(x, _verdict_word(v)) for x, v in verdicts]
    for x, word in lines:
        _emit({"x": x, "verdict": word})
    timeouts = sum(1 for _x, w in lines if w == "timeout")
    sys.stderr.write(
        f"reduce {args.kind} over {args.range}: {len(lines)} verdicts, "
        f"{sum(1 for _x, w in lines if w == 'true')} true, "
        f"{sum(1 for _x, w in lines if w == 'false')} false, {timeouts} timeouts "
        f"(budget {budget.questions} questions, {budget.steps} steps)\n"
    )
    if args.figures:
        _figures_for_verdicts(args.figures, f"reduce-{args.kind}", lines)
    return 0


def cmd_demo_hypersimple(args: argparse.Namespace) -> int:
    inputs = _parse_range(args.range)
    for name in ("double", "xor1"):
        fixture = FIXTURES[name]()
        reduction = deficiency_reduction(fixture.enum)
        oracle = lambda q, f=fixture: deficiency(f.enum, q, f.witness_bound(q))
        verdicts = decide_via_reduction(reduction, oracle, inputs, Budget(400, 20))
        lines = [(x, _verdict_word(v)) for x, v in verdicts]
        for x, word in lines:
            _emit({"enum": name, "x": x, "verdict": word})
        agree = sum(1 for (x, w) in lines if w == _verdict_word(fixture.member(x)))
        sys.stderr.write(
            f"{name}: {agree}/{len(lines)} verdicts match the known membership\n"
        )
        if args.figures:
            from .figures import enumerator_figure, save_figure

            _figures_for_verdicts(args.figures, f"hypersimple-{name}", lines)
            path = f"{args.figures.rstrip('/')}/hypersimple-{name}-enumerator.png"
            save_figure(
                enumerator_figure(
                    fixture.enum, inputs[-1], fixture.deficient, f"{name} listing"
                ),
                path,
            )
            sys.stderr.write(f"figure written to {path}\n")
    return 0


def cmd_selftest(args: argparse.Namespace) -> int:
    evaluator = tt_eval_little_endian if args.broken_tt_indexing else tt_eval
    results = run_all(args.seed, args.cases, evaluator=evaluator)
    failed = False
    for result in results:
        _emit({"suite": result.name, "cases": result.cases, "ok": result.ok})
        if not result.ok:
            failed = True
            for line in result.failures[:3]:
                sys.stderr.write(f"{result.name}: {line}\n")
            extra = len(result.failures) - 3
            if extra > 0:
                sys.stderr.write(f"{result.name}: ...and {extra} more\n")
    sys.stderr.write(
        f"selftest seed={args.seed} cases={args.cases}: "
        f"{sum(1 for r in results if r.ok)}/{len(results)} suites ok\n"
    )
    return 4 if failed else 0


def _add_budget_flags(parser: argparse.ArgumentParser, q_default=None, s_default=None) -> None:
    parser.add_argument("--qfuel", type=int, default=q_default, help="question budget")
    parser.add_argument("--sfuel", type=int, default=s_default, help="step fuel per partial value")


def _add_reduce_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--oracle", default="evens", help="builtin name or JSON table file")
    parser.add_argument("--range", default="0..10", help="inclusive input range A..B")
    parser.add_argument("--shift", type=int, default=1, help="offset for the manyone map")
    parser.add_argument("--table", help="truth table file for kind tt")
    parser.add_argument("--enum", default="double", choices=sorted(FIXTURES), help="listing for kind deficiency")
    parser.add_argument("--p", default="evens", choices=("evens", "odds"), help="predicate for kind pt")
    parser.add_argument("--figures", help="directory for rendered figures")
    _add_budget_flags(parser)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oracletree",
        description="Run computation trees against oracles and reductions over ranges.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="one interrogation of a builtin tree")
    p_run.add_argument("--tree", default="threshold", choices=sorted(TREES))
    p_run.add_argument("--input", type=int, required=True)
    p_run.add_argument("--oracle", default="all-true", help="builtin name or JSON table file")
    _add_budget_flags(p_run, q_default=16, s_default=200)
    p_run.set_defaults(handler=cmd_run)

    p_reduce = sub.add_parser("reduce", help="verdicts for a reduction over an input range")
    p_reduce.add_argument("kind", choices=("refl", "manyone", "complement", "tt", "deficiency", "pt"))
    _add_reduce_flags(p_reduce)
    p_reduce.set_defaults(handler=cmd_reduce)

    p_pt = sub.add_parser("pt", help="shorthand for reduce pt")
    _add_reduce_flags(p_pt)
    p_pt.set_defaults(handler=cmd_reduce, kind="pt")

    p_tt = sub.add_parser("tt", help="shorthand for reduce tt")
    _add_reduce_flags(p_tt)
    p_tt.set_defaults(handler=cmd_reduce, kind="tt")

    p_demo = sub.add_parser("demo-hypersimple", help="membership via deficiency oracles, both listings")
    p_demo.add_argument("--range", default="0..50", help="inclusive input range A..B")
    p_demo.add_argument("--figures", help="directory for rendered figures")
    p_demo.set_defaults(handler=cmd_demo_hypersimple)

    p_self = sub.add_parser("selftest", help="run the seeded property suites")
    p_self.add_argument("--seed", type=int, default=0)
    p_self.add_argument("--cases", type=int, default=200)
    p_self.add_argument("--broken-tt-indexing", action="store_true", help=argparse.SUPPRESS)
    p_self.set_defaults(handler=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.handler(args)
    except CLIError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def entry() -> None:
    sys.exit(main())
