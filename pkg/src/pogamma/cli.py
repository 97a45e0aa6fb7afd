"""Command-line front end.

Exit codes: 0 success, 1 input/parse/validation error, 2 capacity error,
3 some theorem report does not hold.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import filters, ideals, theorems
from .enumeration import EnumerationSpec, enumerate_with_stats, search_witness, sweep_theorems
from .errors import CapacityError, InputError
from .predicates import evaluate_all
from .structure import build, validate
from .textformat import parse, serialize

EXIT_OK, EXIT_INPUT, EXIT_CAPACITY, EXIT_THEOREM = 0, 1, 2, 3


def _bool(v):
    return "true" if v else "false"


def _value(v):
    if isinstance(v, bool):
        return _bool(v)
    return str(v)


def render_report(report):
    lines = [f"{report.tag} {'holds' if report.holds else 'FAILS'} lhs={_bool(report.lhs)} rhs={_bool(report.rhs)}"]
    if report.rhs_oracle is not None:
        lines.append(f"  rhs_oracle = {_bool(report.rhs_oracle)}")
    for w in report.witnesses:
        lines.append("  witness = " + " ".join(f"{k}={_value(v)}" for k, v in w))
    return lines


def _stats_lines(stats):
    return [f"candidates = {stats.candidates}", f"valid = {stats.valid}", f"hits = {stats.hits}"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _parser():
    p = _Parser(prog="pogamma", description="Finite ordered Gamma-semigroup laboratory.")
    sub = p.add_subparsers(dest="command", required=True)

    for name in ("validate", "props", "theorems"):
        sub.add_parser(name).add_argument("file")
    f = sub.add_parser("filter")
    f.add_argument("file")
    f.add_argument("--element", type=int)
    i = sub.add_parser("ideals")
    i.add_argument("file")
    i.add_argument("--kind", choices=ideals.KINDS, default="two-sided")

    def bounds(q, where_required=False):
        q.add_argument("--max-m", type=int, required=True)
        q.add_argument("--max-gamma", type=int, required=True)
        q.add_argument("--order", choices=("discrete", "all"), default="all")
        q.add_argument("--where", required=where_required)
        q.add_argument("--dedup", action="store_true")
        q.add_argument("--workers", type=int, default=1)

    e = sub.add_parser("enumerate")
    bounds(e)
    e.add_argument("--count-only", action="store_true")
    bounds(sub.add_parser("search"), where_required=True)
    bounds(sub.add_parser("sweep"))
    return p


def _load(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def _spec(args):
    return EnumerationSpec(args.max_m, args.max_gamma, args.order, args.where, args.dedup)


def _cmd_validate(args):
    report = validate(_load(args.file))
    lines = [f"valid = {_bool(report.valid)}"]
    lines += [f"failure = {tag} {w}" for tag, w in report.failures]
    return (EXIT_OK if report.valid else EXIT_INPUT), lines


def _cmd_props(args):
    S = build(_load(args.file))
    return EXIT_OK, [f"{k} = {_bool(v)}" for k, v in evaluate_all(S).items()]


def _cmd_filter(args):
    S = build(_load(args.file))
    if args.element is not None and not 0 <= args.element < S.n:
        raise InputError(f"element {args.element} out of range [0, {S.n})")
    elements = range(S.n) if args.element is None else [args.element]
    return EXIT_OK, [f"N({x}) = {filters.principal_filter(S, x)}" for x in elements]


def _cmd_ideals(args):
    S = build(_load(args.file))
    found = ideals.enumerate_ideals(S, args.kind)
    lines = [f"kind = {args.kind}", f"count = {len(found)}"]
    all_semiprime = True
    for k, A in enumerate(found):
        sp = ideals.is_semiprime(S, A)
        all_semiprime &= sp
        lines += [f"ideal[{k}] = {A}", f"semiprime[{k}] = {_bool(sp)}"]
    lines.append(f"all_semiprime = {_bool(all_semiprime)}")
    return EXIT_OK, lines


def _cmd_theorems(args):
    S = build(_load(args.file))
    reports = theorems.check_all(S)
    lines = [line for r in reports for line in render_report(r)]
    return (EXIT_OK if all(r.holds for r in reports) else EXIT_THEOREM), lines


def _cmd_enumerate(args):
    structures, stats = enumerate_with_stats(_spec(args), args.workers)
    lines = _stats_lines(stats) + [f"structures = {len(structures)}"]
    if not args.count_only:
        for k, S in enumerate(structures):
            lines.append(f"structure = {k}")
            lines.extend(serialize(S).splitlines())
    return EXIT_OK, lines


def _cmd_search(args):
    report = search_witness(_spec(args), args.workers)
    lines = [f"outcome = {report.outcome}"] + _stats_lines(report.stats)
    if report.structure is not None:
        lines.extend(serialize(report.structure).splitlines())
    return EXIT_OK, lines


def _cmd_sweep(args):
    summary = sweep_theorems(_spec(args), args.workers)
    lines = [
        f"structures = {summary.structures}",
        f"reports = {summary.reports}",
        f"failures = {summary.failures}",
    ]
    if summary.first_failure is not None:
        S, reports = summary.first_failure
        lines.extend(serialize(S).splitlines())
        lines += [line for r in reports for line in render_report(r)]
    return (EXIT_OK if summary.clean else EXIT_THEOREM), lines


_COMMANDS = {
    "validate": _cmd_validate,
    "props": _cmd_props,
    "filter": _cmd_filter,
    "ideals": _cmd_ideals,
    "theorems": _cmd_theorems,
    "enumerate": _cmd_enumerate,
    "search": _cmd_search,
    "sweep": _cmd_sweep,
}


def run(argv):
    """Execute one command; returns ``(exit_code, report_text)``."""
    try:
        args = _parser().parse_args(argv)
        code, lines = _COMMANDS[args.command](args)
    except CapacityError as exc:
        return EXIT_CAPACITY, f"error = {exc}\n"
    except InputError as exc:
        return EXIT_INPUT, f"error = {exc}\n"
    return code, "\n".join(lines) + "\n"


def main(argv=None):
    code, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
