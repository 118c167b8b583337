"""Sweep, audit and inspect triangle-group actions on curves (A4, S4, A5).

Exit codes: 0 success, 1 usage or input error, 2 audit failure (``verify``
found mismatches against the fixtures).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .covering import Signature, nu_coset_oracle, rh_genus
from .enumerator import (
    REALIZED,
    TableRow,
    load_fixtures,
    mismatched_rows,
    sweep,
    verify_discards,
    verify_fixtures,
)
from .groups import GroupError
from .hurwitz import count_generating_tuples, count_tuples, find_witness, verify_vector
from .triangle import (
    canonical_action,
    complete_params,
    curve_invariants,
    feasibility,
    normalize_kind,
)
from .words import WordError, evaluate_word, render_symbolic

CSV_COLUMNS = ("group", "s", "t", "r", "k", "h", "g", "b", "pa", "bsq", "status", "witness")


class UsageError(Exception):
    pass


def _parse_params(text: str) -> dict[str, int]:
    out = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        name, sep, value = part.partition("=")
        if not sep:
            raise UsageError(f"malformed params {text!r}; expected e.g. s=2,t=6")
        try:
            out[name.strip()] = int(value)
        except ValueError:
            raise UsageError(f"malformed value in {part!r}") from None
    return out


def _labels(text: str) -> list[str]:
    return [x.strip().upper() for x in text.split(",") if x.strip()]


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _rows_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        d = row.as_dict()
        d["witness"] = d["word"]
        writer.writerow(["" if d[c] is None else d[c] for c in CSV_COLUMNS])
    return buf.getvalue()


def _rows_text(rows: list[TableRow]) -> str:
    lines = []
    for row in rows:
        d = row.as_dict()
        p = " ".join(f"{k}={d[k]}" for k in ("s", "t", "r", "k", "e"))
        if row.status == REALIZED:
            vals = " ".join(f"{k}={d[k]}" for k in ("h", "g", "b", "pa", "bsq"))
            lines.append(f"{d['group']} {p}  realized  {vals}  {d['word']}")
        else:
            lines.append(f"{d['group']} {p}  {row.status}  {row.reason}")
    return "\n".join(lines) + "\n"


def cmd_enumerate(args) -> int:
    rows = sweep(args.group)
    if args.realized_only:
        rows = [r for r in rows if r.status == REALIZED]
    if args.format == "csv":
        sys.stdout.write(_rows_csv(rows))
    elif args.format == "text":
        sys.stdout.write(_rows_text(rows))
    else:
        _emit([r.as_dict() for r in rows])
    return 0


def cmd_verify(args) -> int:
    try:
        fixtures = load_fixtures(args.fixtures).for_kind(args.group)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read fixtures: {exc}") from None
    rows = sweep(args.group)
    report = verify_fixtures(rows, fixtures)
    discards = verify_discards(args.group, fixtures)
    bad_discards = [d for d in discards if not d["ok"]]
    failed = not report.clean or bad_discards
    if args.format == "json":
        _emit({**report.as_dict(), "discards": discards, "mismatched_rows": mismatched_rows(report)})
    else:
        out = [
            f"group {args.group}: {report.fixture_rows} fixture rows, {report.matched} matched",
        ]
        for m in report.value_mismatches:
            out.append(f"  value mismatch {m['params']} {m['field']}: fixture {m['fixture']}, engine {m['engine']}")
        for m in report.status_mismatches:
            out.append(f"  status mismatch {m['params']}: engine {m['engine']} ({m['reason']})")
        for m in report.vector_failures:
            out.append(f"  vector failure {m['params']}: {m['word']}")
        for b in report.beyond_fixture:
            out.append(f"  beyond fixture: {b['group']} s={b['s']} t={b['t']} r={b['r']} k={b['k']} {b['word']}")
        out.append(f"  discards: {len(discards)} tuples checked, {len(bad_discards)} realized")
        for d in bad_discards:
            out.append(f"  discard realized: {d['params']}")
        sys.stdout.write("\n".join(out) + "\n")
    return 2 if failed else 0


def cmd_witness(args) -> int:
    action = canonical_action(args.group)
    g = action.group
    labels = _labels(args.classes)
    for label in labels:
        g.conjugacy_class(label)
    w = find_witness(g, labels)
    payload = {
        "group": action.kind,
        "classes": labels,
        "tuples_product_one": count_tuples(g, labels),
        "generating_tuples": count_generating_tuples(g, labels),
        "witness": None,
    }
    if w is not None:
        report = verify_vector(g, w.entries, labels)
        payload["witness"] = w.render(g)
        payload["witness_ia"] = render_symbolic(g, w.entries, action.binding)
        payload["report"] = report.as_dict()
    if args.format == "text":
        sys.stdout.write((payload["witness"] or "no generating vector") + "\n")
    else:
        _emit(payload)
    return 0


def cmd_invariants(args) -> int:
    kind = normalize_kind(args.group)
    p = complete_params(kind, **_parse_params(args.params))
    verdict = feasibility(kind, p)
    try:
        inv = curve_invariants(kind, p).as_dict()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit({**inv, "params": p.as_dict(), "feasibility": str(verdict)})
    return 0


def cmd_nu(args) -> int:
    action = canonical_action(args.group)
    g = action.group
    sig = Signature(g, tuple(_labels(args.signature)), args.gamma)
    profile = sig.profile
    payload: dict = dict(profile.by_class)
    if args.verify:
        for beta, value in profile.nu.items():
            if nu_coset_oracle(sig, beta) != value:
                sys.stderr.write(f"oracle disagreement at {g.elements[beta]}\n")
                return 2
    if args.element:
        beta = evaluate_word(g, args.element, action.binding)
        if beta == g.identity_index:
            raise UsageError("nu of the identity is undefined")
        payload = {"element": g.elements[beta].render(), "class": g.class_of[beta], "nu": profile[beta],
                   "h": rh_genus(sig)}
    _emit(payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="deg3curves", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="sweep the parameter lattice of a group")
    p.add_argument("--group", required=True)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--all", dest="realized_only", action="store_false",
                   help="include infeasible and no_vector rows")
    p.set_defaults(func=cmd_enumerate, realized_only=True)

    p = sub.add_parser("verify", help="audit the sweep against fixture tables")
    p.add_argument("--group", required=True)
    p.add_argument("--fixtures", default=None, help="fixture JSON (default: bundled tables)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="lexicographically least generating vector")
    p.add_argument("--group", required=True)
    p.add_argument("--classes", required=True, help="comma-separated class labels, e.g. 2A,2A,3A")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("invariants", help="curve invariants for a parameter tuple")
    p.add_argument("--group", required=True)
    p.add_argument("--params", required=True, help="e.g. s=2,t=6")
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("nu", help="fixed-point counts per class for a signature")
    p.add_argument("--group", required=True)
    p.add_argument("--signature", required=True, help="comma-separated branch classes")
    p.add_argument("--gamma", type=int, default=0)
    p.add_argument("--element", help="word in i, a, a2 (e.g. 'i a')")
    p.add_argument("--verify", action="store_true", help="cross-check with the coset oracle")
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_nu)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        args.group = normalize_kind(args.group)
        return args.func(args)
    except (UsageError, GroupError, WordError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
