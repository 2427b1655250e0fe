"""Command-line interface.

Exit codes: 0 success, 1 not a label, 2 usage error, 3 region cap exceeded.
The region cap can be overridden with the COXETER_REGION_CAP environment
variable.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .arrangement import CoxeterSpec
from .center import center_vector, is_m_catalan, is_m_parking, is_prime_m_catalan
from .errors import DomainError, NotALabelError, ResourceLimitError
from .inverse import invert_record
from .paklabel import format_label, parse_label, region_record
from .regions import census, enumerate_regions
from .render import render_dyck, render_labeled_dyck

EXIT_OK, EXIT_NOT_LABEL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _spec(args) -> CoxeterSpec:
    try:
        return CoxeterSpec(args.n, args.k, args.l)
    except DomainError as e:
        raise UsageError(str(e)) from None


def _label(args):
    if args.m < 1:
        raise UsageError("--m must be >= 1")
    try:
        return parse_label(args.label)
    except DomainError as e:
        raise UsageError(str(e)) from None


def _write(text: str, path: str | None, out):
    if path and path != "-":
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": ")) + "\n"


def cmd_enumerate(args, out):
    spec = _spec(args)
    records = [region_record(r) for r in enumerate_regions(spec)]
    if args.format == "jsonl":
        text = "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in records)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([f"t_{i}_{j}" for i, j in spec.pairs] + ["label", "chamber", "bounded"])
        for r in records:
            writer.writerow(list(r["t"].values()) + [format_label(r["label"]),
                            format_label(r["chamber"]), str(r["bounded"]).lower()])
        text = buf.getvalue()
    _write(text, args.output, out)
    return EXIT_OK


def cmd_invert(args, out):
    b = _label(args)
    if not is_m_catalan(b, args.m):
        print(f"{format_label(b)}: not an m-Catalan function (m={args.m})", file=sys.stderr)
        return EXIT_NOT_LABEL
    out.write(_dumps(invert_record(b, args.m)))
    return EXIT_OK


def cmd_check(args, out):
    b = _label(args)
    out.write(_dumps({
        "catalan": is_m_catalan(b, args.m),
        "prime": is_prime_m_catalan(b, args.m),
        "parking": is_m_parking(b, args.m),
        "z": list(center_vector(b, args.m).z),
    }))
    return EXIT_OK


def cmd_census(args, out):
    out.write(_dumps(census(_spec(args), seed_check=args.seed_check)))
    return EXIT_OK


def cmd_render(args, out):
    b = _label(args)
    if not is_m_catalan(b, args.m):
        print(f"{format_label(b)}: not an m-Catalan function (m={args.m})", file=sys.stderr)
        return EXIT_NOT_LABEL
    if args.plain:
        try:
            doc = render_dyck(b, args.m, args.format)
        except DomainError as e:
            raise UsageError(str(e)) from None
    else:
        doc = render_labeled_dyck(b, args.m, args.format)
    _write(doc, args.output, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pakstanley",
        description="Regions and Pak-Stanley labels of (k,l)-Coxeter arrangements.")
    sub = parser.add_subparsers(dest="command", required=True)

    def spec_args(p):
        p.add_argument("--n", type=int, required=True, help="dimension")
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--l", type=int, required=True)

    def label_args(p):
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--label", required=True,
                       help="comma-separated entries, or a digit string such as 612")

    p = sub.add_parser("enumerate", help="list every region with its label")
    spec_args(p)
    p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("invert", help="chamber and fundamental label of an m-Catalan label")
    label_args(p)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("check", help="run the label recognizers")
    label_args(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("census", help="region and label counts against the closed forms")
    spec_args(p)
    p.add_argument("--seed-check", action="store_true",
                   help="also compare BFS with exhaustive enumeration when small enough")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("render", help="draw the (labeled) Dyck path of a label")
    label_args(p)
    p.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p.add_argument("--plain", action="store_true",
                   help="unlabeled path; the label must be weakly increasing")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except NotALabelError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NOT_LABEL
    except ResourceLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
