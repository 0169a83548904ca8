"""Command-line front end.

Exit codes: 0 success / witness found, 1 no witness, 2 parse error,
3 not a knot, 4 genus not admissible, 5 scan cross-check failure.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .catalog import ScanSummary, is_minimal, scan_minimality
from .contfrac import eval_cf, genus, knot_from_cf, parse_knot
from .errors import NotAdmissible, NotAKnot, ParseError
from .ors import expand_pattern, find_epimorphism, parse_pattern, random_pattern
from .spectrum import construct_source, s_k

EXIT_OK, EXIT_NONE, EXIT_PARSE, EXIT_DOMAIN, EXIT_NOT_ADMISSIBLE, EXIT_CHECK = range(6)


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _table(rows) -> str:
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _knot(text: str, args) -> object:
    return parse_knot(text, mirror_fixed=not args.keep_chirality)


def cmd_analyze(args, out) -> int:
    rep = is_minimal(_knot(args.fraction, args))
    if args.format == "table":
        rows = [
            ("knot", f"K({rep.knot})"),
            ("even_cf", str(rep.even_cf)),
            ("genus", rep.genus),
            ("crossing", rep.crossing),
            ("alexander", rep.alexander),
            ("minimal", rep.minimal),
            ("family", "-" if rep.family is None else rep.family.family_id),
        ]
        rows += [(f"witness[{i}]", _dumps(w.to_json())) for i, w in enumerate(rep.witnesses)]
        print(_table(rows), file=out)
    elif args.format == "csv":
        print("knot,genus,crossing,minimal", file=out)
        print(f"{rep.knot},{rep.genus},{rep.crossing},{str(rep.minimal).lower()}", file=out)
    else:
        print(_dumps(rep.to_json()), file=out)
    return EXIT_OK


def cmd_epi(args, out) -> int:
    w = find_epimorphism(_knot(args.source, args), _knot(args.target, args))
    if w is None:
        print("none", file=out)
        return EXIT_NONE
    print(_dumps(w.to_json()), file=out)
    return EXIT_OK


def cmd_spectrum(args, out) -> int:
    sp = s_k(args.k)
    if args.format == "table":
        gaps = ", ".join(f"[{lo},{hi}]" for lo, hi in sp.gaps) or "-"
        print(
            _table(
                [
                    ("k", sp.k),
                    ("min_genus", sp.min_genus),
                    ("gaps", gaps),
                    ("|S_k|", len(sp)),
                ]
            ),
            file=out,
        )
    else:
        print(_dumps(sp.to_json()), file=out)
    return EXIT_OK


def cmd_construct(args, out) -> int:
    source, w = construct_source(_knot(args.target, args), args.n)
    if args.format == "json":
        print(
            _dumps(
                {
                    "source": str(source),
                    "genus": genus(source),
                    "even_cf": list(source.even_cf),
                    "witness": w.to_json(),
                }
            ),
            file=out,
        )
    else:
        print(str(source), file=out)
        print(_dumps(w.to_json()), file=out)
    return EXIT_OK


def cmd_expand(args, out) -> int:
    exp = expand_pattern(parse_pattern(args.pattern), mirror_fixed=not args.keep_chirality)
    value = eval_cf(exp.reduced)
    if args.format == "json":
        print(
            _dumps(
                {
                    "unreduced": list(exp.unreduced),
                    "reduced": list(exp.reduced),
                    "value": f"{value.numerator}/{value.denominator}",
                    "knot": str(exp.knot),
                    "genus": len(exp.reduced) // 2,
                }
            ),
            file=out,
        )
    else:
        print(f"{exp.reduced} = {value.numerator}/{value.denominator}", file=out)
    return EXIT_OK


def cmd_scan(args, out) -> int:
    summary = ScanSummary()
    reports = scan_minimality(
        args.max_p,
        max_genus=args.max_genus,
        workers=args.workers,
        mirror_fixed=not args.keep_chirality,
        summary=summary,
    )
    if args.format == "json":
        for rep in reports:
            print(_dumps(rep.to_json()), file=out)
        print(_dumps({"summary": summary.to_json()}), file=out)
    else:
        for _ in reports:
            pass
        if args.format == "csv":
            out.write(summary.to_csv())
        else:
            rows = summary.rows()
            print(f"{'genus':>5} {'knots':>8} {'minimal':>8} {'non_minimal':>11}", file=out)
            for r in rows:
                print(
                    f"{r['genus']:>5} {r['knots']:>8} {r['minimal']:>8} {r['non_minimal']:>11}",
                    file=out,
                )
    if not summary.ok:
        print(
            "cross-check failed for: " + ", ".join(str(k) for k in summary.disagreements),
            file=sys.stderr,
        )
        return EXIT_CHECK
    return EXIT_OK


def cmd_roundtrip(args, out) -> int:
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.count):
        pat = random_pattern(rng)
        exp = expand_pattern(pat)
        if find_epimorphism(exp.knot, knot_from_cf(pat.base)) is None:
            failures += 1
            print(_dumps({"failed": pat.to_text()}), file=out)
    print(_dumps({"seed": args.seed, "patterns": args.count, "failures": failures}), file=out)
    return EXIT_OK if failures == 0 else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table", "csv"), default=None)
    common.add_argument(
        "--keep-chirality",
        action="store_true",
        help="do not identify a knot with its mirror image",
    )

    parser = argparse.ArgumentParser(
        prog="twobridge",
        description="Epimorphisms between two-bridge knot groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full report for K(p/q)")
    p.add_argument("fraction", help="knot as p/q")
    p.set_defaults(func=cmd_analyze, default_format="json")

    p = sub.add_parser("epi", parents=[common], help="decide G(source) -> G(target)")
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(func=cmd_epi, default_format="json")

    p = sub.add_parser("spectrum", parents=[common], help="admissible source genera")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_spectrum, default_format="json")

    p = sub.add_parser("construct", parents=[common], help="genus-n source over a target")
    p.add_argument("target")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_construct, default_format="table")

    p = sub.add_parser("expand", parents=[common], help="expand a pattern literal")
    p.add_argument("pattern", help="e.g. 'base=[2,2];eps=+,+,+;c=0,0'")
    p.set_defaults(func=cmd_expand, default_format="table")

    p = sub.add_parser("scan", parents=[common], help="minimality scan over p <= max-p")
    p.add_argument("--max-p", type=int, default=4000)
    p.add_argument("--max-genus", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_scan, default_format="json")

    p = sub.add_parser("roundtrip", parents=[common], help="random pattern round trips")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1000)
    p.set_defaults(func=cmd_roundtrip, default_format="json")
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    try:
        return args.func(args, out)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except NotAKnot as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except NotAdmissible as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NOT_ADMISSIBLE
    except ValueError as e:
        # invalid patterns and other malformed arguments
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
