"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 domain error (bad arithmetic input,
unreadable files), 3 golden-table diff with missing triples.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .characterize import classify
from .errors import LensKnotError
from .families import FamilyId, enumerate_family
from .lens import normalize
from .surgery import HomologyCoordinates, check_surgery_congruences, surgery_lens_space
from .tablegen import (
    DEFAULT_EXCLUDED, diff_tables, generate_table, parse_allowlist, parse_golden,
    serialize_table,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_DIFF = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _p_max(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 2:
        raise argparse.ArgumentTypeError(f"must be >= 2, got {value}")
    return value


def _family(text: str) -> FamilyId:
    try:
        return FamilyId(text)
    except ValueError:
        names = ", ".join(f.value for f in FamilyId)
        raise argparse.ArgumentTypeError(f"unknown family {text!r} (choose from {names})") from None


def _family_list(text: str) -> frozenset[FamilyId]:
    return frozenset(_family(name.strip()) for name in text.split(",") if name.strip())


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def cmd_normalize(args) -> int:
    space = normalize(args.p, args.q)
    if args.format == "json":
        _emit({"p": space.p, "q": space.q, "space": str(space)})
    else:
        print(space)
    return EXIT_OK


def cmd_surgery(args) -> int:
    c = HomologyCoordinates(args.A, args.B, args.a, args.b)
    r = surgery_lens_space(c)
    ok = check_surgery_congruences(c, r)
    if args.format == "json":
        _emit({"space": str(r.space), "p": r.space.p, "q": r.space.q,
               "lambda": r.lam.value, "lemma3": ok})
    else:
        print(f"{r.space}\tlambda={r.lam.value}\tlemma3={'ok' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_DOMAIN


def cmd_enumerate(args) -> int:
    for m in enumerate_family(args.family, args.max_p):
        d, r = m.descriptor, m.result
        if args.format == "json":
            _emit({"family": d.family.value, "params": d.as_dict(), "p": r.space.p,
                   "q": r.space.q, "lambda": r.lam.value})
        else:
            print(f"{d.family}\t{d.params_str()}\t{r.space.p}\t{r.space.q}\t{r.lam.value}")
    return EXIT_OK


def cmd_classify(args) -> int:
    if args.p < 2:
        raise LensKnotError(f"classify needs p >= 2, got {args.p}")
    space = normalize(args.p, args.q)
    report = classify(space)
    t4, t5 = report.predicates
    if args.format == "json":
        _emit({
            "query": str(space), "p": space.p, "q": space.q,
            "theorem4": t4, "theorem5": t5,
            "witnesses": [{"family": w.family.value, "params": w.descriptor.as_dict(),
                           "lambda": w.lam.value} for w in report.witnesses],
        })
        return EXIT_OK
    print(f"theorem4={str(t4).lower()}")
    print(f"theorem5={str(t5).lower()}")
    if not report.witnesses:
        print("no witnesses")
    for w in report.witnesses:
        print(f"{w.family}\t{w.descriptor.params_str()}\tlambda={w.lam.value}")
    return EXIT_OK


def cmd_table(args) -> int:
    if args.golden is not None:
        golden = parse_golden(Path(args.golden).read_bytes())
        allow = parse_allowlist(Path(args.allowlist).read_bytes()) if args.allowlist else []
    rows = generate_table(args.max_p, args.exclude, workers=args.workers)
    if args.golden is None:
        if args.format == "json":
            for row in rows:
                _emit({"p": row.p, "q": row.q, "lambdas": list(row.lambdas)})
        else:
            sys.stdout.write(serialize_table(rows))
        return EXIT_OK
    report = diff_tables(rows, golden, allow)
    if args.format == "json":
        _emit({"missing": [list(t) for t in report.missing],
               "extra": [list(t) for t in report.extra],
               "allowlisted": [list(t) for t in report.allowed],
               "missing_count": len(report.missing), "extra_count": len(report.extra)})
    else:
        sys.stdout.write(report.format())
    return EXIT_OK if report.clean else EXIT_DIFF


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("tsv", "json"), default="tsv",
                     help="output format (default: tsv)")

    parser = _Parser(prog="lensknots",
                     description="Lens spaces from surgery on double-primitive knots.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("normalize", parents=[fmt], help="canonical form of L(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(run=cmd_normalize)

    p = sub.add_parser("surgery", parents=[fmt],
                       help="lens space and lambda from homology coordinates A B a b")
    for name in ("A", "B", "a", "b"):
        p.add_argument(name, type=int)
    p.set_defaults(run=cmd_surgery)

    p = sub.add_parser("enumerate", parents=[fmt], help="list a family up to a bound on p")
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--max-p", type=_p_max, required=True)
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("classify", parents=[fmt], help="families that produce L(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("table", parents=[fmt], help="generate the table or diff it against a golden file")
    p.add_argument("--max-p", type=_p_max, default=500)
    p.add_argument("--exclude", type=_family_list, default=DEFAULT_EXCLUDED,
                   help="comma-separated families to leave out (default: torus,cable)")
    p.add_argument("--golden", help="golden table to diff against")
    p.add_argument("--allowlist", help="reviewed triples allowed to be missing")
    p.add_argument("--workers", type=int, default=1, help="enumeration processes")
    p.set_defaults(run=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (LensKnotError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
