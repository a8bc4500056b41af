"""``python -m rootposets``: enumerate antichains, compute characteristic polynomials, verify.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arrangements import (
    EngineError,
    ResourceGuardError,
    build_arrangement,
    char_poly,
    normalize_kind,
    semi_shi_conjecture_report,
)
from .polynomials import zaslavsky_counts
from .posets import FILTERS, enumerate_antichains
from .rootsys import RootSystemError, build_root_system
from .verify import SCOPES, run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _system(spec: str):
    try:
        return build_root_system(spec)
    except (RootSystemError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args) -> int:
    rs = _system(args.system)
    try:
        ans = enumerate_antichains(rs, args.filter)
    except RootSystemError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        doc = {"system": rs.name, "filter": args.filter, "antichains": [a.to_json() for a in ans], "count": len(ans)}
        text = json.dumps(doc) + "\n"
    else:
        text = "".join(f"{a}\n" for a in ans) + f"count: {len(ans)}\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_charpoly(args) -> int:
    rs = _system(args.system)
    kind_arg = args.kind_opt or args.kind
    if kind_arg is None:
        raise UsageError("an arrangement kind is required")
    m = args.m_opt if args.m_opt is not None else (args.m if args.m is not None else 1)
    try:
        kind = normalize_kind(kind_arg)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if kind == "coxeter":
        m = 0
    if m < 0:
        raise UsageError("m must be non-negative")
    if m > args.max_m:
        raise ResourceGuardError(f"m = {m} exceeds --max-m {args.max_m}")
    try:
        arr = build_arrangement(rs, kind, m)
    except RootSystemError as exc:
        raise UsageError(str(exc)) from exc
    chi = char_poly(arr, max_rank=args.max_rank)
    z = zaslavsky_counts(chi, rs.rank)
    doc = {
        "system": rs.name,
        "kind": kind,
        "m": m,
        "hyperplanes": len(arr),
        "chi": chi.coefficient_list(),
        "factored": chi.factored(),
        "regions": z["regions"],
        "bounded_regions": z["bounded_regions"],
    }
    if kind == "shi_s":
        rep = semi_shi_conjecture_report(rs, m, args.max_rank)
        doc["conjecture"] = {"predicted": rep["predicted_factored"], "verdict": rep["verdict"]}
    if args.format == "json":
        text = json.dumps(doc) + "\n"
    else:
        text = f"{doc['factored']}; regions={z['regions']} bounded={z['bounded_regions']}\n"
        text += "coefficients: " + " ".join(map(str, doc["chi"])) + "\n"
        if "conjecture" in doc:
            c = doc["conjecture"]
            text += f"conjecture: {c['predicted']} verdict={c['verdict']}\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    systems = None
    if args.systems:
        systems = [s.strip() for s in args.systems.split(",") if s.strip()]
        for s in systems:
            _system(s)
    try:
        report = run_verification(systems, args.scope, args.max_rank, args.max_m, args.time_budget)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = report.to_json() + "\n" if args.format == "json" else report.to_text()
    _emit(text, args.output)
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rootposets", description=__doc__.splitlines()[0])
    parser.add_argument("--seed-free", action="store_true", help="reserved; rejected if given")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", help="write to this file instead of stdout")

    e = sub.add_parser("enumerate", help="list antichains of a root poset")
    e.add_argument("system", help='system spec such as "C3" or "F4"')
    e.add_argument("--filter", choices=FILTERS, default="all")
    common(e)
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("charpoly", help="characteristic polynomial of an arrangement")
    c.add_argument("system")
    c.add_argument("kind", nargs="?", help="coxeter, cat, cat-s, shi or shi-s")
    c.add_argument("m", nargs="?", type=int)
    c.add_argument("--kind", dest="kind_opt")
    c.add_argument("--m", dest="m_opt", type=int)
    c.add_argument("--max-rank", type=int, default=5)
    c.add_argument("--max-m", type=int, default=6)
    common(c)
    c.set_defaults(func=cmd_charpoly)

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("--systems", help="comma-separated list, e.g. C2,G2")
    v.add_argument("--scope", default="all", choices=("all",) + tuple(SCOPES))
    v.add_argument("--max-rank", type=int, default=4)
    v.add_argument("--max-m", type=int, default=3)
    v.add_argument("--time-budget", type=float, help="seconds; remaining checks are skipped (exit 3)")
    common(v)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed_free:
        parser.error("--seed-free is reserved: nothing here uses randomness")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceGuardError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except EngineError as exc:
        print(f"engine error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
