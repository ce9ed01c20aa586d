"""Command line front end.

Exit codes: 0 success, 1 usage or validation error, 2 verification failure.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .lattice_path import enumerate_semimodules, lean_to_path, render
from .semigroup import SemigroupPair
from .semimodule import make_semimodule
from .verify import analyze, dumps, sweep_verify

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _gens(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="semimodules", description="Conductors, syzygies and duals of <alpha,beta>-semimodules.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="full report for one semimodule")
    a.add_argument("--alpha", type=int, required=True)
    a.add_argument("--beta", type=int, required=True)
    a.add_argument("--gens", type=_gens, required=True, help="generators, e.g. 0,9,11,8")
    a.add_argument("--json", action="store_true")

    e = sub.add_parser("enumerate", help="list every lean set of <alpha,beta>")
    e.add_argument("--alpha", type=int, required=True)
    e.add_argument("--beta", type=int, required=True)
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="check all identities over every semimodule of small semigroups")
    v.add_argument("--max-sum", type=int, required=True)
    v.add_argument("--json", action="store_true")

    r = sub.add_parser("render", help="draw the lattice path of a semimodule")
    r.add_argument("--alpha", type=int, required=True)
    r.add_argument("--beta", type=int, required=True)
    r.add_argument("--gens", type=_gens, required=True)
    r.add_argument("--format", choices=("ascii", "svg", "tikz"), default="ascii")
    r.add_argument("--out", type=Path)
    return p


def _emit(text: str, out: Path | None = None):
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def cmd_analyze(args) -> int:
    report = analyze(args.alpha, args.beta, args.gens)
    _emit(report.to_json() if args.json else report.to_text())
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_enumerate(args) -> int:
    S = SemigroupPair(args.alpha, args.beta)
    leans = list(enumerate_semimodules(S))
    if args.json:
        payload = {"semigroup": {"alpha": S.alpha, "beta": S.beta}, "count": len(leans)}
        if not args.count_only:
            payload["lean_sets"] = leans
        _emit(dumps(payload))
    elif args.count_only:
        _emit(f"{len(leans)}\n")
    else:
        _emit("".join("[" + ",".join(map(str, g)) + "]\n" for g in leans))
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = sweep_verify(args.max_sum)
    failed = any(r.violations for r in reports)
    if args.json:
        _emit(dumps({
            "max_sum": args.max_sum,
            "pairs": [r.to_dict() for r in reports],
            "semimodule_total": sum(r.semimodule_count for r in reports),
            "violation_total": sum(len(r.violations) for r in reports),
        }))
    else:
        lines = []
        for r in reports:
            status = "ok" if not r.violations else f"{len(r.violations)} violations"
            lines.append(f"<{r.alpha},{r.beta}>  {r.semimodule_count:5d} semimodules  {status}")
            for v in r.violations:
                lines.append(f"    {v['lean_set']}: {v['check']}")
        total = sum(r.semimodule_count for r in reports)
        lines.append(f"{len(reports)} semigroups, {total} semimodules, {'FAILED' if failed else 'all checks passed'}")
        _emit("\n".join(lines) + "\n")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_render(args) -> int:
    S = SemigroupPair(args.alpha, args.beta)
    D = make_semimodule(S, args.gens)
    _emit(render(S, lean_to_path(S, D.generators), args.format), args.out)
    return EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "enumerate": cmd_enumerate, "verify": cmd_verify, "render": cmd_render}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, TypeError) as exc:
        print(f"semimodules: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
