"""``nichekit`` command line.

Exit codes: 0 success / YES / PASS, 1 NO, 2 UNKNOWN, 3 input error, 4 FAIL.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from typing import Optional, Sequence

from . import verify
from .enumeration import (
    DEFAULT_ORIENTATION_GUARD,
    DEFAULT_REALIZE_GUARD,
    num_cross_pairs,
    orientations,
    partitions,
)
from .formats import (
    FormatError,
    format_graph,
    format_tournament,
    graph_to_json,
    read_graph,
    read_tournament,
    to_dot,
)
from .graph_core import GraphError
from .niche import niche_graph
from .properties import GuardExceeded
from .realizability import Answer, decide

EXIT_OK, EXIT_NO, EXIT_UNKNOWN, EXIT_INPUT, EXIT_FAIL = 0, 1, 2, 3, 4
GUARD_ENV = "NICHEKIT_GUARD"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _parts(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(s) for s in text.split(",") if s.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated sizes, got {text!r}") from None
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise argparse.ArgumentTypeError("need at least two positive part sizes")
    return parts


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def default_guard() -> int:
    raw = os.environ.get(GUARD_ENV)
    if raw is None:
        return DEFAULT_REALIZE_GUARD
    try:
        return int(raw)
    except ValueError:
        raise FormatError(f"{GUARD_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="nichekit", description="Niche graphs of multipartite tournaments.")
    sub = ap.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("niche", help="niche graph of a tournament file")
    p.add_argument("file")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")

    p = sub.add_parser("realize", help="decide niche-realizability of (G, k)")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--guard", type=int, default=None, help=f"brute-force vertex limit (env {GUARD_ENV})")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("enumerate", help="all orientations of K_{parts}")
    p.add_argument("--parts", type=_parts, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--max-m", type=int, default=DEFAULT_ORIENTATION_GUARD)

    p = sub.add_parser("spectrum", help="canonical niche graphs with multiplicities")
    p.add_argument("--parts", type=_parts)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--max-m", type=int, default=DEFAULT_ORIENTATION_GUARD)

    p = sub.add_parser("verify", help="exhaustively re-check a theorem")
    p.add_argument("theorem", choices=list(verify.THEOREM_IDS) + ["all"])
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--threads", type=int, default=1)
    return ap


def _cmd_niche(args, out) -> int:
    G = niche_graph(read_tournament(_read(args.file)))
    if args.dot:
        out.write(to_dot(G))
    elif args.json:
        out.write(json.dumps(graph_to_json(G)) + "\n")
    else:
        out.write(format_graph(G))
    return EXIT_OK


def _cmd_realize(args, out) -> int:
    G = read_graph(_read(args.file))
    if args.k < 3:
        raise FormatError(f"--k must be at least 3, got {args.k}")
    guard = args.guard if args.guard is not None else default_guard()
    v = decide(G, args.k, guard=guard)
    if args.json:
        out.write(json.dumps(v.to_json()) + "\n")
    else:
        out.write(v.summary() + "\n")
        if v.witness is not None:
            out.write(format_tournament(v.witness))
    return {Answer.YES: EXIT_OK, Answer.NO: EXIT_NO, Answer.UNKNOWN: EXIT_UNKNOWN}[v.answer]


def _cmd_enumerate(args, out) -> int:
    m = num_cross_pairs(args.parts)
    if m > args.max_m:
        raise GuardExceeded(f"m = {m} cross pairs exceeds --max-m {args.max_m}")
    if args.count_only:
        out.write(f"{1 << m}\n")
        return EXIT_OK
    for i, D in enumerate(orientations(args.parts, guard=args.max_m)):
        if i:
            out.write("\n")
        out.write(f"# index {i}\n")
        out.write(format_tournament(D))
    return EXIT_OK


def _cmd_spectrum(args, out) -> int:
    from .enumeration import niche_spectrum

    if args.parts is not None:
        if args.n is not None or args.k is not None:
            raise FormatError("use either --parts or --n/--k")
        parts_list = [args.parts]
    elif args.n is not None and args.k is not None:
        if not 2 <= args.k <= args.n:
            raise FormatError("need 2 <= k <= n")
        parts_list = partitions(args.n, args.k)
    else:
        raise FormatError("spectrum needs --parts or both --n and --k")
    total: Counter = Counter()
    for p in parts_list:
        total.update(niche_spectrum(p, converse_reduce=True, guard=args.max_m))
    for form in sorted(total):
        out.write(f"{total[form]}\t{form}\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    if args.max_n < 3:
        raise FormatError("--max-n must be at least 3")
    if args.max_n > 11:
        raise GuardExceeded("--max-n above 11 is out of reach for exhaustive sweeps")
    ok = True
    for res in verify.run(args.theorem, args.max_n, max(1, args.threads)):
        out.write(res.line() + "\n")
        for ce in res.counterexamples:
            out.write(f"    counterexample: {ce}\n")
        out.flush()
        ok &= res.passed
    return EXIT_OK if ok else EXIT_FAIL


_COMMANDS = {
    "niche": _cmd_niche,
    "realize": _cmd_realize,
    "enumerate": _cmd_enumerate,
    "spectrum": _cmd_spectrum,
    "verify": _cmd_verify,
}


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.verb](args, out)
    except (FormatError, GraphError, GuardExceeded, OSError) as exc:
        print(f"nichekit {args.verb}: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
