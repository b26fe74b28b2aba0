"""Command-line entry point: ``qclift <command> ...``.

Exit codes: 0 success, 1 validation failure or I/O error, 2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import sys
from dataclasses import dataclass

from . import __version__
from .cycles import DEFAULT_MAX_LEN, census, graph_girth_oracle
from .exponent import (
    ExponentFormatError,
    expand,
    format_exponent_matrix,
    parse_exponent_matrix,
    write_alist,
)
from .lifting import LiftMethod, LiftSpec, lift
from .search import build_schedule
from .verify import CLAIMS, run_claim


@dataclass(frozen=True)
class CommandOutcome:
    exit_code: int
    report: str
    kv: str = ""
    error: str = ""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _even_len(text: str) -> int:
    v = int(text)
    if v < 4 or v % 2:
        raise argparse.ArgumentTypeError(f"must be an even integer >= 4, got {v}")
    return v


def _targets(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qclift", description="Lift QC-LDPC exponent matrices to smaller circulant sizes.")
    parser.add_argument("--version", action="version", version=f"qclift {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_matrix(p):
        p.add_argument("matrix", help="exponent matrix file ('-' for standard input)")

    def with_format(p):
        p.add_argument("--format", choices=["text", "kv"], default="text")

    def with_len(p):
        p.add_argument("--max-cycle-len", type=_even_len, default=DEFAULT_MAX_LEN,
                       help="longest closed walk inspected (default %(default)s)")

    p = sub.add_parser("expand", help="write the binary parity-check matrix in alist format")
    with_matrix(p)
    p.add_argument("-o", "--output", help="output file (default: standard output)")

    p = sub.add_parser("girth", help="girth and number of shortest cycles")
    with_matrix(p)
    with_len(p)
    with_format(p)
    p.add_argument("--oracle", action="store_true",
                   help="also compute the girth by BFS on the expanded matrix")

    p = sub.add_parser("cycles", help="per-length census of exponent chains")
    with_matrix(p)
    with_len(p)
    with_format(p)

    p = sub.add_parser("lift", help="lift to a smaller circulant size")
    with_matrix(p)
    p.add_argument("--method", required=True, choices=["floor", "modulo", "fsm"])
    p.add_argument("--target", required=True, type=int)
    p.add_argument("--scale", type=int)

    p = sub.add_parser("search", help="best scale value per target circulant size")
    with_matrix(p)
    p.add_argument("--targets", required=True, type=_targets)
    with_len(p)
    p.add_argument("--candidates", choices=["units", "all"], default="units")
    p.add_argument("--threads", type=int, default=1)
    with_format(p)

    p = sub.add_parser("verify", help="check the probabilistic statements exactly")
    p.add_argument("--claim", required=True, choices=[*CLAIMS, "all"])
    p.add_argument("--q", type=int)
    p.add_argument("--nr", type=int)
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--threads", type=int, default=1, help="accepted for symmetry; claims run serially")
    return parser


def _read_matrix(path: str):
    if path == "-":
        return parse_exponent_matrix(sys.stdin.read())
    with open(path, encoding="ascii") as fh:
        return parse_exponent_matrix(fh.read())


def _cmd_expand(args) -> CommandOutcome:
    text = write_alist(expand(_read_matrix(args.matrix)))
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
        return CommandOutcome(0, "")
    return CommandOutcome(0, text)


def _cmd_girth(args) -> CommandOutcome:
    E = _read_matrix(args.matrix)
    c = census(E, args.max_cycle_len, stop_at_girth=True)
    kv = [f"girth={c.girth_label}", f"cycles={c.count_at_girth}", f"max_cycle_len={c.max_len}"]
    report = [f"girth {c.girth_label}, {c.count_at_girth} shortest cycles (block level)"]
    code = 0
    if args.oracle:
        g = graph_girth_oracle(expand(E), args.max_cycle_len)
        label = str(g) if g is not None else f">={args.max_cycle_len + 2}"
        kv.append(f"bfs_girth={label}")
        report.append(f"BFS girth of expanded matrix: {label}")
        if g != c.girth:
            code = 1
            report.append("MISMATCH between chain census and BFS")
    return CommandOutcome(code, "\n".join(report) + "\n", " ".join(kv) + "\n")


def _cmd_cycles(args) -> CommandOutcome:
    E = _read_matrix(args.matrix)
    c = census(E, args.max_cycle_len)
    rows = [f"{'length':>6}  {'chains':>10}  {'cycles':>10}"]
    rows += [f"{n:>6}  {c.totals[n]:>10}  {c.cycles[n]:>10}" for n in c.lengths]
    rows.append(f"girth {c.girth_label}")
    kv = [f"length={n} chains={c.totals[n]} cycles={c.cycles[n]}" for n in c.lengths]
    kv.append(f"girth={c.girth_label} cycles_at_girth={c.count_at_girth}")
    return CommandOutcome(0, "\n".join(rows) + "\n", "\n".join(kv) + "\n")


def _cmd_lift(args) -> CommandOutcome:
    if args.scale is not None and args.method != "fsm":
        raise UsageError(f"--scale only applies to --method fsm, not {args.method}")
    spec = LiftSpec(LiftMethod.parse(args.method), args.target, args.scale or 1)
    return CommandOutcome(0, format_exponent_matrix(lift(_read_matrix(args.matrix), spec)))


def _cmd_search(args) -> CommandOutcome:
    if args.threads < 1:
        raise UsageError("--threads must be >= 1")
    E = _read_matrix(args.matrix)
    schedule = build_schedule(E, args.targets, args.max_cycle_len, candidates=args.candidates,
                              base_id=args.matrix, workers=args.threads)
    return CommandOutcome(0, schedule.to_text(), schedule.to_kv())


def _cmd_verify(args) -> CommandOutcome:
    results = run_claim(args.claim, q=args.q, nr=args.nr, x=args.x, y=args.y,
                        trials=args.trials, seed=args.seed)
    text = "\n".join(r.line() for r in results) + "\n"
    return CommandOutcome(0 if all(r.passed for r in results) else 1, text)


_COMMANDS = {
    "expand": _cmd_expand,
    "girth": _cmd_girth,
    "cycles": _cmd_cycles,
    "lift": _cmd_lift,
    "search": _cmd_search,
    "verify": _cmd_verify,
}


def run(argv: list[str]) -> CommandOutcome:
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(io.StringIO()) as captured:
            try:
                args = parser.parse_args(argv)
            except SystemExit as exc:  # --help / --version
                return CommandOutcome(int(exc.code or 0), captured.getvalue())
        outcome = _COMMANDS[args.command](args)
    except UsageError as exc:
        return CommandOutcome(2, "", error=f"{parser.format_usage()}qclift: error: {exc}\n")
    except (OSError, ExponentFormatError, ValueError, KeyError) as exc:
        return CommandOutcome(1, "", error=f"qclift: error: {exc}\n")
    if getattr(args, "format", "text") == "kv" and outcome.kv:
        return CommandOutcome(outcome.exit_code, outcome.kv, outcome.kv, outcome.error)
    return outcome


def main(argv: list[str] | None = None) -> int:
    outcome = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(outcome.report)
    sys.stderr.write(outcome.error)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
