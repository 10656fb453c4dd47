"""Command-line interface.

Exit codes: 0 when the requested decision is true (or the command plainly
succeeded), 1 when a decision came out false (or a diff found mismatches),
2 on usage or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decider import decide_online_control
from .diff import run_diff
from .enumeration import EnumerationBounds
from .errors import SeqControlError
from .game import DEFAULT_GUARD, solve_forced_win
from .model import VARIANTS, mask_vote
from .qbf import QbfInstance, parse_formula, reduce_qbf
from .rules import winner_rule_for
from .serialize import load_instance_file, store_instance, store_instance_text

_TARGETS = {
    "ccac": "CCAC",
    "ccdc": "CCDC",
    "dcdc-nht": "DCDC-NHT",
    "dcdc-ht": "DCDC-HT",
    "dcac": "DCAC",
}


def _cmd_solve(args) -> int:
    instance = load_instance_file(args.infile)
    method = args.method
    if method == "auto":
        method = "poly" if instance.system == "plurality" else "oracle"
    if method == "poly":
        answer = decide_online_control(instance)
    else:
        answer = solve_forced_win(instance, guard=args.guard).forced_win
    print(json.dumps({"forced_win": answer, "method": method}))
    return 0 if answer else 1


def _cmd_winners(args) -> int:
    instance = load_instance_file(args.infile)
    standing = instance.standing()
    masked = tuple(mask_vote(v, standing) for v in instance.votes)
    winners = winner_rule_for(instance.system)(standing, masked)
    print(json.dumps({"standing": list(standing), "winners": sorted(winners)}))
    return 0


def _cmd_reduce(args) -> int:
    with open(args.qbf, "r", encoding="utf-8") as fh:
        text = fh.read().strip()
    instance = reduce_qbf(QbfInstance(parse_formula(text)), _TARGETS[args.target])
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(store_instance_text(instance))
    print(
        json.dumps(
            {
                "target": _TARGETS[args.target],
                "candidates": len(instance.candidates),
                "budget": instance.budget,
                "out": args.out,
            }
        )
    )
    return 0


def _cmd_diff(args) -> int:
    variants = tuple(VARIANTS)
    if args.variants:
        wanted = []
        for name in args.variants.split(","):
            name = name.strip().upper()
            if name not in VARIANTS:
                raise SeqControlError(f"unknown variant {name!r}")
            wanted.append(name)
        variants = tuple(wanted)
    bounds = EnumerationBounds(
        max_candidates=args.max_cands,
        max_voters=args.max_voters,
        variants=variants,
    )
    progress = None
    if args.progress:
        progress = lambda n: print(f"checked {n} instances...", file=sys.stderr)
    report = run_diff(bounds, guard=args.guard, progress=progress)
    print(json.dumps(report.to_dict(), indent=2))
    return 0 if report.ok else 1


def _cmd_serve(args) -> int:
    from .service import serve_sessions

    serve_sessions(args.port, host=args.host, hint_guard=args.guard)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqcontrol",
        description="Online candidate control in candidate-sequential elections",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide forced win for an instance document")
    p.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p.add_argument("--method", choices=("auto", "poly", "oracle"), default="auto")
    p.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("winners", help="winner set of the snapshot as it stands")
    p.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p.set_defaults(func=_cmd_winners)

    p = sub.add_parser("reduce", help="map a QBF matrix to a control instance")
    p.add_argument("--qbf", required=True, metavar="FILE")
    p.add_argument("--target", required=True, choices=sorted(_TARGETS))
    p.add_argument("--out", required=True, metavar="FILE")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("diff", help="differential sweep: deciders vs oracle")
    p.add_argument("--max-cands", type=int, required=True)
    p.add_argument("--max-voters", type=int, required=True)
    p.add_argument("--variants", default="", help="comma-separated, default all")
    p.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=_cmd_diff)

    p = sub.add_parser("serve", help="run the interactive session service")
    p.add_argument("--port", type=int, required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--guard", type=int, default=10**7)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SeqControlError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
