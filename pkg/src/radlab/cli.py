"""Command-line interface.

Subcommands: order, radical, member, verify. Groups are given either as a
path to a group definition JSON file or as a catalog name (S5, PSL2_7,
PSU3_3, ...). Reports are written to --out when given; human-readable
summaries always go to stdout and timings never enter report files.

Exit codes: 0 all checks verified, 1 counterexample found, 2 usage or parse
error, 3 out-of-desk-scale or capped.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import catalog
from .arith import factorize
from .criteria import (
    DEFAULT_PAIR_CAP,
    METHOD_B1,
    METHOD_COMBINED,
    METHOD_ODD_P,
    METHOD_TWO_ELEMENT,
    member_b1,
    member_combined,
    member_oddp,
    member_two_element,
)
from .errors import CapExceededError, RadlabError
from .group import DEFAULT_CLASS_CAP, DEFAULT_ENUMERATION_CAP, PermutationGroup
from .perm import Perm, format_cycles, parse_cycles
from .structure import solvable_radical
from .verify import (
    STATUS_CAPPED,
    STATUS_COUNTEREXAMPLE,
    STATUS_OUT_OF_SCALE,
    STATUS_VERIFIED,
    CheckResult,
    VerificationReport,
    reports_to_json,
    verify_corpus,
    verify_cvl,
    verify_equivalence,
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_SCALE = 3


@dataclass
class RunConfig:
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    class_cap: int = DEFAULT_CLASS_CAP
    pair_cap: int = DEFAULT_PAIR_CAP
    workers: int = 1
    output_path: str | None = None
    seed: int = 0  # consumed only by sampled property tests, never by verifications


_METHODS = {
    "b1": METHOD_B1,
    "oddp": METHOD_ODD_P,
    "odd-p": METHOD_ODD_P,
    "two-element": METHOD_TWO_ELEMENT,
    "two": METHOD_TWO_ELEMENT,
    "combined": METHOD_COMBINED,
}

_MEMBER_FNS = {
    METHOD_B1: member_b1,
    METHOD_ODD_P: member_oddp,
    METHOD_TWO_ELEMENT: member_two_element,
    METHOD_COMBINED: member_combined,
}


def _load_target(target: str) -> PermutationGroup:
    path = Path(target)
    if path.exists():
        return catalog.load_group_file(path).group
    if target in catalog.known_names():
        return catalog.build_named(target)
    raise RadlabError(
        f"{target!r} is neither a group file nor a known catalog name"
    )


def _write_reports(cfg: RunConfig, reports: list) -> None:
    if cfg.output_path:
        Path(cfg.output_path).write_text(reports_to_json(reports), encoding="utf-8")


def _exit_for(reports: list) -> int:
    statuses = {r.status for r in reports}
    if STATUS_COUNTEREXAMPLE in statuses:
        return EXIT_COUNTEREXAMPLE
    if STATUS_OUT_OF_SCALE in statuses or STATUS_CAPPED in statuses:
        return EXIT_SCALE
    return EXIT_OK


def _cmd_order(args, cfg: RunConfig) -> int:
    g = _load_target(args.group)
    print(f"{g.name or args.group}: order {g.order}, degree {g.degree}, "
          f"base length {len(g.base)}")
    return EXIT_OK


def _cmd_radical(args, cfg: RunConfig) -> int:
    g = _load_target(args.group)
    name = g.name or args.group
    method = _METHODS[args.method] if args.method != "oracle" else "oracle"
    t0 = time.perf_counter()
    if method == "oracle":
        rad = solvable_radical(g, cap=cfg.enumeration_cap, class_cap=cfg.class_cap)
        checks = []
    else:
        fn = _MEMBER_FNS[method]
        member_reps = []
        checks = []
        for cls in g.class_representatives(cap=cfg.enumeration_cap, class_cap=cfg.class_cap):
            x = cls.representative
            if method == METHOD_TWO_ELEMENT:
                pairs = factorize(x.order()).pairs
                if not (len(pairs) == 1 and pairs[0][0] != 2):
                    continue
            v = fn(g, x, cfg.pair_cap, cfg.enumeration_cap)
            checks.append(CheckResult(format_cycles(x.t, g.degree), x.order(),
                                      cls.size, v.member, v.witness, True))
            if v.member:
                member_reps.append(x)
        rad = g.normal_closure(member_reps) if member_reps else g.subgroup([])
    elapsed = int((time.perf_counter() - t0) * 1000)
    gens = ", ".join(format_cycles(p.t, g.degree) for p in rad.generators) or "()"
    print(f"{name}: radical order {rad.order} ({elapsed} ms)")
    print(f"generators: {gens}")
    if checks or method != "oracle":
        report = VerificationReport(name, "method", method, STATUS_VERIFIED)
        report.checks = sorted(checks, key=lambda c: (c.x_order, c.x_text))
        report.elapsed_ms = elapsed
        _write_reports(cfg, [report])
    return EXIT_OK


def _cmd_member(args, cfg: RunConfig) -> int:
    g = _load_target(args.group)
    name = g.name or args.group
    x = Perm(g.degree, parse_cycles(args.element, g.degree))
    method = _METHODS[args.method]
    v = _MEMBER_FNS[method](g, x, cfg.pair_cap, cfg.enumeration_cap)
    _, size = g.conjugacy_class_tables(x.t, class_cap=cfg.class_cap)
    if v.member:
        print(f"{args.element} is in the solvable radical of {name} "
              f"({method}, {v.pairs_tested} pairs tested)")
    else:
        w = v.witness
        print(f"{args.element} is NOT in the solvable radical of {name} ({method})")
        print(f"witness: x = {format_cycles(w.x.t, g.degree)}, "
              f"y = {format_cycles(w.y.t, g.degree)}, p = {w.prime}, "
              f"|<x,y>| = {w.subgroup_order}")
    report = VerificationReport(name, "method", method, STATUS_VERIFIED)
    report.checks = [CheckResult(format_cycles(x.t, g.degree), x.order(), size,
                                 v.member, v.witness, True)]
    _write_reports(cfg, [report])
    return EXIT_OK


def _cmd_verify(args, cfg: RunConfig) -> int:
    kw = dict(cap=cfg.enumeration_cap, class_cap=cfg.class_cap,
              pair_cap=cfg.pair_cap, workers=cfg.workers)
    if args.target == "corpus":
        reports = verify_corpus(**kw)
    elif args.target == "equivalence":
        if not args.name:
            print("verify equivalence needs a group file or name", file=sys.stderr)
            return EXIT_USAGE
        g = _load_target(args.name)
        reports = [verify_equivalence(g, g.name or args.name, **kw)]
    elif args.target == "cvl":
        if not args.name:
            print("verify cvl needs a group name, 'runnable', or 'all'", file=sys.stderr)
            return EXIT_USAGE
        reports = []
        if args.name in ("all", "runnable"):
            for ln, lst in sorted(catalog.CVL_LISTS.items()):
                for e in lst.entries:
                    if args.name == "runnable" and not (
                        e.runnable and e.aut_order is not None
                        and e.aut_order <= cfg.enumeration_cap
                    ):
                        continue
                    reports.append(verify_cvl(e.socle, ln, **kw))
        else:
            lists = [args.list] if args.list else catalog.cvl_lists_for(args.name)
            if not lists:
                print(f"{args.name!r} is not on any list", file=sys.stderr)
                return EXIT_USAGE
            for ln in lists:
                reports.append(verify_cvl(args.name, ln, **kw))
    else:
        print(f"unknown verify target {args.target!r}", file=sys.stderr)
        return EXIT_USAGE
    for r in reports:
        label = f"{r.group} [{r.kind}]"
        print(f"{label}: {r.status} ({len(r.checks)} checks, {r.elapsed_ms} ms)")
    _write_reports(cfg, reports)
    return _exit_for(reports)


def build_parser() -> argparse.ArgumentParser:
    # shared flags use SUPPRESS so a subcommand parse never clobbers a value
    # given before the subcommand; defaults are applied in main
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                        help="largest group order that will be enumerated "
                             f"(default {DEFAULT_ENUMERATION_CAP})")
    common.add_argument("--class-cap", type=int, default=argparse.SUPPRESS,
                        help="largest conjugacy class that will be materialized "
                             f"(default {DEFAULT_CLASS_CAP})")
    common.add_argument("--pair-cap", type=int, default=argparse.SUPPRESS,
                        help="solvability tests allowed per run "
                             f"(default {DEFAULT_PAIR_CAP})")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS,
                        help="worker processes for per-representative checks")
    common.add_argument("--out", default=argparse.SUPPRESS,
                        help="write the JSON report here")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for sampled property tests (verifications "
                             "are exhaustive and take no randomness)")

    ap = argparse.ArgumentParser(
        prog="radlab",
        description="Solvable-radical membership criteria, verification "
                    "harnesses, and a catalog of named permutation groups.",
        parents=[common],
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", parents=[common],
                       help="print order, degree, and base length")
    p.add_argument("group", help="group file or catalog name")

    p = sub.add_parser("radical", parents=[common],
                       help="compute the solvable radical")
    p.add_argument("group")
    p.add_argument("--method", default="oracle",
                   choices=["oracle", "b1", "oddp", "odd-p", "combined", "two-element", "two"])

    p = sub.add_parser("member", parents=[common],
                       help="decide membership in the solvable radical")
    p.add_argument("group")
    p.add_argument("element", help="element in cycle notation, e.g. '(1 2 3)'")
    p.add_argument("--method", default="combined",
                   choices=["b1", "oddp", "odd-p", "combined", "two-element", "two"])

    p = sub.add_parser("verify", parents=[common],
                       help="run a verification harness")
    p.add_argument("target", choices=["equivalence", "cvl", "corpus"])
    p.add_argument("name", nargs="?", default=None,
                   help="group file/name (equivalence) or list member name, "
                        "'runnable', or 'all' (cvl)")
    p.add_argument("--list", default=None, choices=["CVL1", "CVL2", "CVL3"],
                   help="restrict a cvl check to one list")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    cfg = RunConfig(
        enumeration_cap=getattr(args, "cap", DEFAULT_ENUMERATION_CAP),
        class_cap=getattr(args, "class_cap", DEFAULT_CLASS_CAP),
        pair_cap=getattr(args, "pair_cap", DEFAULT_PAIR_CAP),
        workers=getattr(args, "workers", 1),
        output_path=getattr(args, "out", None),
        seed=getattr(args, "seed", 0),
    )
    handler = {
        "order": _cmd_order,
        "radical": _cmd_radical,
        "member": _cmd_member,
        "verify": _cmd_verify,
    }[args.command]
    try:
        return handler(args, cfg)
    except CapExceededError as e:
        print(f"cap exceeded: {e}", file=sys.stderr)
        return EXIT_SCALE
    except (RadlabError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
