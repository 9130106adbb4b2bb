"""Command line front end.

Commands: lr, nl, decompose, detect, verify, render. Formats: plain (text
lines), json (one document per run, JSON lines for sweeps), ascii-diagram
(plain plus box diagrams). Exit codes: 0 success or detected; 1 not detected
(detect only); 2 usage, parse or precondition errors; 3 arithmetic overflow;
4 internal invariant failure.

Environment: TENSORCUBE_CACHE_CAP bounds the shared memo store;
TENSORCUBE_COLOR=1 turns on ANSI color for plain verdicts.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import detection
from .lr import lr_coefficient, lr_coefficient_memo
from .newell_littlewood import GroupSpec, nl_coefficient, nl_sum_support, tensor_decompose
from .oracle import lr_via_polynomials
from .partitions import parse, render
from .tableaux import SkewShape, ascii_diagram, enumerate_lr_tableaux, shape_diagram, tableau_json

EXIT_OK = 0
EXIT_NOT_DETECTED = 1
EXIT_USAGE = 2
EXIT_OVERFLOW = 3
EXIT_INTERNAL = 4


def _colorize(text: str, good: bool) -> str:
    if os.environ.get("TENSORCUBE_COLOR", "0") != "1":
        return text
    return f"\x1b[{'32' if good else '31'}m{text}\x1b[0m"


def _build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=("plain", "json", "ascii-diagram"),
                        default="plain", help="output format")
    shared.add_argument("--jobs", type=int, default=1,
                        help="parallel workers for sweeps")

    parser = argparse.ArgumentParser(
        prog="tensorcube",
        description="Exact tensor product combinatorics for the classical families")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", parents=[shared],
                       help="Littlewood-Richardson coefficient for three partitions")
    p.add_argument("lam", help="first lower partition, e.g. 3,2,1")
    p.add_argument("mu", help="second lower partition")
    p.add_argument("nu", help="upper partition")
    p.add_argument("--certificates", action="store_true",
                   help="also print every certifying tableau")
    p.add_argument("--backend", choices=("tableaux", "polynomials"),
                   default="tableaux", help=argparse.SUPPRESS)

    p = sub.add_parser("nl", parents=[shared],
                       help="Newell-Littlewood coefficient for three partitions")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--support", action="store_true",
                   help="list the contributing triangles with their factors")

    p = sub.add_parser("decompose", parents=[shared],
                       help="decompose a product of two irreducibles")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("--family", required=True, choices=("B", "C", "D"))
    p.add_argument("--rank", required=True, type=int)

    p = sub.add_parser("detect", parents=[shared],
                       help="cube-detection verdict for one weight")
    p.add_argument("lam")

    p = sub.add_parser("verify", parents=[shared],
                       help="exhaustive verification sweeps")
    p.add_argument("theorem", choices=("odd", "even"))
    p.add_argument("--max-size", type=int, required=True)

    p = sub.add_parser("render", parents=[shared],
                       help="draw a Young or skew diagram")
    p.add_argument("outer")
    p.add_argument("--inner", default="", help="inner shape to remove")
    return parser


def _cmd_lr(args) -> int:
    lam, mu, nu = parse(args.lam), parse(args.mu), parse(args.nu)
    if args.backend == "polynomials":
        value = lr_via_polynomials(lam, mu, nu)
    else:
        value = lr_coefficient(lam, mu, nu)
    certs = None
    if args.certificates:
        certs = enumerate_lr_tableaux(SkewShape(nu, lam), mu)
    if args.format == "json":
        doc = {"lambda": render(lam), "mu": render(mu), "nu": render(nu),
               "coefficient": value}
        if certs is not None:
            doc["certificates"] = [tableau_json(t) for t in certs]
        print(json.dumps(doc))
    else:
        print(value)
        if certs:
            for t in certs:
                print()
                print(ascii_diagram(t))
    return EXIT_OK


def _cmd_nl(args) -> int:
    lam, mu, nu = parse(args.lam), parse(args.mu), parse(args.nu)
    value = nl_coefficient(lam, mu, nu)
    support = nl_sum_support(lam, mu, nu) if args.support else None
    if args.format == "json":
        doc = {"lambda": render(lam), "mu": render(mu), "nu": render(nu),
               "coefficient": value}
        if support is not None:
            doc["support"] = [
                {"alpha": render(a), "beta": render(b), "gamma": render(g),
                 "factors": [lr_coefficient_memo(a, b, lam),
                             lr_coefficient_memo(a, g, mu),
                             lr_coefficient_memo(b, g, nu)]}
                for a, b, g in support]
        print(json.dumps(doc))
    else:
        print(value)
        if support is not None:
            for a, b, g in support:
                factors = (lr_coefficient_memo(a, b, lam),
                           lr_coefficient_memo(a, g, mu),
                           lr_coefficient_memo(b, g, nu))
                print(f"alpha={render(a)} beta={render(b)} gamma={render(g)} "
                      f"factors={factors[0]}*{factors[1]}*{factors[2]}")
    return EXIT_OK


def _cmd_decompose(args) -> int:
    lam, mu = parse(args.lam), parse(args.mu)
    result = tensor_decompose(lam, mu, GroupSpec(args.family, args.rank))
    if args.format == "json":
        print(json.dumps(result.to_json()))
    else:
        for nu, mult in result.terms.items():
            print(f"nu={render(nu)} mult={mult}")
        for nu, mult in result.inadmissible.items():
            print(f"inadmissible nu={render(nu)} mult={mult}")
        print(f"stable={'true' if result.stable else 'false'}")
    return EXIT_OK


def _cmd_detect(args) -> int:
    verdict = detection.detects(parse(args.lam))
    families = sorted(f.describe() for f in verdict.families)
    if args.format == "json":
        doc = {"lambda": render(verdict.weight), "size": verdict.weight.size,
               "families": families, "N": verdict.multiplicity,
               "detected": verdict.detected}
        if verdict.witness is not None:
            doc["witness"] = verdict.witness.to_json()
        print(json.dumps(doc))
    else:
        print(f"lambda={render(verdict.weight)}")
        print(f"size={verdict.weight.size}")
        print(f"families={','.join(families)}")
        print(f"N={verdict.multiplicity}")
        flag = "true" if verdict.detected else "false"
        print("detected=" + _colorize(flag, verdict.detected))
        if verdict.witness is not None:
            w = verdict.witness
            print(f"witness.alpha={render(w.alpha)}")
            print(f"witness.beta={render(w.beta)}")
            print(f"witness.gamma={render(w.gamma)}")
            print(f"witness.path={w.path}")
            if args.format == "ascii-diagram":
                for cert in w.certificates:
                    print()
                    print(ascii_diagram(cert))
    return EXIT_OK if verdict.detected else EXIT_NOT_DETECTED


def _cmd_verify(args) -> int:
    jobs = max(1, args.jobs)
    if args.theorem == "odd":
        report = detection.verify_odd_theorem(args.max_size, jobs=jobs)
    else:
        report = detection.verify_even_theorem(args.max_size, jobs=jobs)
    if args.format == "json":
        for entry in report.entries:
            print(json.dumps(entry))
        summary = {"theorem": report.theorem, "max_size": report.max_size,
                   "checked": report.checked, "failures": len(report.failures)}
        if report.theorem == "even":
            summary["family_tallies"] = report.family_tallies
        print(json.dumps({"summary": summary}))
    else:
        for entry in report.entries:
            status = "ok" if entry["ok"] else "FAIL"
            line = f"{status} lambda={entry['lambda']} size={entry['size']} N={entry['N']}"
            if entry.get("families"):
                line += f" families={','.join(entry['families'])}"
            print(line if entry["ok"] else _colorize(line, False))
        print(f"checked={report.checked} failures={len(report.failures)}")
        if report.theorem == "even":
            for kind, count in sorted(report.family_tallies.items()):
                print(f"tally {kind}={count}")
    return EXIT_OK if not report.failures else EXIT_INTERNAL


def _cmd_render(args) -> int:
    shape = SkewShape(parse(args.outer), parse(args.inner))
    if args.format == "json":
        print(json.dumps({"outer": render(shape.outer), "inner": render(shape.inner),
                          "boxes": shape.size}))
    else:
        print(shape_diagram(shape))
    return EXIT_OK


_HANDLERS = {
    "lr": _cmd_lr,
    "nl": _cmd_nl,
    "decompose": _cmd_decompose,
    "detect": _cmd_detect,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
