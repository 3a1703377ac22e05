"""Command-line interface.

Exit codes: 0 on success (and all replay items passing), 1 when a
replay item or sweep finds a mismatch, 2 on usage or domain errors.
"""

import argparse
import json
import sys

from .factoring import (
    BUDGET_EXHAUSTED,
    CANDIDATE_HIT,
    CANDIDATE_MISS,
    COFACTOR_PRIME,
    PROPAGATED,
    factor_mersenne,
)
from .forms import euler_refined_class, generalized_class
from .kernel import isqrt
from .mersenne import divisibility_conjecture_check, flt_check, order
from .perfect import MERSENNE_PRIME, IMPOSTER, frenicle_scan
from .primes import primes_in_classes, primes_up_to
from .replay import (
    SCENARIOS,
    factorization_to_dict,
    format_factorization,
    render_report,
    replay_all,
    report_to_dict,
)


def _parse_bases(text):
    try:
        bases = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad base list: {text!r}")
    if not bases:
        raise argparse.ArgumentTypeError("base list is empty")
    return bases


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fermatkit",
        description="Mersenne-number toolkit: orders, divisor forms, "
        "restricted trial factoring, perfect numbers, and historical "
        "replays.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="factor 2**n - 1 with a trace")
    p.add_argument("n", type=int)
    p.add_argument("--budget", type=int, default=None,
                   help="largest candidate value to trial-divide")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--refined", dest="refined", action="store_true",
                       default=True)
    group.add_argument("--unrefined", dest="refined", action="store_false")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("order", help="multiplicative order of a base mod m")
    p.add_argument("m", type=int)
    p.add_argument("--base", type=int, default=2)

    p = sub.add_parser(
        "verify-flt",
        help="power-residue and order-divisibility sweep over primes",
    )
    p.add_argument("--max-p", type=int, required=True)
    p.add_argument("--bases", type=_parse_bases,
                   default=list(range(2, 51)))

    p = sub.add_parser("candidates",
                       help="candidate divisor primes for 2**q - 1")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--refined", action="store_true")

    p = sub.add_parser("perfect", help="scan for a large perfect number")
    p.add_argument("--min-digits", type=int, default=20)
    p.add_argument("--max-exponent", type=int, default=37)

    p = sub.add_parser("replay", help="historical reproductions")
    p.add_argument("scenario", choices=sorted(SCENARIOS) + ["all"])
    p.add_argument("--json", action="store_true")

    return parser


def _trace_line(step):
    if step.rule == PROPAGATED:
        return (f"inherited {step.value} from exponent {step.source} "
                f"(multiplicity {step.multiplicity})")
    if step.rule == CANDIDATE_MISS:
        return f"tried {step.value}: miss"
    if step.rule == CANDIDATE_HIT:
        return f"tried {step.value}: hit (multiplicity {step.multiplicity})"
    if step.rule == COFACTOR_PRIME:
        return f"cofactor {step.value} is prime (candidates exhausted)"
    if step.rule == BUDGET_EXHAUSTED:
        return f"scan stopped at budget {step.value}"
    return f"{step.rule} {step.value}"


def _cmd_factor(args):
    fact, trace = factor_mersenne(args.n, args.budget, args.refined)
    if args.json:
        doc = {
            "exponent": str(args.n),
            "factorization": factorization_to_dict(fact),
            "trace": [
                {
                    "rule": step.rule,
                    "value": str(step.value),
                    "source": None if step.source is None else str(step.source),
                    "multiplicity": str(step.multiplicity),
                }
                for step in trace.steps
            ],
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"M{args.n} = {fact.value} = {format_factorization(fact)}")
        print(f"status: {fact.status}")
        for step in trace.steps:
            print(f"  {_trace_line(step)}")
    return 0


def _cmd_order(args):
    record = order(args.base, args.m)
    print(f"order of {record.base} mod {record.modulus} = {record.order}")
    return 0


def _cmd_verify_flt(args):
    failures = 0
    checked = 0
    for p in primes_up_to(args.max_p):
        for a in args.bases:
            if a % p == 0:
                continue
            checked += 1
            if not flt_check(p, a):
                failures += 1
                print(f"counterexample: p={p} a={a}")
        if p > 2:
            k, holds = divisibility_conjecture_check(p)
            checked += 1
            if not holds:
                failures += 1
                print(f"counterexample: order {k} of 2 mod {p} "
                      f"does not divide {p - 1}")
    print(f"{checked} checks, {failures} counterexamples")
    return 1 if failures else 0


def _cmd_candidates(args):
    q = args.q
    cls = euler_refined_class(q) if args.refined else generalized_class(q)
    limit = args.limit if args.limit is not None else isqrt((1 << q) - 1)
    found = primes_in_classes(limit, cls)
    residues = ", ".join(str(r) for r in sorted(cls.residues))
    print(f"class for M{q}: residues {residues} mod {cls.modulus}")
    print(f"{len(found)} candidate primes up to {limit}")
    for c in found:
        print(c)
    return 0


def _cmd_perfect(args):
    report = frenicle_scan(args.min_digits, args.max_exponent)
    for entry in report.examined:
        if entry.verdict == MERSENNE_PRIME:
            detail = f"perfect number has {entry.digits} digits"
        elif entry.verdict == IMPOSTER:
            detail = f"witness factor {entry.witness}"
        else:
            detail = "scan budget exhausted"
        print(f"exponent {entry.exponent}: {entry.verdict} ({detail})")
    if report.outcome is None:
        print(f"no perfect number with at least {report.min_digits} digits")
    else:
        out = report.outcome
        print(f"found: {out.perfect_number} ({out.digits} digits, "
              f"exponent {out.exponent})")
    return 0


def _cmd_replay(args):
    if args.scenario == "all":
        reports = replay_all()
    else:
        reports = [SCENARIOS[args.scenario]()]
    if args.json:
        docs = [report_to_dict(r) for r in reports]
        print(json.dumps(docs[0] if len(docs) == 1 else docs, indent=2))
    else:
        for report in reports:
            print(render_report(report))
    return 0 if all(r.overall for r in reports) else 1


_COMMANDS = {
    "factor": _cmd_factor,
    "order": _cmd_order,
    "verify-flt": _cmd_verify_flt,
    "candidates": _cmd_candidates,
    "perfect": _cmd_perfect,
    "replay": _cmd_replay,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
