"""Command-line interface.

Exit codes: 0 on success, 1 when no committee satisfies the request
(infeasible / not found), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .constraints import is_dire, resolve_population_committees, solve_drcwd
from .core import validate_election
from .envyfree import Scope, check_envyfree, find_envyfree_dire
from .experiments import (ExperimentConfig, detect_simpsons, make_notion,
                          run_experiment)
from .fileio import (ParseError, experiment_rows_to_csv, format_fraction,
                     parse_election, serialize_election)
from .manipulation import any_population_can_manipulate, manipulate_drcwd
from .rules import Rule
from .synthgen import GenConfig, default_constraints, generate_election


def _committee_text(members, score) -> str:
    return "{" + ",".join(f"c{c}" for c in sorted(members)) + f"}} score {score}"


def _load(path, k_override=None):
    try:
        with open(path, encoding="utf-8") as handle:
            election, cs, meta = parse_election(handle.read())
    except OSError as exc:
        raise SystemExit2(f"cannot read {path}: {exc}")
    except (ParseError, ValueError) as exc:
        raise SystemExit2(str(exc))
    k = k_override if k_override is not None else meta.get("k")
    if k is None:
        raise SystemExit2("no committee size: set k in [meta] or pass --k")
    return election, cs, k


class SystemExit2(Exception):
    """Usage/input error; maps to exit code 2."""


def _emit(args, text_payload, json_payload):
    out = json.dumps(json_payload, indent=2) if args.format == "json" else text_payload
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(out if out.endswith("\n") else out + "\n")
    else:
        print(out)


def _parse_bound(notion_kind, text):
    if notion_kind in ("fec", "uec"):
        return int(text)
    return Fraction(text)


def _report_json(report):
    return {
        "overall": report.overall,
        "proportion_envious": str(report.proportion_envious),
        "pairs": [
            {"a": "/".join(p.a), "b": "/".join(p.b),
             "measure": str(p.measure), "satisfied": p.satisfied}
            for p in report.pairs
        ],
    }


def cmd_solve(args):
    election, cs, k = _load(args.election, args.k)
    rule = Rule.parse(args.rule)
    cs = resolve_population_committees(election, cs, rule, k)
    committee = solve_drcwd(election, cs, rule, k)
    if committee is None:
        print("no committee satisfies the constraints", file=sys.stderr)
        return 1
    _emit(args, _committee_text(committee.members, committee.score),
          {"members": committee.sorted_members, "score": committee.score})
    return 0


def cmd_check(args):
    election, cs, k = _load(args.election, args.k)
    rule = Rule.parse(args.rule)
    cs = resolve_population_committees(election, cs, rule, k)
    try:
        members = frozenset(int(c) for c in args.committee.split(","))
    except ValueError:
        raise SystemExit2(f"bad committee list {args.committee!r}")
    if len(members) != k:
        raise SystemExit2(f"committee must have {k} distinct members")
    feasible, violations = is_dire(election, members, cs)
    notion = make_notion(args.notion, _parse_bound(args.notion, args.bound))
    report = check_envyfree(election, cs, members, notion, Scope.parse(args.scope), rule, k)
    lines = [f"constraints: {'satisfied' if feasible else 'violated'}"]
    lines.extend(f"  {v}" for v in violations)
    lines.append(f"{args.notion}({args.bound}) {args.scope}: "
                 f"{'satisfied' if report.overall else 'violated'}")
    for p in report.pairs:
        lines.append(f"  {'/'.join(p.a)} vs {'/'.join(p.b)}: measure {p.measure} "
                     f"{'ok' if p.satisfied else 'ENVY'}")
    lines.append(f"proportion envious: {format_fraction(report.proportion_envious)}")
    _emit(args, "\n".join(lines),
          {"dire": feasible, "violations": violations, "envy": _report_json(report)})
    return 0 if feasible and report.overall else 1


def cmd_fair(args):
    election, cs, k = _load(args.election, args.k)
    rule = Rule.parse(args.rule)
    cs = resolve_population_committees(election, cs, rule, k)
    notion = make_notion(args.notion, _parse_bound(args.notion, args.bound))
    committee = find_envyfree_dire(election, cs, rule, k, notion, Scope.parse(args.scope))
    if committee is None:
        print(f"no committee satisfies {args.notion.upper()}({args.bound})", file=sys.stderr)
        return 1
    _emit(args, _committee_text(committee.members, committee.score),
          {"members": committee.sorted_members, "score": committee.score})
    return 0


def cmd_manipulate(args):
    election, cs, k = _load(args.election, args.k)
    rule = Rule.parse(args.rule)
    if args.any:
        outcome = any_population_can_manipulate(election, cs, rule, k)
    else:
        manipulator = None
        if args.manipulator:
            attr, sep, label = args.manipulator.partition("/")
            if not sep:
                raise SystemExit2("manipulator must be attr/label")
            manipulator = (attr, label)
        outcome = manipulate_drcwd(election, cs, rule, k, manipulator)
    if not outcome.found:
        print("no successful manipulation found", file=sys.stderr)
        return 1
    a, b = outcome.swap
    text = (f"population {'/'.join(outcome.manipulator)} can manipulate by "
            f"swapping c{a} and c{b}\nharmed: " + ", ".join(outcome.harmed))
    _emit(args, text, {
        "manipulator": "/".join(outcome.manipulator),
        "swap": [a, b],
        "harmed": list(outcome.harmed),
        "original_winner": sorted(outcome.original_winner or ()),
        "manipulated_winner": sorted(outcome.manipulated_winner or ()),
    })
    return 0


def cmd_generate(args):
    if args.k is None:
        raise SystemExit2("generate requires --k")
    cfg = GenConfig(args.candidates, args.voters, args.k,
                    candidate_attribute_count=args.mu,
                    voter_attribute_count=args.pi,
                    phi=args.phi, seed=args.seed)
    election = generate_election(cfg)
    cs = default_constraints(election, args.k, Rule.parse(args.rule))
    text = serialize_election(election, cs, args.k)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        print(text, end="")
    return 0


def cmd_experiment(args):
    if args.k is None:
        raise SystemExit2("experiment requires --k")
    values = []
    for chunk in args.values.split(","):
        chunk = chunk.strip()
        if args.sweep == "phi":
            values.append(float(chunk))
        elif args.sweep == "pi":
            values.append(int(chunk))
        else:
            values.append(_parse_bound(args.notion, chunk))
    base = GenConfig(args.candidates, args.voters, args.k,
                     candidate_attribute_count=args.mu,
                     voter_attribute_count=args.pi,
                     phi=args.phi, seed=args.seed)
    cfg = ExperimentConfig(
        sweep=args.sweep, values=tuple(values), base=base,
        rule=Rule.parse(args.rule), notion_kind=args.notion,
        bound=_parse_bound(args.notion, args.bound),
        scope=Scope.parse(args.scope), instances=args.instances, seed=args.seed)
    result = run_experiment(cfg)
    csv_text = experiment_rows_to_csv(result.rows)
    if args.format == "json":
        payload = [{"value": str(r.value), "instance": r.instance,
                    "feasible": r.feasible, "ef_exists": r.envyfree_exists,
                    "score_ef": r.envyfree_score, "score_dire": r.dire_score,
                    "ratio": None if r.utility_ratio is None else str(r.utility_ratio),
                    "prop_envious": None if r.proportion_envious is None
                    else str(r.proportion_envious),
                    "simpsons": r.simpsons_flag}
                   for r in result.rows]
        out = json.dumps(payload, indent=2)
    else:
        out = csv_text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(out if out.endswith("\n") else out + "\n")
    else:
        print(out, end="" if out.endswith("\n") else "\n")
    return 0


def cmd_simpsons(args):
    election, cs, k = _load(args.election, args.k)
    rule = Rule.parse(args.rule)
    cs = resolve_population_committees(election, cs, rule, k)
    notion = make_notion(args.notion, _parse_bound(args.notion, args.bound))
    report = detect_simpsons(election, cs, rule, k, notion)
    if not report.applicable:
        print("not applicable: fewer than two voter attributes", file=sys.stderr)
        return 1
    text = (f"global envy-free exists: {report.global_exists}\n"
            f"inter-sectional envy-free exists: {report.intersectional_exists}\n"
            f"global-fail & inter-sectional-pass: {report.global_fail_intersectional_pass}")
    _emit(args, text, {
        "global_exists": report.global_exists,
        "intersectional_exists": report.intersectional_exists,
        "global_fail_intersectional_pass": report.global_fail_intersectional_pass,
        "intersectional_fail_global_pass": report.intersectional_fail_global_pass,
    })
    return 0


def _add_common(parser, election=True):
    if election:
        parser.add_argument("election", help="election file (dire-election v1)")
    parser.add_argument("--rule", default="kborda", choices=["kborda", "betacc"])
    parser.add_argument("--k", type=int, default=None, help="committee size override")
    parser.add_argument("--format", default="text", choices=["text", "json", "csv"])
    parser.add_argument("--out", default=None, help="write output to this path")


def _add_notion(parser):
    parser.add_argument("--notion", default="fec", choices=["fec", "uec", "wec"])
    parser.add_argument("--bound", default="0",
                        help="relaxation bound (integer, or p/q for wec)")
    parser.add_argument("--scope", default="global",
                        choices=["global", "localized", "intersectional"])


def build_parser():
    parser = argparse.ArgumentParser(
        prog="direfair",
        description="Constrained committee selection with envy-free fairness "
                    "across voter populations")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="best committee under the constraints")
    _add_common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="constraint + envy report for a given committee")
    _add_common(p)
    _add_notion(p)
    p.add_argument("--committee", required=True, help="comma-separated candidate ids")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fair", help="best constrained committee passing an envy notion")
    _add_common(p)
    _add_notion(p)
    p.set_defaults(func=cmd_fair)

    p = sub.add_parser("manipulate", help="search for a population-level manipulation")
    _add_common(p)
    p.add_argument("--manipulator", default=None, help="population as attr/label")
    p.add_argument("--any", action="store_true", help="try every population")
    p.set_defaults(func=cmd_manipulate)

    p = sub.add_parser("generate", help="write a synthetic election file")
    _add_common(p, election=False)
    p.add_argument("--candidates", type=int, required=True)
    p.add_argument("--voters", type=int, required=True)
    p.add_argument("--mu", type=int, default=1, help="candidate attribute count")
    p.add_argument("--pi", type=int, default=1, help="voter attribute count")
    p.add_argument("--phi", type=float, default=0.5, help="dispersion in [0, 1]")
    p.add_argument("--seed", default="0")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("experiment", help="run a sweep and emit CSV rows")
    _add_common(p, election=False)
    _add_notion(p)
    p.add_argument("--sweep", required=True, choices=["pi", "phi", "bound"])
    p.add_argument("--values", required=True, help="comma-separated sweep values")
    p.add_argument("--instances", type=int, default=5)
    p.add_argument("--candidates", type=int, default=14)
    p.add_argument("--voters", type=int, default=30)
    p.add_argument("--mu", type=int, default=1)
    p.add_argument("--pi", type=int, default=2)
    p.add_argument("--phi", type=float, default=0.5)
    p.add_argument("--seed", default="0")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("simpsons", help="compare global vs inter-sectional envy-freeness")
    _add_common(p)
    _add_notion(p)
    p.set_defaults(func=cmd_simpsons)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
