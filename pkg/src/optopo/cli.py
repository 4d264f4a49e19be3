"""Command-line front end.

Subcommands: check (run class deciders on an instance file), verify
(canned proposition suites), search (counterexample search for a target
formula), enumerate (topologies on n points), eval (run a user DSL
definition against an instance).

Exit codes: 0 = holds / true, 1 = counterexample / false, 2 = usage or
input error.  With --json, stdout is a single JSON document with sorted
keys and no timing fields, so identical inputs give byte-identical
output; diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import dsl
from .core import (
    AxiomViolation,
    BoundsExceeded,
    count_topologies,
    enumerate_topologies,
)
from .functions import (
    FunctionClassId,
    FunctionInstance,
    function_instance_from_dict,
    satisfies,
)
from .operators import NotAssociated, Operator, OperatorKind, operator_from_name
from .search import (
    Outcome,
    PropositionId,
    SearchBounds,
    Verdict,
    find_counterexample,
    verify_implication,
    verify_proposition,
)


def _describe(cid: FunctionClassId) -> str:
    """One-line reading of a class name, derived from its naming scheme."""
    name = cid.value
    if name == "weakly_almost_contra_tstar_cont":
        return ("T*Cl of the preimage of each regular closed set stays inside "
                "the preimage of every regular open superset")
    if name == "weakly_contra_tstar_cont":
        return ("T*Cl of the preimage of each closed set stays inside the "
                "preimage of every open superset")
    if name.startswith("weakly_contra_"):
        kind = name[len("weakly_contra_"):-5] if name.endswith("_cont") else name[14:]
        kind = {"cont": "", "pre": "pre-", "beta": "beta-"}.get(kind, kind)
        return (f"the {kind}closure of the preimage of each closed set stays "
                "inside the preimage of every open superset")
    if name == "slightly_contra_tstar_cont":
        return "preimages of clopen sets are T*-closed"
    if name == "almost_gtsr_cont":
        return "preimages of regular closed sets are gT*r-closed"
    if name == "atsr_irresolute":
        return ("T*Cl of any gT*r-closed set inside the preimage of a regular "
                "open set stays inside that preimage")
    quant = "open"
    rest = name
    if rest.startswith("almost_"):
        quant = "regular open"
        rest = rest[len("almost_"):]
    contra = rest.startswith("contra_")
    if contra:
        rest = rest[len("contra_"):]
    rest = rest[:-5] if rest.endswith("_cont") else rest
    body = {
        "": "open", "cont": "open", "continuous": "open",
        "pre": "preopen", "semi": "semiopen",
        "alpha": "alpha-open", "beta": "beta-open", "tstar": "T*-open",
    }.get(rest, rest)
    if contra:
        body = body.replace("open", "closed")
    return f"preimages of {quant} sets are {body}"


def _print_catalog(as_json: bool) -> None:
    catalog = {c.value: _describe(c) for c in FunctionClassId}
    if as_json:
        print(json.dumps({"classes": catalog}, sort_keys=True))
    else:
        width = max(len(k) for k in catalog)
        for k in sorted(catalog):
            print(f"{k:<{width}}  {catalog[k]}")


def _load_defs(path: Optional[str]) -> dict:
    env = dict(dsl.stdlib())
    if path:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        for d in dsl.parse(text, env):
            env[d.name] = d
    return env


def _load_instance(path: str, env: dict) -> FunctionInstance:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return function_instance_from_dict(data, env)


def _operators(names: Optional[list], env: dict) -> tuple[Operator, ...]:
    if not names:
        return (Operator(OperatorKind.INT_CL),)
    return tuple(operator_from_name(n, env) for n in names)


def _emit_verdict(v: Verdict, as_json: bool) -> int:
    if as_json:
        print(json.dumps(v.to_dict(include_timing=False), sort_keys=True))
    else:
        print(f"outcome: {v.outcome.value}")
        print(f"checked: {v.checked}")
        if v.qualifying is not None:
            print(f"qualifying: {v.qualifying}")
        if v.witness is not None:
            print("witness: " + json.dumps(v.witness, sort_keys=True))
        print(f"elapsed_ms: {v.elapsed_ms:.1f}")
    return 1 if v.outcome == Outcome.COUNTEREXAMPLE else 0


def _cmd_check(args) -> int:
    if args.list_classes:
        _print_catalog(args.json)
        return 0
    if not args.instance:
        raise _Usage("check requires --instance (or --list-classes)")
    if not args.cls and not args.all:
        raise _Usage("check requires --class NAME or --all")
    env = _load_defs(args.defs)
    inst = _load_instance(args.instance, env)
    if args.all:
        wanted = list(FunctionClassId)
    else:
        wanted = []
        for name in args.cls:
            try:
                wanted.append(FunctionClassId(name))
            except ValueError:
                raise _Usage(f"unknown class {name!r}; see check --list-classes")
    results = {c.value: satisfies(inst, c) for c in wanted}
    if args.json:
        print(json.dumps({"results": results}, sort_keys=True))
    else:
        for k in results if not args.all else sorted(results):
            print(f"{k}: {'true' if results[k] else 'false'}")
    if args.all:
        return 0
    return 0 if all(results.values()) else 1


def _cmd_verify(args) -> int:
    env = _load_defs(args.defs)
    try:
        prop = PropositionId(args.proposition)
    except ValueError:
        raise _Usage(
            f"unknown proposition {args.proposition!r}; one of "
            + ", ".join(p.value for p in PropositionId)
        )
    bounds = SearchBounds(
        max_points_x=args.max_points,
        max_points_y=args.max_points,
        operators=_operators(args.operator, env),
    )
    return _emit_verdict(verify_proposition(prop, bounds, jobs=args.jobs), args.json)


def _cmd_search(args) -> int:
    env = _load_defs(args.defs)
    try:
        target = FunctionClassId(args.target)
    except ValueError:
        target = dsl.parse_target(args.target, env)
    bounds = SearchBounds(
        max_points_x=args.max_points,
        max_points_y=args.max_points,
        operators=_operators(args.operator, env),
    )
    return _emit_verdict(find_counterexample(target, bounds, jobs=args.jobs), args.json)


def _cmd_enumerate(args) -> int:
    if args.count_only:
        n = count_topologies(args.points)
        print(json.dumps({"count": n}, sort_keys=True) if args.json else n)
        return 0
    topos = [t.to_dict() for t in enumerate_topologies(args.points)]
    if args.json:
        print(json.dumps(topos, sort_keys=True))
    else:
        for t in topos:
            print(json.dumps(t, sort_keys=True))
    return 0


def _cmd_eval(args) -> int:
    env = _load_defs(args.defs)
    if args.name not in env:
        raise _Usage(f"no definition named {args.name!r} in {args.defs!r}")
    d = env[args.name]
    if d.kind != dsl.DefKind.FUNCLASS:
        raise _Usage(f"{args.name!r} is a {d.kind.value}, not a funclass")
    inst = _load_instance(args.instance, env)
    value = dsl.eval_funclass(d, inst)
    if args.json:
        print(json.dumps({"name": args.name, "value": value}, sort_keys=True))
    else:
        print("true" if value else "false")
    return 0 if value else 1


class _Usage(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="machine-readable deterministic output")
    common.add_argument("--jobs", type=int, default=1,
                        help="parallel search partitions")
    common.add_argument("--defs", metavar="FILE.dsl",
                        help="extra DSL definitions to load")

    p = argparse.ArgumentParser(prog="optopo",
                                description="finite operator-topology toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common],
                       help="run class deciders on an instance file")
    c.add_argument("--instance", metavar="FILE.json")
    c.add_argument("--class", dest="cls", action="append", metavar="NAME")
    c.add_argument("--all", action="store_true", help="check every class")
    c.add_argument("--list-classes", action="store_true")
    c.set_defaults(fn=_cmd_check)

    v = sub.add_parser("verify", parents=[common],
                       help="exhaustively verify a canned proposition")
    v.add_argument("--proposition", required=True, metavar="ID")
    v.add_argument("--max-points", type=int, default=3)
    v.add_argument("--operator", action="append", metavar="NAME")
    v.set_defaults(fn=_cmd_verify)

    s = sub.add_parser("search", parents=[common],
                       help="search for an instance satisfying a target formula")
    s.add_argument("--target", required=True, metavar="FORMULA")
    s.add_argument("--max-points", type=int, default=3)
    s.add_argument("--operator", action="append", metavar="NAME")
    s.set_defaults(fn=_cmd_search)

    e = sub.add_parser("enumerate", parents=[common],
                       help="enumerate topologies on n labeled points")
    e.add_argument("--points", type=int, required=True)
    e.add_argument("--count-only", action="store_true")
    e.set_defaults(fn=_cmd_enumerate)

    ev = sub.add_parser("eval", parents=[common],
                        help="evaluate a DSL funclass on an instance")
    ev.add_argument("--instance", required=True, metavar="FILE.json")
    ev.add_argument("--name", required=True, metavar="CLASSNAME")
    ev.set_defaults(fn=_cmd_eval)
    return p


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AxiomViolation, BoundsExceeded, NotAssociated,
            dsl.DslSyntaxError, dsl.DslTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
