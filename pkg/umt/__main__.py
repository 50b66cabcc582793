"""
Main entry point.
"""

import argparse
import json
import sys
import time
from ast import literal_eval
from pathlib import Path
from typing import List, Optional

from . import config, logger
from .algebra import relation_algebra
from .aut import SUBSETS, TUPLES, automorphism_group, orbits, point_orbits
from .config import DefaultSettings
from .errors import *
from .formula import evaluate, load_definitions, parse_formula, truth_set
from .formula.definitions import expand
from .miner import CATALOG, run_campaign
from .report import Report
from .schemes import (Mode, SchemeVerdict, check_F, check_Q, check_Q1,
    check_uniformity, find_indicators, indicator_partition,
    indiscernibility_partition, recheck, uniformity_degrees)
from .structure import (Structure, format_structure, load_structure,
    parse_structure, transitive_closure)
from .taxonomy import (classify_binary, classify_cyclic, is_trivial,
    is_very_simple, linearize, right_segments, square_inclusion)
from .utils import VERSION


def _structure(args) -> Structure:
    logger.debug(f"Loading structure {args.file}")
    return load_structure(args.file)


def _table_rows(table) -> List[List[int]]:
    return [list(t) for t in table]


def _formula(args, s: Structure):
    if args.formula is not None:
        text = args.formula
    elif args.formula_file is not None:
        text = Path(args.formula_file).read_text(encoding="utf-8").strip()
    else:
        return None
    f = parse_formula(text)
    if getattr(args, "defs", None) is not None:
        f = expand(f, load_definitions(args.defs))
    # relations must exist with the right arity
    return parse_formula(f.text, dict(s.signature))


def classify(args):
    """
    umt classify --rel NAME FILE
    """
    s = _structure(args)
    arity = s.table(args.rel).arity
    params = {"file": args.file, "rel": args.rel}
    if arity == 3:
        return Report("classify", params, classify_cyclic(s, args.rel).to_dict())
    if arity != 2:
        raise ArityMismatch(f"Relation {args.rel} has arity {arity}; classify "
            "handles binary and ternary relations.")
    body = classify_binary(s, args.rel).to_dict()
    body["square"] = square_inclusion(s, args.rel)
    body["trivial"] = is_trivial(s, args.rel)
    body["very_simple"] = is_very_simple(s, args.rel)
    return Report("classify", params, body)


def _env(pairs) -> dict:
    env = {}
    for pair in pairs or []:
        name, sep, value = pair.partition("=")
        if not sep:
            raise UnboundVariable(f"Bad binding {pair!r}; use name=element.")
        try:
            env[name.strip()] = int(value)
        except ValueError:
            raise OutOfRange(f"Element {value!r} is not an integer.") from None
    return env


def eval_(args):
    """
    umt eval -f FORMULA [--env x=0 ...] FILE

    One ``--env`` per variable.
    """
    s = _structure(args)
    f = _formula(args, s)
    params = {"file": args.file, "formula": f.text, "env": _env(args.env)}
    if args.env or not f.free:
        value = evaluate(s, f, params["env"])
        return Report("eval", params, {"value": value}, status=0 if value else 1)
    names = sorted(f.free)
    found = sorted(truth_set(s, f, names))
    return Report("eval", params, {"variables": names, "count": len(found),
        "truth_set": [list(t) for t in found]})


def _check(s: Structure, scheme: str, level: Optional[int], mode,
        rel: Optional[str], f=None) -> SchemeVerdict:
    if scheme == "uniform":
        if level is None:
            level = len(f.free) if f is not None else 1
        return check_uniformity(s, level, mode, f=f)
    if rel is None:
        raise UnknownRelation(f"Scheme {scheme} needs --rel.")
    if scheme == "q":
        return check_Q(s, rel, mode)
    if scheme == "q1":
        return check_Q1(s, rel, mode)
    if mode is not None and not Mode.parse(mode).subsets:
        raise BadMode("Scheme f quantifies over subsets only.")
    return check_F(s, rel)


def check(args):
    """
    umt check --scheme {uniform|q|q1|f} [--level N] [--mode M] [--rel NAME]
    """
    s = _structure(args)
    f = _formula(args, s)
    mode = args.mode
    if mode is None and f is None and args.scheme != "f":
        group = "uniformity_mode" if args.scheme == "uniform" \
            else "atomicity_mode"
        mode = getattr(config.current().schemes, group).value()
    v = _check(s, args.scheme, args.level, mode, args.rel, f)
    params = {
        "file": args.file,
        "scheme": args.scheme,
        "level": v.n,
        "mode": v.mode,
        "rel": args.rel,
        "formula": None if f is None else f.text,
        "structure": format_structure(s),
    }
    for w in v.warnings:
        logger.warn(w)
    return Report("check", params, v.to_dict(), kind="verdict",
        witnesses=v.witnesses(), status=0 if v.holds else 1)


def degree(args):
    """
    umt degree --max N FILE
    """
    s = _structure(args)
    degrees = uniformity_degrees(s, args.max)
    return Report("degree", {"file": args.file, "max": args.max},
        {"degrees": degrees, "finitely_uniform_up_to_max":
            degrees == list(range(1, args.max+1))})


def indicators(args):
    """
    umt indicators --depth D FILE
    """
    s = _structure(args)
    found = find_indicators(s, args.depth)
    rows = [{"formula": f.text, "truth_set": list(t)} for f, t in found]
    return Report("indicators", {"file": args.file, "depth": args.depth},
        {"count": len(rows), "indicators": rows},
        witnesses=rows[:1])


def aut(args):
    """
    umt aut [--orbits K --kind tuples|subsets] FILE
    """
    s = _structure(args)
    group = automorphism_group(s)
    body = {
        "order": group.order,
        "rigid": group.is_rigid(),
        "verified": group.verify(),
        "point_orbits": [list(o) for o in point_orbits(s, group)],
    }
    if len(group) <= 24:
        body["elements"] = [list(g) for g in group]
    params = {"file": args.file, "orbits": args.orbits, "kind": args.kind}
    if args.orbits is not None:
        body["orbit_partition"] = orbits(s, args.orbits, args.kind,
            group).to_dict()
    return Report("aut", params, body)


def segments(args):
    """
    umt segments --rel NAME FILE
    """
    s = _structure(args)
    report = right_segments(s, args.rel)
    return Report("segments", {"file": args.file, "rel": args.rel},
        report.to_dict())


def _campaign_params(args) -> dict:
    params = {}
    if args.size is not None:
        params["size"] = args.size
    for pair in args.param or []:
        key, sep, value = pair.partition("=")
        if not sep:
            raise SettingError(f"Bad campaign parameter {pair!r}; use "
                "key=value.")
        try:
            params[key.strip()] = literal_eval(value.strip())
        except (ValueError, SyntaxError):
            raise SettingError(f"Cannot parse value of {key}.") from None
    return params


def mine(args):
    """
    umt mine --campaign NAME [--size N]
    """
    settings = config.current()
    if args.workers is not None:
        settings.override("miner.workers", args.workers)
    if args.seed is not None:
        settings.override("miner.seed", args.seed)
    if args.quiet:
        settings.override("miner.progress", False)
    report = run_campaign(args.campaign, _campaign_params(args))
    params = dict(report.params, campaign=args.campaign)
    witnesses = [{"finding": f.name, "witnesses": f.witnesses}
        for f in report.findings if f.witnesses and not f.holds]
    out = Report("mine", params, report.to_dict(), witnesses=witnesses,
        status=0 if report.ok else 1)
    out.wall_time = report.wall_time
    return out


def verify_witness(args):
    """
    umt verify-witness REPORT.json

    Re-runs a ``check`` report from the embedded structure and replays its
    witnesses.
    """
    try:
        data = json.loads(Path(args.report).read_text(encoding="utf-8"))
        assert data["command"] == "check"
        params = data["params"]
        verdict = SchemeVerdict.from_dict(data["verdict"])
    except (ValueError, KeyError, TypeError, AssertionError):
        raise BadWitness(f"{args.report} is not a check report.") from None

    s = parse_structure(params["structure"])
    f = None if params.get("formula") is None \
        else parse_formula(params["formula"])
    mode = None if params["mode"] == "formula" else params["mode"]
    again = _check(s, params["scheme"], params.get("level"), mode,
        params.get("rel"), f)
    reproduced = again.holds == verdict.holds
    replayed = recheck(s, verdict)
    body = {
        "scheme": verdict.scheme,
        "holds": verdict.holds,
        "reproduced": reproduced,
        "witnesses_recheck": replayed,
    }
    return Report("verify-witness", {"report": args.report}, body,
        status=0 if reproduced and replayed else 1)


def algebra(args):
    """
    umt algebra -e EXPR FILE
    """
    s = _structure(args)
    table = relation_algebra(s, args.expr)
    return Report("algebra", {"file": args.file, "expr": args.expr},
        {"arity": table.arity, "size": len(table),
            "tuples": _table_rows(table)})


def closure(args):
    """
    umt closure --rel NAME FILE
    """
    s = _structure(args)
    table = transitive_closure(s, args.rel)
    return Report("closure", {"file": args.file, "rel": args.rel},
        {"name": table.name, "size": len(table),
            "tuples": _table_rows(table)})


def linearize_(args):
    """
    umt linearize --rel NAME FILE
    """
    s = _structure(args)
    table = linearize(s, args.rel)
    return Report("linearize", {"file": args.file, "rel": args.rel},
        {"name": table.name, "tuples": _table_rows(table),
            "structure": format_structure(s.with_relation(table))})


def partition(args):
    """
    umt partition [--depth D] FILE
    """
    s = _structure(args)
    indisc = indiscernibility_partition(s)
    body = {"indiscernibility": [list(c) for c in indisc]}
    if args.depth is not None:
        body["indicators"] = [list(c)
            for c in indicator_partition(s, args.depth)]
        body["indicators_match"] = body["indicators"] == body[
            "indiscernibility"]
    return Report("partition", {"file": args.file, "depth": args.depth}, body)


COMMANDS = {
    "classify": classify,
    "eval": eval_,
    "check": check,
    "degree": degree,
    "indicators": indicators,
    "aut": aut,
    "segments": segments,
    "mine": mine,
    "verify-witness": verify_witness,
    "algebra": algebra,
    "closure": closure,
    "linearize": linearize_,
    "partition": partition,
}


def _add_file(parser):
    parser.add_argument("file", help="Structure file (.fms).")


def _add_formula(parser, required: bool):
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("-f", "--formula", help="Formula text.")
    group.add_argument("--formula-file", help="File holding one formula.")
    parser.add_argument("--defs",
        help="Definitions file; its names are expanded in the formula.")


def get_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="umt",
        description="Uniformity schemes on finite relational structures.")
    subparsers = parser.add_subparsers(title="subcommands", dest="subparser")
    parser.add_argument("-V", "--version", action="version",
        help="Show version info.", version=f"umt v{VERSION}")
    parser.add_argument("--json", action="store_true",
        help="Print one JSON document instead of a table.")
    parser.add_argument("--timing", action="store_true",
        help="Include wall time in the output.")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true",
        help="Debug logging.")
    verbosity.add_argument("-q", "--quiet", action="store_true",
        help="No logging and no progress bars.")
    parser.add_argument("--limit", action="append", metavar="GROUP.KEY=VALUE",
        help="Override a setting, e.g. limits.aut_universe=9. Repeatable.")

    p = subparsers.add_parser("classify", help="Classify one relation.")
    p.add_argument("--rel", required=True, help="Relation name.")
    _add_file(p)

    p = subparsers.add_parser("eval", help="Evaluate a formula.")
    _add_formula(p, required=True)
    p.add_argument("--env", action="append", metavar="VAR=ELEM",
        help="Assignment of one free variable. Repeatable.")
    _add_file(p)

    p = subparsers.add_parser("check", help="Check a scheme.")
    p.add_argument("--scheme", required=True,
        choices=("uniform", "q", "q1", "f"))
    p.add_argument("--level", type=int, help="Uniformity level n.")
    p.add_argument("--mode", help="orbits, subsets or formulas:D.")
    p.add_argument("--rel", help="Relation of the q, q1 and f schemes.")
    _add_formula(p, required=False)
    _add_file(p)

    p = subparsers.add_parser("degree", help="Uniformity levels 1..max.")
    p.add_argument("--max", type=int, required=True)
    _add_file(p)

    p = subparsers.add_parser("indicators", help="Nonzero unary formulas.")
    p.add_argument("--depth", type=int, required=True)
    _add_file(p)

    p = subparsers.add_parser("aut", help="Automorphism group and orbits.")
    p.add_argument("--orbits", type=int, metavar="K",
        help="Also print the orbits on K-tuples or K-subsets.")
    p.add_argument("--kind", choices=(TUPLES, SUBSETS), default=SUBSETS)
    _add_file(p)

    p = subparsers.add_parser("segments", help="Right segments of an order.")
    p.add_argument("--rel", required=True)
    _add_file(p)

    p = subparsers.add_parser("mine", help="Run a verification campaign.")
    p.add_argument("--campaign", required=True,
        help=f"One of: {', '.join(CATALOG)}.")
    p.add_argument("--size", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--param", action="append", metavar="KEY=VALUE",
        help="Other campaign parameter. Repeatable.")

    p = subparsers.add_parser("verify-witness",
        help="Replay a JSON check report.")
    p.add_argument("report", help="JSON written by check --json.")

    p = subparsers.add_parser("algebra", help="Evaluate a relation expression.")
    p.add_argument("-e", "--expr", required=True)
    _add_file(p)

    p = subparsers.add_parser("closure", help="Transitive closure.")
    p.add_argument("--rel", required=True)
    _add_file(p)

    p = subparsers.add_parser("linearize",
        help="Linear order from a distinguishability.")
    p.add_argument("--rel", required=True)
    _add_file(p)

    p = subparsers.add_parser("partition",
        help="Indiscernibility and indicator partitions.")
    p.add_argument("--depth", type=int)
    _add_file(p)

    return parser


def _settings(limits) -> DefaultSettings:
    settings = DefaultSettings()
    for pair in limits or []:
        key, sep, value = pair.partition("=")
        if not sep:
            raise SettingError(f"Bad override {pair!r}; use group.key=value.")
        try:
            value = literal_eval(value.strip())
        except (ValueError, SyntaxError):
            raise SettingError(f"Cannot parse value of {key}.") from None
        settings.override(key.strip(), value)
    return settings


def run(argv: Optional[List[str]] = None) -> int:
    """
    Run one command. Returns the exit code: 0 holds or success, 1 violated,
    2 usage or input error.
    """
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    if args.subparser is None:
        parser.print_help()
        return 2

    prev_level = logger.get_level()
    logger.set_level("debug" if args.verbose else
        "quiet" if args.quiet else prev_level)
    prev = None
    try:
        prev = config.use(_settings(args.limit))
        logger.debug(f"umt v{VERSION}")
        start = time.perf_counter()
        report = COMMANDS[args.subparser](args)
        if report.wall_time is None:
            report.wall_time = time.perf_counter() - start
    except UmtError as e:
        logger.error(f"{e.kind}: {e}")
        return 2
    except OSError as e:
        logger.error(f"OSError: {e}")
        return 2
    finally:
        if prev is not None:
            config.use(prev)
        logger.set_level(prev_level)

    if args.json:
        print(report.to_json(args.timing))
    else:
        print(report.to_text(args.timing))
    return report.status


def main():
    """
    Main entry point.
    """
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
