"""Command-line entry point: ``cardmat <subcommand> [flags]``.

Each subcommand prints one JSON document. Exit status is 0 on success, 1 on a
domain error, 2 on a usage or parse error, and 3 when ``separate`` finds a
violated inequality.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cardinality import CardinalitySequence, enumerate_feasible, optimize_chs
from .errors import CardmatError
from .lp import InequalitySystem, cutting_plane_optimize, simplex_max
from .matroid import Matroid, from_json
from .polyhedra import (build_fs, build_rank_ineq, facet_oracle, fs_facet_verdict, full_system,
                        rank_facet_verdict, single_k_predicates)
from .rational import fmt, fmt_all, parse_list
from .separation import separate_point
from .verify import probe_intersection_conjecture, verify_completeness

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VIOLATED = 0, 1, 2, 3


class UsageError(Exception):
    """Bad flags or unparsable input files."""


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cardmat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *flags, mode=None):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--instance", required=True, help="matroid JSON file")
        p.add_argument("--out", help="write the JSON document here instead of stdout")
        for flag in flags:
            if flag == "--instance2":
                p.add_argument(flag, required=True, help="second matroid JSON file")
            elif flag == "--c":
                p.add_argument(flag, help="cardinality sequence, e.g. 1,3")
            elif flag in ("--weights", "--point"):
                p.add_argument(flag, help="comma-separated rationals, e.g. 7/8,1/8")
            elif flag == "--subset":
                p.add_argument(flag, help="comma-separated element indices")
            elif flag in ("--k", "--trials", "--seed"):
                p.add_argument(flag, type=int)
        if mode:
            p.add_argument("--mode", choices=mode, default=mode[0])
        return p

    add("rank", "rank (and k-rank with --k) of a subset", "--subset", "--k")
    add("optimize", "max-weight independent set with size in c", "--c", "--weights")
    add("enumerate", "all independent sets with size in c (or exactly k)", "--c", "--k")
    add("build-cut", "rank or forbidden-set inequality of a subset", "--subset", "--c",
        mode=["rank", "fs"])
    facet = add("facet", "facet test by enumeration or by characterization", "--subset", "--c",
                "--k", mode=["oracle", "theorem"])
    facet.add_argument("--cut", choices=["rank", "fs"], default="rank",
                       help="which inequality of the subset to test")
    add("separate", "separate a point from P^c", "--c", "--point")
    add("lp", "exact LP optimum over P^c", "--c", "--weights", mode=["cutting-plane", "full"])
    add("verify", "randomized completeness check", "--c", "--trials", "--seed")
    add("probe-intersection", "look for a gap between P^c(M1) and P^c(M2) intersected",
        "--instance2", "--c", "--trials", "--seed")
    return parser


def _load_instance(path: str) -> Matroid:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read instance {path}: {exc}") from exc
    try:
        return from_json(doc)
    except CardmatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"instance {path} does not match the matroid schema: {exc}") from exc


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name} is required for {args.command}")
    return value


def _seq(args) -> CardinalitySequence:
    text = _need(args, "c")
    try:
        values = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"--c must be comma-separated integers: {text!r}") from exc
    return CardinalitySequence(values)


def _rationals(args, name, n):
    text = _need(args, name)
    try:
        values = parse_list(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--{name} is not a list of rationals: {text!r}") from exc
    if len(values) != n:
        raise UsageError(f"--{name} has {len(values)} entries, the ground set has {n}")
    return values


def _subset(args, m: Matroid, required=True):
    text = args.subset
    if text is None:
        if required:
            raise UsageError(f"--subset is required for {args.command}")
        return None
    try:
        elems = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise UsageError(f"--subset must be comma-separated integers: {text!r}") from exc
    if any(not 0 <= e < m.n for e in elems):
        raise UsageError(f"--subset has an element outside 0..{m.n - 1}")
    return elems


def _cardinality(args):
    """The --c sequence, or the single cardinality --k."""
    if args.c is not None:
        return _seq(args)
    if args.k is not None:
        return args.k
    raise UsageError(f"--c or --k is required for {args.command}")


def _run(args) -> tuple[dict, int]:
    m = _load_instance(args.instance)
    cmd = args.command
    if cmd == "rank":
        f = _subset(args, m, required=False)
        doc = {"rank": fmt(m.rank(f))}
        if args.k is not None:
            doc["k_rank"] = fmt(m.k_rank(f if f is not None else m.ground, args.k))
        return doc, EXIT_OK
    if cmd == "optimize":
        c = _seq(args)
        best, value = optimize_chs(m, _rationals(args, "weights", m.n), c)
        return {"set": sorted(best), "value": fmt(value)}, EXIT_OK
    if cmd == "enumerate":
        sets = enumerate_feasible(m, _cardinality(args))
        return {"count": len(sets), "sets": [sorted(s) for s in sets]}, EXIT_OK
    if cmd == "build-cut":
        f = _subset(args, m)
        ineq = build_rank_ineq(m, f) if args.mode == "rank" else build_fs(m, f, _seq(args))
        return ineq.to_json(), EXIT_OK
    if cmd == "facet":
        return _facet(args, m), EXIT_OK
    if cmd == "separate":
        outcome = separate_point(m, _rationals(args, "point", m.n), _seq(args))
        return outcome.to_json(), EXIT_VIOLATED if outcome.violated else EXIT_OK
    if cmd == "lp":
        c = _seq(args)
        w = _rationals(args, "weights", m.n)
        if args.mode == "full":
            c.check_bound(m)
            point, value = simplex_max(InequalitySystem(m.n, full_system(m, c)), w)
            cuts = []
        else:
            point, value, cuts = cutting_plane_optimize(m, c, w)
        return {"point": fmt_all(point), "value": fmt(value),
                "cuts": [q.to_json() for q in cuts]}, EXIT_OK
    if cmd == "verify":
        report = verify_completeness(m, _seq(args), _trials(args), _seed(args),
                                     instance=Path(args.instance).name)
        return report.to_json(), EXIT_OK
    if cmd == "probe-intersection":
        m2 = _load_instance(args.instance2)
        report = probe_intersection_conjecture(m, m2, _seq(args), _trials(args), _seed(args))
        return report.to_json(), EXIT_OK
    raise UsageError(f"unknown command {cmd}")


def _trials(args):
    return 100 if args.trials is None else args.trials


def _seed(args):
    return 0 if args.seed is None else args.seed


def _facet(args, m: Matroid) -> dict:
    f = _subset(args, m)
    single_k = args.c is None
    target = _cardinality(args)
    if args.mode == "oracle":
        if args.cut == "fs":
            if single_k:
                raise UsageError("--cut fs needs a cardinality sequence --c")
            ineq = build_fs(m, f, target)
        else:
            ineq = build_rank_ineq(m, f)
        verdict = facet_oracle(m, target, ineq)
        return {"is_facet": verdict.is_facet, "dim_face": verdict.dim_face,
                "dim_polytope": verdict.dim_polytope,
                "witness": [sorted(s) for s in verdict.witness]}
    if single_k:
        if args.cut == "fs":
            raise UsageError("--cut fs needs a cardinality sequence --c")
        v = single_k_predicates(m, f, target)
        return {"k": v.k, "dim_full": v.dim_full, "facet": v.facet}
    verdict = (fs_facet_verdict if args.cut == "fs" else rank_facet_verdict)(m, f, target)
    return {"holds": verdict.holds, "condition": verdict.condition,
            "used_oracle": verdict.used_oracle}


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        doc, status = _run(args)
    except UsageError as exc:
        _emit({"error": "parse-error", "message": str(exc)}, None)
        return EXIT_USAGE
    except CardmatError as exc:
        _emit({"error": exc.code, "message": str(exc)}, None)
        return EXIT_DOMAIN
    except ValueError as exc:
        _emit({"error": "invalid-argument", "message": str(exc)}, None)
        return EXIT_DOMAIN
    _emit(doc, args.out)
    return status


if __name__ == "__main__":
    sys.exit(main())
