"""Command line front end.

Every successful command writes its artifacts into the output directory
(--outdir, the COMBICONFIG_OUTDIR environment variable, or the working
directory) together with a replayable trace; replay_trace re-runs a
trace and reproduces the artifacts byte for byte.

Exit codes: 0 success (including a not_exists search verdict), 1
verification failure, 2 usage or malformed input, 3 infeasible or
inconsistent parameters, 4 budget exhausted or verdict unknown.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys
from pathlib import Path
from typing import Sequence

from .constructions import (
    amalgamate,
    construct_for_d,
    degree_two_configuration,
    dual,
    minimal_nontrivial,
    sm_plus_one,
)
from .errors import (
    AnchorNotFound,
    BudgetExhausted,
    InfeasibleParameters,
    NotConnected,
    NotExpressible,
    NotMember,
    NotNumerical,
    NotRegular,
    ParameterMismatch,
)
from .incidence import (
    Configuration,
    find_anchors,
    outer_lower_bound,
    tuple_of,
    verify,
)
from .search import UNKNOWN, SearchProblem, decide, minimal_element
from .semigroup import DescribeEffort, NumericalSemigroup, drk_describe
from . import serialize

_INFEASIBLE = (InfeasibleParameters, NotExpressible, NotNumerical,
               ParameterMismatch, NotRegular, NotConnected, AnchorNotFound,
               NotMember)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="combiconfig",
        description="Construct, compose, verify and search biregular "
                    "incidence configurations, and describe their scale "
                    "factor semigroups.")
    parser.add_argument("--outdir", default=None,
                        help="artifact directory (default: "
                             "$COMBICONFIG_OUTDIR or the working directory)")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed recorded in traces and passed to "
                             "randomized steps (default 0)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a configuration for "
                                         "degrees (r, k) and scale factor d")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify", help="verify a configuration JSON file")
    p.add_argument("--in", dest="infile", required=True)

    p = sub.add_parser("anchors", help="relabel a configuration onto its "
                                       "three anchor incidences")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("amalgamate", help="compose two configuration files")
    p.add_argument("--first", required=True)
    p.add_argument("--second", required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("theorem", help="run the fan construction: find a "
                                       "base element m, emit scale s*m+1")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("semigroup", help="numerical semigroup arithmetic")
    p.add_argument("--generators", required=True,
                   help="comma separated positive integers, gcd 1")
    p.add_argument("--contains", type=int, default=None,
                   help="also report membership and a certificate for "
                        "this value")
    p.add_argument("--out", default=None)

    p = sub.add_parser("drk", help="describe the scale factor set for "
                                   "degrees (r, k)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--scan-span", type=int, default=None,
                   help="scale factors past the counting bound to scan")
    p.add_argument("--node-budget", type=int, default=None)
    p.add_argument("--time-budget", type=float, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("search", help="exhaustive existence search for "
                                      "a (v, b, r, k) tuple")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--node-budget", type=int, default=None)
    p.add_argument("--time-budget", type=float, default=None)
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--out", default=None)

    p = sub.add_parser("export", help="re-emit a configuration file as "
                                      "canonical JSON or DOT")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--format", choices=("json", "dot"), default="dot")
    p.add_argument("--out", default=None)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    outdir = Path(args.outdir or os.environ.get("COMBICONFIG_OUTDIR") or ".")
    handler = {
        "construct": _cmd_construct,
        "verify": _cmd_verify,
        "anchors": _cmd_anchors,
        "amalgamate": _cmd_amalgamate,
        "theorem": _cmd_theorem,
        "semigroup": _cmd_semigroup,
        "drk": _cmd_drk,
        "search": _cmd_search,
        "export": _cmd_export,
    }[args.command]
    try:
        return handler(args, outdir)
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except _INFEASIBLE as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


def replay_trace(trace_path: str | os.PathLike,
                 outdir: str | os.PathLike | None = None) -> int:
    """Re-run a recorded trace; artifacts are reproduced byte for byte.

    Input files referenced by the trace must still exist.  outdir
    overrides the artifact directory, which is not part of the trace.
    """
    doc = json.loads(Path(trace_path).read_text())
    argv: list[str] = ["--seed", str(doc["seed"])]
    if outdir is not None:
        argv.extend(("--outdir", str(outdir)))
    argv.append(doc["command"])
    for key, value in sorted(doc["params"].items()):
        if value is None or value is False:
            continue
        flag = "--" + key.replace("_", "-")
        if value is True:
            argv.append(flag)
        else:
            argv.extend((flag, str(value)))
    return run(argv)


def _write(outdir: Path, name: str, text: str) -> Path:
    outdir.mkdir(parents=True, exist_ok=True)
    path = outdir / name
    path.write_text(text)
    return path


def _write_artifact(outdir: Path, out_flag: str | None, default_name: str,
                    text: str, command: str, params: dict,
                    seed: int) -> Path:
    name = out_flag if out_flag is not None else default_name
    path = _write(outdir, name, text)
    if out_flag is not None:
        params = {**params, "out": out_flag}
    trace = serialize.trace_to_json(command, params, seed)
    _write(outdir, name + ".trace.json", trace)
    return path


def _load_config(path: str) -> Configuration:
    return serialize.config_from_json(Path(path).read_text())


def _base_pieces(r: int, k: int,
                 effort: DescribeEffort = DescribeEffort()) -> list[tuple[int, Configuration]]:
    """A first element m and its coprime companion s*m+1, with witnesses."""
    mn, mx = min(r, k), max(r, k)
    scan = minimal_element(mx, mn, outer_lower_bound(r, k) + effort.scan_span,
                           node_budget=effort.node_budget,
                           time_budget=effort.time_budget)
    if scan.found is not None:
        base = scan.witness if scan.witness.r == r else dual(scan.witness)
        m = scan.found
    else:
        base = minimal_nontrivial(r, k)
        m = tuple_of(base).d
    s = r * k // math.gcd(r, k)
    return [(m, base), (s * m + 1, sm_plus_one(base))]


def _cmd_construct(args, outdir: Path) -> int:
    r, k, d = args.r, args.k, args.d
    if r < 1 or k < 1 or d < 0:
        raise InfeasibleParameters(
            f"degrees must be positive and d nonnegative, got "
            f"r={r}, k={k}, d={d}")
    if d == 0:
        config = Configuration.empty(r, k)
    elif min(r, k) == 2:
        config = degree_two_configuration(max(r, k), d)
        if config.r != r:
            config = dual(config)
    elif min(r, k) < 2:
        raise InfeasibleParameters(
            f"no construction path for degree 1 (r={r}, k={k})")
    else:
        config = construct_for_d(d, r, k, _base_pieces(r, k))
    report = verify(config)
    if not report.ok:
        print(report, file=sys.stderr)
        return 1
    text = serialize.config_to_json(config)
    path = _write_artifact(outdir, args.out, f"config_r{r}_k{k}_d{d}.json",
                           text, "construct", {"r": r, "k": k, "d": d},
                           args.seed)
    info = tuple_of(config)
    print(f"wrote {path} (v={info.v}, b={info.b}, r={info.r}, k={info.k}, "
          f"d={info.d})")
    return 0


def _cmd_verify(args, outdir: Path) -> int:
    report = verify(_load_config(args.infile))
    if report.ok:
        print("pass")
        return 0
    print(report, file=sys.stderr)
    return 1


def _cmd_anchors(args, outdir: Path) -> int:
    anchored = find_anchors(_load_config(args.infile))
    text = serialize.config_to_json(anchored.config)
    stem = Path(args.infile).stem
    path = _write_artifact(outdir, args.out, f"anchored_{stem}.json", text,
                           "anchors", {"in": args.infile}, args.seed)
    pretty = ", ".join(f"(x{p + 1},y{j + 1})"
                       for p, j in anchored.anchors)
    print(f"wrote {path} with anchors {pretty}")
    return 0


def _cmd_amalgamate(args, outdir: Path) -> int:
    first = _load_config(args.first)
    second = _load_config(args.second)
    for label, config in (("first", first), ("second", second)):
        report = verify(config)
        if not report.ok:
            print(f"{label} input fails verification:\n{report}",
                  file=sys.stderr)
            return 1
    combined = amalgamate(first, second)
    report = verify(combined)
    if not report.ok:
        print(report, file=sys.stderr)
        return 1
    text = serialize.config_to_json(combined)
    path = _write_artifact(outdir, args.out, "amalgamated.json", text,
                           "amalgamate",
                           {"first": args.first, "second": args.second},
                           args.seed)
    info = tuple_of(combined)
    print(f"wrote {path} (v={info.v}, b={info.b}, d={info.d})")
    return 0


def _cmd_theorem(args, outdir: Path) -> int:
    r, k = args.r, args.k
    if r < 3 or k < 3:
        raise InfeasibleParameters(
            f"the fan construction needs degrees at least 3, got ({r},{k})")
    pieces = _base_pieces(r, k)
    (m, _base), (result_d, config) = pieces
    report = verify(config)
    if not report.ok:
        print(report, file=sys.stderr)
        return 1
    text = serialize.config_to_json(config)
    path = _write_artifact(outdir, args.out, f"theorem_r{r}_k{k}.json", text,
                           "theorem", {"r": r, "k": k}, args.seed)
    s = r * k // math.gcd(r, k)
    print(f"wrote {path}: base m={m}, s={s}, scale factor {result_d}, "
          f"gcd(m, s*m+1)={math.gcd(m, result_d)}")
    return 0


def _cmd_semigroup(args, outdir: Path) -> int:
    try:
        gens = [int(x) for x in args.generators.split(",") if x.strip()]
    except ValueError:
        raise ValueError(f"cannot parse generators {args.generators!r}")
    s = NumericalSemigroup.from_generators(gens)
    text = serialize.semigroup_to_json(s)
    path = _write_artifact(outdir, args.out, "semigroup.json", text,
                           "semigroup", {"generators": args.generators},
                           args.seed)
    print(text, end="")
    if args.contains is not None:
        certificate = s.certificate(args.contains)
        if certificate is None:
            raise NotMember(f"{args.contains} is not a member of {s}")
        terms = " + ".join(f"{c}*{g}" for g, c in sorted(certificate.items()))
        print(f"{args.contains} = {terms or '0'}")
    return 0


def _cmd_drk(args, outdir: Path) -> int:
    overrides = {}
    if args.scan_span is not None:
        overrides["scan_span"] = args.scan_span
    if args.node_budget is not None:
        overrides["node_budget"] = args.node_budget
    if args.time_budget is not None:
        overrides["time_budget"] = args.time_budget
    effort = dataclasses.replace(DescribeEffort(), **overrides)
    description = drk_describe(args.r, args.k, effort)
    outdir.mkdir(parents=True, exist_ok=True)
    witness_paths: dict[int, str] = {}
    for d, config in sorted(description.witnesses.items()):
        name = f"drk_r{args.r}_k{args.k}_d{d}.json"
        _write(outdir, name, serialize.config_to_json(config))
        witness_paths[d] = name
    text = serialize.description_to_json(description, witness_paths)
    params = {"r": args.r, "k": args.k}
    if args.scan_span is not None:
        params["scan_span"] = args.scan_span
    if args.node_budget is not None:
        params["node_budget"] = args.node_budget
    if args.time_budget is not None:
        params["time_budget"] = args.time_budget
    _write_artifact(outdir, args.out, f"drk_r{args.r}_k{args.k}.json", text,
                    "drk", params, args.seed)
    print(text, end="")
    return 0


def _cmd_search(args, outdir: Path) -> int:
    problem = SearchProblem(args.v, args.b, args.r, args.k,
                            node_budget=args.node_budget,
                            time_budget=args.time_budget,
                            seed=args.seed,
                            symmetry=not args.no_symmetry)
    verdict = decide(problem)
    text = serialize.verdict_to_json(verdict)
    params = {"v": args.v, "b": args.b, "r": args.r, "k": args.k,
              "node_budget": args.node_budget,
              "time_budget": args.time_budget,
              "no_symmetry": args.no_symmetry}
    _write_artifact(outdir, args.out,
                    f"search_v{args.v}_b{args.b}_r{args.r}_k{args.k}.json",
                    text, "search", params, args.seed)
    print(text, end="")
    return 4 if verdict.kind == UNKNOWN else 0


def _cmd_export(args, outdir: Path) -> int:
    config = _load_config(args.infile)
    stem = Path(args.infile).stem
    if args.format == "dot":
        text = serialize.config_to_dot(config)
        default_name = f"{stem}.dot"
    else:
        text = serialize.config_to_json(config)
        default_name = f"{stem}.canonical.json"
    path = _write_artifact(outdir, args.out, default_name, text, "export",
                           {"in": args.infile, "format": args.format},
                           args.seed)
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    main()
