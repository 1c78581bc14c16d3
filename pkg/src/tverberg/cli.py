"""Command-line front end.

Subcommands: ``bound`` (closed-form guarantees), ``gen`` (synthetic
instances), ``partition`` (seeded search for a certified partition),
``verify`` (tolerance of a given partition), ``depth`` (half-space
depth certificate), ``plot`` (SVG for dimension 2).

Every report embeds a run manifest (command, input digest, seed,
parameters, tool version, timestamp).  Timestamps honor
SOURCE_DATE_EPOCH so archived runs can be reproduced byte for byte.

Exit codes: 0 success, 2 invalid input, 3 budget exceeded, 4 no
certified partition within the trial limit.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import List, Optional, Sequence

from . import __version__, gen
from .bounds import (
    carath_depth_bound,
    carath_guaranteed_depth,
    carath_slack,
    colored_slack,
    colored_tolerance_from_n,
    eps_slack,
    n_for_probability,
    plain_slack,
    reay_slack,
    reay_tolerance_from_m,
    tolerance_from_n,
)
from .depth import block_depth, depth
from .engine import (
    certified_colored_partition,
    certified_partition,
    certified_reay_partition,
)
from .geometry import config_to_json, load_config, save_config
from .limits import BUDGET_ENV_VAR, BudgetExceeded
from .linalg import as_vector
from .partition import Partition
from .plot import render_svg
from .verify import (
    EXHAUSTIVE,
    LIFTED,
    colored_tolerance,
    reay_tolerance,
    tolerance_by_lifted_depth,
    tolerance_exhaustive,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_ABSENT = 4

_METHODS = {"lifted": LIFTED, "exhaustive": EXHAUSTIVE}


def _timestamp() -> str:
    raw = os.environ.get("SOURCE_DATE_EPOCH")
    if raw is not None:
        try:
            epoch = int(raw)
        except ValueError as exc:
            raise ValueError("SOURCE_DATE_EPOCH must be an integer") from exc
    else:
        epoch = int(datetime.now(tz=timezone.utc).timestamp())
    return datetime.fromtimestamp(epoch, tz=timezone.utc).isoformat()


def _inputs_digest(paths: Sequence[str]) -> str:
    h = hashlib.sha256()
    for p in paths:
        data = Path(p).read_bytes()
        h.update(len(data).to_bytes(8, "big"))
        h.update(data)
    return h.hexdigest()


def _manifest(
    command: str,
    input_paths: Sequence[str],
    seed: Optional[int],
    parameters: dict,
) -> dict:
    return {
        "command": command,
        "inputs_digest": _inputs_digest(input_paths),
        "seed": seed,
        "parameters": parameters,
        "version": __version__,
        "timestamp": _timestamp(),
    }


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _write_json(path: str, obj: dict) -> None:
    Path(path).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _load_partition(path: str) -> Partition:
    return Partition.from_json(json.loads(Path(path).read_text()))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def cmd_bound(args: argparse.Namespace) -> int:
    params = {
        k: v
        for k, v in (
            ("n", args.n),
            ("d", args.d),
            ("r", args.r),
            ("k", args.k),
            ("t", args.t),
            ("eps", args.eps),
        )
        if v is not None
    }
    record: dict
    if args.formula == "plain":
        _require(args.n is not None, "plain needs --n")
        record = {
            "tolerance": tolerance_from_n(args.n, args.d, args.r),
            "lambda": plain_slack(args.n, args.d, args.r),
        }
    elif args.formula == "colored":
        _require(args.n is not None, "colored needs --n (number of classes)")
        record = {
            "tolerance": colored_tolerance_from_n(args.n, args.d, args.r),
            "lambda": colored_slack(args.n, args.d, args.r),
        }
    elif args.formula == "reay":
        _require(args.n is not None, "reay needs --n")
        _require(args.k is not None, "reay needs --k")
        record = {
            "tolerance": reay_tolerance_from_m(args.n, args.d, args.r, args.k),
            "lambda": reay_slack(args.n, args.d, args.r, args.k),
        }
    elif args.formula == "epsilon":
        _require(args.t is not None, "epsilon needs --t")
        _require(args.eps is not None, "epsilon needs --eps")
        n = n_for_probability(args.t, args.d, args.r, args.eps)
        record = {"n": n, "lambda": eps_slack(n, args.d, args.r, args.eps)}
    else:  # carath
        _require(args.n is not None, "carath needs --n")
        record = {
            "depth_bound": carath_depth_bound(args.n, args.d, args.r),
            "guaranteed_depth": carath_guaranteed_depth(args.n, args.d, args.r),
            "lambda": carath_slack(args.n, args.d, args.r),
        }
    record["formula"] = args.formula
    record["manifest"] = _manifest("bound", [], None, params)
    _emit(record)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "line":
        _require(args.n is not None, "line needs --n")
        cfg = gen.line_points(args.n)
    elif args.kind == "grid":
        _require(args.side is not None, "grid needs --side")
        cfg = gen.grid_points(args.side, args.dim)
    elif args.kind == "uniform-ball":
        _require(args.n is not None, "uniform-ball needs --n")
        cfg = gen.uniform_ball(args.n, args.dim, args.radius, args.seed)
    else:  # colored-classes
        _require(args.classes is not None, "colored-classes needs --classes")
        _require(args.r is not None, "colored-classes needs --r")
        cfg = gen.colored_classes(args.classes, args.r, args.dim, args.radius, args.seed)
    if args.out:
        save_config(cfg, args.out)
    else:
        _emit(config_to_json(cfg))
    return EXIT_OK


def _partition_params(args: argparse.Namespace) -> dict:
    params = {
        "mode": args.mode,
        "t_target": args.t,
        "max_trials": args.max_trials,
    }
    if args.r is not None:
        params["r"] = args.r
    if args.k is not None:
        params["k"] = args.k
    return params


def cmd_partition(args: argparse.Namespace) -> int:
    cfg = load_config(args.input)
    n = len(cfg.points)
    if args.mode == "plain":
        _require(args.r is not None, "plain mode needs --r")
        found = certified_partition(cfg, args.r, args.t, args.seed, args.max_trials)
    elif args.mode == "colored":
        _require(cfg.colors is not None, "colored mode needs a colored input")
        if args.r is not None:
            sizes = {len(v) for v in cfg.color_classes().values()}
            _require(
                sizes == {args.r},
                f"--r {args.r} does not match the class sizes {sorted(sizes)}",
            )
        found = certified_colored_partition(cfg, args.t, args.seed, args.max_trials)
    else:  # reay
        _require(args.r is not None, "reay mode needs --r")
        _require(args.k is not None, "reay mode needs --k")
        found = certified_reay_partition(
            cfg, args.r, args.k, args.t, args.seed, args.max_trials
        )

    if found is None:
        if args.mode == "colored":
            classes = len(cfg.color_classes())
            if args.t > classes - 1:
                sys.stderr.write(
                    f"unachievable: tolerance {args.t} would survive removing all "
                    f"{classes} classes\n"
                )
            else:
                sys.stderr.write(
                    f"no certified partition within {args.max_trials} trials\n"
                )
        elif args.r is not None and n <= args.r * args.t:
            sys.stderr.write(
                f"unachievable by pigeonhole: {n} points in {args.r} parts leave "
                f"some part with at most {args.t} points, and removing that part "
                f"empties it\n"
            )
        else:
            sys.stderr.write(
                f"no certified partition within {args.max_trials} trials\n"
            )
        return EXIT_ABSENT

    p, report = found
    manifest = _manifest(
        "partition", [args.input], args.seed, _partition_params(args)
    )
    partition_obj = {**p.to_json(), "manifest": manifest}
    report_obj = {**report.to_json(), "manifest": manifest}
    if args.out_partition:
        _write_json(args.out_partition, partition_obj)
    if args.out_report:
        _write_json(args.out_report, report_obj)
    _emit({"partition": p.to_json(), "report": report.to_json(), "manifest": manifest})
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = load_config(args.input)
    p = _load_partition(args.partition)
    method = _METHODS[args.method]
    if args.mode == "plain":
        if method == LIFTED:
            _require(
                args.t_cap is None, "--t-cap applies to the exhaustive method only"
            )
            report = tolerance_by_lifted_depth(cfg, p)
        else:
            report = tolerance_exhaustive(cfg, p, t_cap=args.t_cap, budget=args.budget)
    elif args.mode == "colored":
        report = colored_tolerance(
            cfg, p, method=method, t_cap=args.t_cap, budget=args.budget
        )
    else:  # reay
        _require(args.k is not None, "reay mode needs --k")
        report = reay_tolerance(cfg, p, args.k, method=method, budget=args.budget)
    params = {"mode": args.mode, "method": args.method}
    if args.k is not None:
        params["k"] = args.k
    if args.t_cap is not None:
        params["t_cap"] = args.t_cap
    if args.budget is not None:
        params["budget"] = args.budget
    manifest = _manifest("verify", [args.input, args.partition], None, params)
    _emit({**report.to_json(), "manifest": manifest})
    return EXIT_OK


def _parse_center(raw: Optional[str], dim: int):
    if raw is None:
        return (0,) * dim
    center = as_vector(raw.split(","))
    _require(len(center) == dim, f"center has {len(center)} coordinates, need {dim}")
    return center


def _parse_blocks(raw: str, n: int) -> List[List[int]]:
    blocks: List[List[int]] = []
    for chunk in raw.split(";"):
        members = [int(x) for x in chunk.split(",") if x.strip() != ""]
        blocks.append(members)
    flat = [i for b in blocks for i in b]
    _require(
        sorted(flat) == list(range(n)),
        "blocks must cover every point index exactly once",
    )
    return blocks


def cmd_depth(args: argparse.Namespace) -> int:
    cfg = load_config(args.input)
    center = _parse_center(args.center, cfg.dim)
    if args.blocks:
        cert = block_depth(cfg, _parse_blocks(args.blocks, len(cfg.points)), center)
    else:
        cert = depth(cfg, center)
    params = {}
    if args.center is not None:
        params["center"] = args.center
    if args.blocks:
        params["blocks"] = args.blocks
    manifest = _manifest("depth", [args.input], None, params)
    _emit({**cert.to_json(), "manifest": manifest})
    return EXIT_OK


def cmd_plot(args: argparse.Namespace) -> int:
    cfg = load_config(args.input)
    partition = _load_partition(args.partition) if args.partition else None
    removal: Optional[List[int]] = None
    if args.report:
        report = json.loads(Path(args.report).read_text())
        witness = report.get("witness_removal")
        if witness is not None:
            if report.get("unit") == "classes":
                _require(cfg.colors is not None, "class removal needs a colored input")
                wanted = set(witness)
                removal = [i for i, c in enumerate(cfg.colors) if c in wanted]
            else:
                removal = [int(i) for i in witness]
    svg = render_svg(cfg, partition=partition, removal=removal)
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tverberg",
        description="Tolerant Tverberg partitions: bounds, search, certificates.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="evaluate a closed-form guarantee")
    b.add_argument(
        "formula", choices=["plain", "colored", "reay", "epsilon", "carath"]
    )
    b.add_argument("--n", type=int, help="points (classes for colored)")
    b.add_argument("--d", type=int, required=True, help="dimension")
    b.add_argument("--r", type=int, required=True, help="number of parts")
    b.add_argument("--k", type=int, help="tuple size (reay)")
    b.add_argument("--t", type=int, help="target tolerance (epsilon)")
    b.add_argument("--eps", type=float, help="failure probability (epsilon)")
    b.set_defaults(func=cmd_bound)

    g = sub.add_parser("gen", help="generate a synthetic configuration")
    g.add_argument(
        "kind", choices=["uniform-ball", "grid", "line", "colored-classes"]
    )
    g.add_argument("--n", type=int, help="point count")
    g.add_argument("--dim", type=int, default=2)
    g.add_argument("--radius", type=int, default=1000)
    g.add_argument("--side", type=int, help="grid side length")
    g.add_argument("--classes", type=int, help="number of color classes")
    g.add_argument("--r", type=int, help="points per class")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", help="output file (default: stdout)")
    g.set_defaults(func=cmd_gen)

    p = sub.add_parser("partition", help="search for a certified partition")
    p.add_argument("input", help="configuration file (.json or .csv)")
    p.add_argument("--mode", choices=["plain", "colored", "reay"], default="plain")
    p.add_argument("--r", type=int, help="number of parts")
    p.add_argument("--k", type=int, help="tuple size (reay mode)")
    p.add_argument("--t", type=int, required=True, help="target tolerance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-trials", type=int, default=64)
    p.add_argument("--out-partition", help="write the partition JSON here")
    p.add_argument("--out-report", help="write the report JSON here")
    p.set_defaults(func=cmd_partition)

    v = sub.add_parser("verify", help="tolerance of a given partition")
    v.add_argument("input", help="configuration file")
    v.add_argument("partition", help="partition JSON file")
    v.add_argument("--mode", choices=["plain", "colored", "reay"], default="plain")
    v.add_argument("--method", choices=["lifted", "exhaustive"], default="lifted")
    v.add_argument("--k", type=int, help="tuple size (reay mode)")
    v.add_argument("--t-cap", type=int, help="cap the exhaustive scan")
    v.add_argument(
        "--budget",
        type=int,
        help=f"LP-call budget for exhaustive scans (default ${BUDGET_ENV_VAR} or 10^6)",
    )
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("depth", help="half-space depth certificate")
    d.add_argument("input", help="configuration file")
    d.add_argument("--center", help="comma-separated coordinates (default: origin)")
    d.add_argument(
        "--blocks",
        help="semicolon-separated index groups, e.g. '0,1;2,3' (block depth)",
    )
    d.set_defaults(func=cmd_depth)

    pl = sub.add_parser("plot", help="SVG plot (dimension 2 only)")
    pl.add_argument("input", help="configuration file")
    pl.add_argument("--partition", help="partition JSON file")
    pl.add_argument("--report", help="report JSON file (highlights its witness)")
    pl.add_argument("--out", help="output file (default: stdout)")
    pl.set_defaults(func=cmd_plot)

    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
