"""Command-line interface.

Subcommands: verify, gnf, search, mc-search, trajectory, sample,
forced-analyze, features.  Data artifacts go to files or standard
output; progress and summaries go to standard error.  Exit codes:
0 success (for verify: kernel element), 1 verify ran but the braid is
not in the kernel, 2 usage or parse errors.

Braid inputs are either a normal-form JSON file {"n":..,"inf":..,
"factors":[[..],..]} or an Artin word file (signed 1-based integers,
comma or whitespace separated, '#' comments).  Word files carry no
strand count: it is derived as 1 + max|letter| unless --n is given.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import braid as braidmod
from . import search as searchmod
from .braid import artin_letters, gnf_from_artin, load_braid_file
from .burau import BurauContext, burau_of_braid, burau_of_letters, kernel_check


def _load_input(path: str, n: int | None):
    return load_braid_file(path, n=n)


def _progress(stream):
    def callback(level, buckets, min_projlen, elapsed):
        print(
            f"level {level}: buckets={buckets} min_projlen={min_projlen} elapsed={elapsed:.2f}s",
            file=stream,
        )

    return callback


def _apply_overrides(config: searchmod.SearchConfig, args) -> searchmod.SearchConfig:
    for name in ("seed", "capacity", "max_level", "modulus", "threads"):
        value = getattr(args, name, None)
        if value is not None:
            setattr(config, name, value)
    if getattr(args, "stop_on_kernel", None) is not None:
        config.stop_on_kernel = args.stop_on_kernel
    config.__post_init__()
    return config


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args) -> int:
    b = _load_input(args.input, args.n)
    ctx = BurauContext(b.n, args.mod)
    matrix = burau_of_braid(ctx, b)
    print(f"strands: {b.n}")
    print(f"modulus: {args.mod if args.mod else '0 (integers)'}")
    print(f"inf: {b.inf}")
    print(f"garside_length: {b.garside_length}")
    if matrix.is_zero:
        raise ValueError("Burau matrix is zero; input is corrupt")
    print(f"deg: {matrix.deg}  val: {matrix.val}  projlen: {matrix.projlen}")
    if matrix.is_identity:
        if b.garside_length == 0 and b.inf == 0:
            print("kernel element (trivial braid)")
        elif args.mod == 0:
            # a nontrivial integral kernel element would be news; say so loudly
            print(f"kernel element over the integers (!), l_G={b.garside_length}")
        else:
            print(f"kernel element, l_G={b.garside_length}")
        return 0
    print("not a kernel element")
    return 1


def cmd_gnf(args) -> int:
    path = Path(args.input)
    text = path.read_text()
    if text.lstrip().startswith("{"):
        b = braidmod.braid_from_json_dict(json.loads(text))
    else:
        letters = braidmod.parse_artin_text(text)
        b = gnf_from_artin(letters, n=args.n)
        # round-trip certificate: the input word and the normal form have
        # the same Burau matrix over Z
        ctx = BurauContext(b.n, 0)
        if burau_of_letters(ctx, letters) != burau_of_braid(ctx, b):
            raise AssertionError("normal form round-trip failed (Burau mismatch over Z)")
    word_length = len(artin_letters(b))
    print(
        f"inf: {b.inf}  factors: {b.garside_length}  artin_length: {word_length}",
        file=sys.stderr,
    )
    print(braidmod.braid_to_json(b))
    return 0


def cmd_search(args) -> int:
    config = _apply_overrides(searchmod.load_search_config(args.config), args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    started = time.perf_counter()
    report = searchmod.run_search(config, progress=_progress(sys.stderr))
    searchmod.write_min_projlen_csv(report, out_dir / "min_projlen.csv")
    searchmod.write_kernels_jsonl(report, out_dir / "kernels.jsonl")
    print(
        f"levels run: {report.levels_run}  kernels found: {len(report.found)}  "
        f"elapsed: {time.perf_counter() - started:.2f}s",
        file=sys.stderr,
    )
    print(f"artifacts written to {out_dir}", file=sys.stderr)
    return 0


def cmd_mc_search(args) -> int:
    config = _apply_overrides(searchmod.load_search_config(args.config), args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    started = time.perf_counter()
    report = searchmod.mc_search(
        config,
        rollout=args.rollout,
        rounds=args.rounds,
        score_power=args.score_power,
        progress=_progress(sys.stderr),
    )
    searchmod.write_min_projlen_csv(report, out_dir / "min_projlen.csv")
    searchmod.write_kernels_jsonl(report, out_dir / "kernels.jsonl")
    print(
        f"deepest level: {report.levels_run}  kernels found: {len(report.found)}  "
        f"elapsed: {time.perf_counter() - started:.2f}s",
        file=sys.stderr,
    )
    return 0


def cmd_trajectory(args) -> int:
    b = _load_input(args.input, args.n)
    rows = searchmod.trajectory(b, args.mod)
    searchmod.write_trajectory_csv(rows, args.out)
    print(f"{len(rows)} prefix rows written to {args.out}", file=sys.stderr)
    return 0


def cmd_sample(args) -> int:
    import random

    rng = random.Random(args.seed)
    rows = searchmod.scatter_sample(args.n, args.max_len, args.per_len, args.mod, rng)
    searchmod.write_scatter_csv(rows, args.out)
    print(f"{len(rows)} sample rows written to {args.out}", file=sys.stderr)
    return 0


def cmd_forced_analyze(args) -> int:
    config = _apply_overrides(searchmod.load_search_config(args.config), args)
    if args.target is not None:
        config.forced_target = args.target
    if config.forced_target is None:
        raise ValueError("forced-analyze needs a target braid (argument or config forced_target)")
    target = braidmod.load_braid_file(config.forced_target, n=config.n)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    report, rows = searchmod.forced_run(config, target=target, progress=_progress(sys.stderr))
    searchmod.write_forced_csv(rows, config.capacity, out_dir / "forced.csv")
    searchmod.write_min_projlen_csv(report, out_dir / "min_projlen.csv")
    searchmod.write_kernels_jsonl(report, out_dir / "kernels.jsonl")
    probability = searchmod.discovery_probability((r for _i, r in rows), config.capacity)
    print(f"discovery_probability: {probability!r}")
    return 0


def cmd_features(args) -> int:
    b = _load_input(args.input, args.n)
    ctx = BurauContext(b.n, args.mod)
    # the mask encoding applies to positive parts, as in the search buckets
    matrix = burau_of_braid(ctx, braidmod.Braid(b.n, 0, b.factors))
    patterns = searchmod.coefficient_patterns(matrix, args.slices)
    text = json.dumps(patterns, separators=(",", ":")) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
        print(f"feature masks written to {args.out}", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_input(p, with_mod=True):
    p.add_argument("input", help="braid JSON file or Artin word file")
    p.add_argument("--n", type=int, default=None, help="strand count for word files")
    if with_mod:
        p.add_argument("--mod", type=int, default=0, help="coefficient modulus, 0 for Z")


def _add_search_overrides(p):
    p.add_argument("--out-dir", default=".", help="directory for CSV/JSONL artifacts")
    p.add_argument("--seed", type=int, default=None, help="override config seed")
    p.add_argument("--capacity", type=int, default=None, help="override bucket capacity")
    p.add_argument("--max-level", type=int, default=None, help="override level budget")
    p.add_argument("--modulus", type=int, default=None, help="override modulus")
    p.add_argument("--threads", type=int, default=None, help="parallel level sweep workers")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--stop-on-kernel", dest="stop_on_kernel", action="store_true", default=None)
    group.add_argument("--no-stop-on-kernel", dest="stop_on_kernel", action="store_false")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidsearch",
        description="Garside normal forms and reservoir searches for Burau kernel elements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="evaluate the Burau matrix and test kernel membership")
    _add_input(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gnf", help="normal form of an Artin word (braid JSON on stdout)")
    p.add_argument("input", help="Artin word file (or braid JSON, echoed normalized)")
    p.add_argument("--n", type=int, default=None, help="strand count for word files")
    p.set_defaults(func=cmd_gnf)

    p = sub.add_parser("search", help="level-by-level reservoir search")
    p.add_argument("config", help="SearchConfig JSON file")
    _add_search_overrides(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("mc-search", help="database-guided search with scored rollouts")
    p.add_argument("config", help="SearchConfig JSON file")
    _add_search_overrides(p)
    p.add_argument("--rollout", type=int, default=None, help="levels per rollout")
    p.add_argument("--rounds", type=int, default=None, help="node draws before stopping")
    p.add_argument("--score-power", type=float, default=2.0, help="sampling weight exponent")
    p.set_defaults(func=cmd_mc_search)

    p = sub.add_parser("trajectory", help="projlen of each Garside prefix")
    _add_input(p)
    p.add_argument("--out", default="trajectory.csv", help="output CSV path")
    p.set_defaults(func=cmd_trajectory)

    p = sub.add_parser("sample", help="random-walk scatter of half projlen vs Garside length")
    p.add_argument("--n", type=int, default=4, help="strand count")
    p.add_argument("--max-len", type=int, default=50, help="largest Garside length")
    p.add_argument("--per-len", type=int, default=1000, help="samples per length")
    p.add_argument("--mod", type=int, default=0, help="coefficient modulus, 0 for Z")
    p.add_argument("--seed", type=int, default=0, help="RNG seed")
    p.add_argument("--out", default="scatter.csv", help="output CSV path")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("forced-analyze", help="forced run along a target braid's prefixes")
    p.add_argument("config", help="SearchConfig JSON file")
    p.add_argument("target", nargs="?", default=None, help="target braid file (overrides config)")
    _add_search_overrides(p)
    p.set_defaults(func=cmd_forced_analyze)

    p = sub.add_parser("features", help="zero-one coefficient masks of the positive part")
    _add_input(p)
    p.add_argument("--slices", type=int, default=3, help="leading/trailing slice count")
    p.add_argument("--out", default=None, help="output JSON path (default stdout)")
    p.set_defaults(func=cmd_features)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, AssertionError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
