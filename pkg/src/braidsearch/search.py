"""Reservoir-bucket search for Burau kernel elements.

Positive braids are explored level by level (level = Garside length).
Each braid of level l sits in the bucket keyed (l, m) where m is the
projlen of its mod-m Burau matrix; every bucket is a capacity-k uniform
reservoir (Vitter's Algorithm R), so each braid offered to a bucket is
retained with probability min(1, k / offers).  Extending every stored
braid by every valid Garside suffix produces the offers for level l+1,
and only the two most recent levels are ever alive.

A braid whose matrix lands in the m == 0 bucket and equals the matrix of
Delta^d is a witness that Delta^-d times the braid is in the kernel;
projlen-0 braids that fail that comparison are merely projectively
trivial and are reported separately.

Matrices are carried in the band representation when the modulus fits
(2..255) and as exact LaurentMatrix values otherwise (including modulus
0, i.e. Z).  Found kernels are always re-verified through the exact
route before being reported.
"""

from __future__ import annotations

import csv
import hashlib
import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import braid as braidmod
from . import permutations as perm
from .bandkernel import BandMatrix, band_supported
from .braid import Braid
from .burau import BurauContext, kernel_check
from .laurent import LaurentMatrix

# ---------------------------------------------------------------------------
# configuration


@dataclass
class SearchConfig:
    n: int
    modulus: int
    capacity: int
    max_level: int
    seed: int
    stop_on_kernel: bool = True
    forced_target: str | None = None
    threads: int = 1
    rollout: int | None = None  # mc-search only
    rounds: int | None = None  # mc-search only

    _KEYS = {
        "n", "modulus", "capacity", "max_level", "seed",
        "stop_on_kernel", "forced_target", "threads", "rollout", "rounds",
    }

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError("modulus must be 0 (Z) or >= 2")
        if self.capacity < 1:
            raise ValueError("capacity must be positive")
        if self.max_level < 1:
            raise ValueError("max_level must be positive")
        if self.threads < 1:
            raise ValueError("threads must be positive")

    @classmethod
    def from_json_dict(cls, data: dict) -> "SearchConfig":
        if not isinstance(data, dict):
            raise ValueError("search config must be a JSON object")
        unknown = set(data) - cls._KEYS
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        missing = {"n", "modulus", "capacity", "max_level", "seed"} - set(data)
        if missing:
            raise ValueError(f"missing config keys: {sorted(missing)}")
        return cls(**data)

    def to_json_dict(self) -> dict:
        out = {
            "n": self.n,
            "modulus": self.modulus,
            "capacity": self.capacity,
            "max_level": self.max_level,
            "seed": self.seed,
            "stop_on_kernel": self.stop_on_kernel,
            "forced_target": self.forced_target,
        }
        if self.threads != 1:
            out["threads"] = self.threads
        if self.rollout is not None:
            out["rollout"] = self.rollout
        if self.rounds is not None:
            out["rounds"] = self.rounds
        return out


def load_search_config(path) -> SearchConfig:
    return SearchConfig.from_json_dict(json.loads(Path(path).read_text()))


# ---------------------------------------------------------------------------
# buckets


@dataclass
class BucketItem:
    braid: Braid
    matrix: object  # BandMatrix or LaurentMatrix, per engine


class Bucket:
    """A uniform reservoir of fixed capacity (Algorithm R)."""

    __slots__ = ("capacity", "seen", "items")

    def __init__(self, capacity: int):
        self.capacity = capacity
        self.seen = 0
        self.items: list[BucketItem] = []

    def offer(self, item: BucketItem, rng: random.Random) -> bool:
        """Count one offer; retain it with probability min(1, k/seen)."""
        slot = self.reserve(rng)
        if slot is None:
            return False
        self.place(slot, item)
        return True

    def reserve(self, rng: random.Random) -> int | None:
        """The offer-counting half of offer(); returns the slot or None."""
        self.seen += 1
        if len(self.items) < self.capacity:
            return len(self.items)
        j = rng.randrange(self.seen)
        return j if j < self.capacity else None

    def place(self, slot: int, item: BucketItem) -> None:
        if slot == len(self.items):
            self.items.append(item)
        else:
            self.items[slot] = item

    def force_insert(self, item: BucketItem, rng: random.Random) -> None:
        """Guarantee presence without counting an offer (forced runs only).

        Called once a level's sweep is complete; evicts a uniformly random
        slot when full, and does nothing if the braid is already present.
        """
        if any(existing.braid == item.braid for existing in self.items):
            return
        if len(self.items) < self.capacity:
            self.items.append(item)
        else:
            self.items[rng.randrange(len(self.items))] = item


Frontier = dict[int, Bucket]


# ---------------------------------------------------------------------------
# matrix engines: band form when the modulus allows it, exact otherwise


class ExactEngine:
    def __init__(self, ctx: BurauContext):
        self.ctx = ctx

    def identity_matrix(self) -> LaurentMatrix:
        return self.ctx.identity()

    def extend(self, matrix: LaurentMatrix, u: perm.Perm) -> LaurentMatrix:
        return matrix * self.ctx.lift(u)

    def projlen(self, matrix: LaurentMatrix) -> int:
        return matrix.projlen

    def is_delta_power(self, matrix: LaurentMatrix, d: int) -> bool:
        return matrix == self.ctx.delta_pow(d)

    def to_laurent(self, matrix: LaurentMatrix) -> LaurentMatrix:
        return matrix


class BandEngine:
    def __init__(self, ctx: BurauContext):
        if not ctx.supports_band():
            raise ValueError("band engine needs 2 <= modulus <= 255")
        self.ctx = ctx

    def identity_matrix(self) -> BandMatrix:
        return BandMatrix.identity(self.ctx.modulus, self.ctx.size)

    def extend(self, matrix: BandMatrix, u: perm.Perm) -> BandMatrix:
        return matrix * self.ctx.lift_band(u)

    def projlen(self, matrix: BandMatrix) -> int:
        return matrix.projlen

    def is_delta_power(self, matrix: BandMatrix, d: int) -> bool:
        return matrix == self.ctx.delta_pow_band(d)

    def to_laurent(self, matrix: BandMatrix) -> LaurentMatrix:
        return matrix.to_laurent()


def make_engine(n: int, modulus: int):
    ctx = BurauContext(n, modulus)
    return BandEngine(ctx) if band_supported(modulus) else ExactEngine(ctx)


def item_matrix(engine, item: BucketItem) -> LaurentMatrix:
    """The exact LaurentMatrix view of a bucket item's matrix."""
    return engine.to_laurent(item.matrix)


# ---------------------------------------------------------------------------
# level sweep

_CHUNK = 256  # items expanded per parallel batch, bounds buffered children


def _item_rng(seed: int, level: int, index: int) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{level}:{index}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _expand(engine, item: BucketItem):
    out = []
    for u in braidmod.garside_suffixes(item.braid):
        matrix = engine.extend(item.matrix, u)
        out.append((engine.projlen(matrix), u, matrix))
    return out


def search_step(
    level: int,
    previous: Frontier,
    config: SearchConfig,
    rng: random.Random,
    engine=None,
) -> Frontier:
    """Expand every stored braid of the previous level by every Garside
    suffix and offer the children to the new level's reservoirs.

    Single-threaded runs consume one RNG stream in a fixed sweep order.
    With config.threads > 1 the matrix products are computed by a thread
    pool and every source item draws from its own RNG derived from
    (seed, level, item index), so results do not depend on the worker
    count or the partitioning, only on the mode.
    """
    if engine is None:
        engine = make_engine(config.n, config.modulus)
    new: Frontier = {}
    source = [item for m in sorted(previous) for item in previous[m].items]

    def offer_children(item, children, child_rng):
        for m2, u, matrix in children:
            bucket = new.get(m2)
            if bucket is None:
                bucket = new[m2] = Bucket(config.capacity)
            slot = bucket.reserve(child_rng)
            if slot is not None:
                bucket.place(slot, BucketItem(item.braid.append(u), matrix))

    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            for start in range(0, len(source), _CHUNK):
                chunk = source[start : start + _CHUNK]
                for offset, (item, children) in enumerate(
                    zip(chunk, pool.map(lambda it: _expand(engine, it), chunk))
                ):
                    offer_children(item, children, _item_rng(config.seed, level, start + offset))
    else:
        for item in source:
            offer_children(item, _expand(engine, item), rng)
    return new


def _initial_frontier(engine, config: SearchConfig) -> Frontier:
    bucket = Bucket(config.capacity)
    bucket.seen = 1
    bucket.items.append(BucketItem(braidmod.trivial(config.n), engine.identity_matrix()))
    return {0: bucket}


def _scan_projlen_zero(engine, bucket: Bucket, level: int, half: int):
    """Classify the m == 0 bucket: kernel witnesses vs scalar matrices."""
    found: dict[Braid, Braid] = {}
    scalars: dict[Braid, Braid] = {}
    for item in bucket.items:
        if item.braid in found or item.braid in scalars:
            continue
        e = item.braid.exponent_sum()
        if e % half == 0 and engine.is_delta_power(item.matrix, e // half):
            kernel_braid = Braid(item.braid.n, -(e // half), item.braid.factors)
            if not kernel_check(engine.ctx, kernel_braid):
                raise AssertionError(
                    f"band route reported a kernel element the exact route rejects: {kernel_braid}"
                )
            found[item.braid] = kernel_braid
        else:
            scalars[item.braid] = item.braid
    return (
        [(b, level) for b in found.values()],
        [(b, level) for b in scalars.values()],
    )


# ---------------------------------------------------------------------------
# report


@dataclass
class SearchReport:
    seed: int
    found: list[tuple[Braid, int]] = field(default_factory=list)
    scalar_hits: list[tuple[Braid, int]] = field(default_factory=list)
    min_projlen_per_level: dict[int, int] = field(default_factory=dict)
    bucket_stats: dict[tuple[int, int], int] = field(default_factory=dict)
    levels_run: int = 0

    def to_json_dict(self) -> dict:
        return {
            "seed": self.seed,
            "levels_run": self.levels_run,
            "found": [
                [braidmod.braid_to_json_dict(b), level] for b, level in self.found
            ],
            "scalar_hits": [
                [braidmod.braid_to_json_dict(b), level] for b, level in self.scalar_hits
            ],
            "min_projlen_per_level": [
                [level, m] for level, m in sorted(self.min_projlen_per_level.items())
            ],
            "bucket_stats": [
                [level, m, seen] for (level, m), seen in sorted(self.bucket_stats.items())
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))


# ---------------------------------------------------------------------------
# full runs


def _run(config: SearchConfig, target: Braid | None, progress=None):
    engine = make_engine(config.n, config.modulus)
    rng = random.Random(config.seed)
    half = perm.length(perm.longest_element(config.n))
    report = SearchReport(seed=config.seed)
    forced_rows: list[tuple[int, int]] = []

    target_prefix_matrices: list = []
    if target is not None:
        if target.n != config.n:
            raise ValueError("forced target strand count differs from config")
        matrix = engine.identity_matrix()
        for w in target.factors:
            matrix = engine.extend(matrix, w)
            target_prefix_matrices.append(matrix)

    frontier = _initial_frontier(engine, config)
    for level in range(1, config.max_level + 1):
        started = time.perf_counter()
        frontier = search_step(level, frontier, config, rng, engine)
        if not frontier:
            break
        report.levels_run = level

        if target is not None and level <= target.garside_length:
            matrix = target_prefix_matrices[level - 1]
            m_t = engine.projlen(matrix)
            bucket = frontier.get(m_t)
            if bucket is None:
                bucket = frontier[m_t] = Bucket(config.capacity)
            prefix_positive = Braid(target.n, 0, target.factors[:level])
            bucket.force_insert(BucketItem(prefix_positive, matrix), rng)
            forced_rows.append((level, bucket.seen))

        if 0 in frontier:
            found, scalars = _scan_projlen_zero(engine, frontier[0], level, half)
            report.found.extend(found)
            report.scalar_hits.extend(scalars)

        for m in sorted(frontier):
            report.bucket_stats[(level, m)] = frontier[m].seen
        report.min_projlen_per_level[level] = min(frontier)

        if progress is not None:
            progress(level, len(frontier), min(frontier), time.perf_counter() - started)
        if report.found and config.stop_on_kernel:
            break
    return report, forced_rows


def _load_target(config: SearchConfig) -> Braid | None:
    if config.forced_target is None:
        return None
    return braidmod.load_braid_file(config.forced_target, n=config.n)


def run_search(config: SearchConfig, target: Braid | None = None, progress=None) -> SearchReport:
    """Run the level sweep to max_level (or the first kernel hit)."""
    if target is None:
        target = _load_target(config)
    report, _ = _run(config, target, progress)
    return report


def forced_run(
    config: SearchConfig, target: Braid | None = None, progress=None
) -> tuple[SearchReport, list[tuple[int, int]]]:
    """Run with the target's prefixes pinned into their buckets.

    Returns the report plus one (prefix_index, offers_seen) row per level
    up to the target's Garside length; offers_seen is the r value in the
    discovery-probability estimate.
    """
    if target is None:
        target = _load_target(config)
    if target is None:
        raise ValueError("forced run requires a target braid")
    return _run(config, target, progress)


def discovery_probability(offer_counts, capacity: int) -> float:
    """prod min(1, k/r): chance an unforced run keeps every prefix alive."""
    p = 1.0
    for r in offer_counts:
        if r > capacity:
            p *= capacity / r
    return p


# ---------------------------------------------------------------------------
# trajectories, random walks, sampling


def trajectory(b: Braid, modulus: int) -> list[tuple[int, int, int]]:
    """(prefix_index, garside_length, projlen) for each nonempty prefix.

    The Delta power is ignored: projlen is invariant under multiplying by
    Delta, so the trajectory of Delta^d w_1...w_l equals that of its
    positive part.
    """
    engine = make_engine(b.n, modulus)
    rows = []
    matrix = engine.identity_matrix()
    for k, w in enumerate(b.factors, 1):
        matrix = engine.extend(matrix, w)
        rows.append((k, k, engine.projlen(matrix)))
    return rows


def random_braid_walk(n: int, length: int, rng: random.Random) -> Braid:
    """A positive normal form built by uniform valid-suffix steps."""
    b = braidmod.trivial(n)
    for _ in range(length):
        b = b.append(rng.choice(braidmod.garside_suffixes(b)))
    return b


def scatter_sample(
    n: int, max_len: int, per_len: int, modulus: int, rng: random.Random
) -> list[tuple[int, float]]:
    """(garside_length, half_projlen) for per_len fresh walks per length."""
    engine = make_engine(n, modulus)
    rows = []
    for length in range(1, max_len + 1):
        for _ in range(per_len):
            b = random_braid_walk(n, length, rng)
            matrix = engine.identity_matrix()
            for w in b.factors:
                matrix = engine.extend(matrix, w)
            rows.append((length, engine.projlen(matrix) / 2))
    return rows


# ---------------------------------------------------------------------------
# database-guided search


@dataclass
class ScoredNode:
    braid: Braid
    matrix: object
    score: float


def mc_search(
    config: SearchConfig,
    rollout: int | None = None,
    rounds: int | None = None,
    score_power: float = 2.0,
    progress=None,
) -> SearchReport:
    """Database-guided variant: keep a pool of scored start nodes, pick one
    with probability proportional to score**score_power, run a reservoir
    rollout from each of its Garside suffixes, and score each suffix by

        (1 + best_level_reached - suffix_level) / (1 + min_projlen_seen)

    so suffixes whose rollouts approach projlen 0 dominate later draws.
    """
    rollout = rollout if rollout is not None else (config.rollout or 10)
    rounds = rounds if rounds is not None else (config.rounds or 50)
    engine = make_engine(config.n, config.modulus)
    rng = random.Random(config.seed)
    half = perm.length(perm.longest_element(config.n))
    report = SearchReport(seed=config.seed)
    db = [ScoredNode(braidmod.trivial(config.n), engine.identity_matrix(), 1.0)]

    for round_index in range(rounds):
        node = rng.choices(db, weights=[x.score**score_power for x in db], k=1)[0]
        if node.braid.garside_length >= config.max_level:
            continue
        for u in braidmod.garside_suffixes(node.braid):
            child = node.braid.append(u)
            child_matrix = engine.extend(node.matrix, u)
            child_level = child.garside_length
            child_m = engine.projlen(child_matrix)

            bucket = Bucket(config.capacity)
            bucket.seen = 1
            bucket.items.append(BucketItem(child, child_matrix))
            frontier: Frontier = {child_m: bucket}
            if child_m == 0:
                found, scalars = _scan_projlen_zero(engine, bucket, child_level, half)
                report.found.extend(found)
                report.scalar_hits.extend(scalars)

            min_seen = child_m
            best_level = child_level
            for step in range(1, rollout + 1):
                level = child_level + step
                if level > config.max_level or (report.found and config.stop_on_kernel):
                    break
                frontier = search_step(level, frontier, config, rng, engine)
                if not frontier:
                    break
                best_level = level
                min_seen = min(min_seen, min(frontier))
                if 0 in frontier:
                    found, scalars = _scan_projlen_zero(engine, frontier[0], level, half)
                    report.found.extend(found)
                    report.scalar_hits.extend(scalars)
                for m in sorted(frontier):
                    key = (level, m)
                    report.bucket_stats[key] = report.bucket_stats.get(key, 0) + frontier[m].seen
                prev = report.min_projlen_per_level.get(level)
                report.min_projlen_per_level[level] = (
                    min(frontier) if prev is None else min(prev, min(frontier))
                )
            report.levels_run = max(report.levels_run, best_level)
            db.append(ScoredNode(child, child_matrix, (1 + best_level - child_level) / (1 + min_seen)))
            if report.found and config.stop_on_kernel:
                break
        if progress is not None:
            progress(round_index + 1, len(db), min(report.min_projlen_per_level.values(), default=0), 0.0)
        if report.found and config.stop_on_kernel:
            break
    return report


# ---------------------------------------------------------------------------
# feature export


def coefficient_patterns(matrix: LaurentMatrix | BandMatrix, slices: int) -> dict:
    """Zero-one masks of the nonzero coefficient positions.

    The matrix is written as coefficient slices M_0..M_P with P = projlen
    (exponents shifted so the valuation sits at 0); the export keeps the
    leading slices M_0..M_k and the trailing k slices, each as a 0/1
    matrix marking nonzero entries.
    """
    if slices < 0:
        raise ValueError("slice count must be nonnegative")
    if isinstance(matrix, BandMatrix):
        matrix = matrix.to_laurent()
    val, deg = matrix.val, matrix.deg
    width = deg - val + 1
    size = matrix.size
    masks = [[[0] * size for _ in range(size)] for _ in range(width)]
    for i, row in enumerate(matrix.rows):
        for j, p in enumerate(row):
            for e in p.terms:
                masks[e - val][i][j] = 1
    projlen = width - 1
    leading = list(range(0, min(slices, projlen) + 1))
    trailing = list(range(max(projlen - slices + 1, 0), projlen + 1))
    return {
        "size": size,
        "modulus": matrix.modulus,
        "projlen": projlen,
        "slices": slices,
        "leading": [masks[t] for t in leading],
        "trailing": [masks[t] for t in trailing],
    }


# ---------------------------------------------------------------------------
# artifact writers (byte-deterministic for a fixed config and seed)


def _writer(handle):
    return csv.writer(handle, lineterminator="\n")


def write_min_projlen_csv(report: SearchReport, path) -> None:
    with open(path, "w", newline="") as handle:
        out = _writer(handle)
        out.writerow(["level", "min_projlen"])
        for level, m in sorted(report.min_projlen_per_level.items()):
            out.writerow([level, m])


def write_kernels_jsonl(report: SearchReport, path) -> None:
    with open(path, "w") as handle:
        for b, _level in report.found:
            handle.write(braidmod.braid_to_json(b) + "\n")


def write_trajectory_csv(rows, path) -> None:
    with open(path, "w", newline="") as handle:
        out = _writer(handle)
        out.writerow(["prefix_index", "garside_length", "projlen"])
        for row in rows:
            out.writerow(list(row))


def write_forced_csv(rows, capacity: int, path) -> None:
    with open(path, "w", newline="") as handle:
        out = _writer(handle)
        out.writerow(["prefix_index", "r", "k"])
        for prefix_index, r in rows:
            out.writerow([prefix_index, r, capacity])


def write_scatter_csv(rows, path) -> None:
    with open(path, "w", newline="") as handle:
        out = _writer(handle)
        out.writerow(["garside_length", "half_projlen"])
        for length, half in rows:
            out.writerow([length, format(half, "g")])
