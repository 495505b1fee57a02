"""Residue search for left factorial counterexamples over prime ranges.

A counterexample is an odd prime p with !p = 0 (mod p). The search sieves
primes in [lo, hi), folds k = 1 .. p-1 through a lane-vectorized numpy
kernel (one lane per prime), and commits results block by block behind a
contiguous frontier so a checkpoint always describes a clean prefix.
Reports are canonical: the same range yields byte-identical output no
matter the worker count or how often the run was interrupted.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .discrepancy import MATCH, MISMATCH, DiscrepancyReport

CHECKPOINT_VERSION = 1
HISTOGRAM_BUCKETS = 256
DEFAULT_LANES = 4096

_CHECKPOINT_KEYS = (
    "version",
    "lo",
    "hi",
    "last_completed",
    "counterexamples",
    "histogram",
    "wall_seconds",
    "finished",
)


class CheckpointFormatError(ValueError):
    """Checkpoint file is structurally invalid."""


class CheckpointMismatchError(ValueError):
    """Checkpoint file does not describe the requested run."""


def _small_primes(n: int) -> list[int]:
    # plain sieve up to n inclusive; feeds the segmented sieve with base primes
    if n < 2:
        return []
    mask = bytearray([1]) * (n + 1)
    mask[0] = mask[1] = 0
    for q in range(2, math.isqrt(n) + 1):
        if mask[q]:
            mask[q * q :: q] = b"\x00" * len(range(q * q, n + 1, q))
    return [i for i, b in enumerate(mask) if b]


def sieve_primes(lo: int, hi: int, segment: int = 1 << 18) -> Iterator[int]:
    """Yield the primes in [lo, hi) using O(sqrt(hi) + segment) memory."""
    if hi <= lo:
        return
    lo = max(lo, 2)
    base = _small_primes(math.isqrt(max(hi - 1, 0)))
    for seg_lo in range(lo, hi, segment):
        seg_hi = min(seg_lo + segment, hi)
        mask = bytearray([1]) * (seg_hi - seg_lo)
        for q in base:
            if q * q >= seg_hi:
                break
            start = max(q * q, ((seg_lo + q - 1) // q) * q)
            mask[start - seg_lo :: q] = b"\x00" * len(range(start, seg_hi, q))
        for i, b in enumerate(mask):
            if b:
                yield seg_lo + i


def left_factorial_mod(p: int) -> int:
    """!p mod p in one pass; works for any modulus p >= 1."""
    if p < 1:
        raise ValueError("left_factorial_mod requires p >= 1")
    f = acc = 1
    for k in range(1, p):
        f = f * k % p
        acc += f
    return acc % p


def block_residues(primes: Sequence[int]) -> list[int]:
    """!p mod p for a strictly increasing block of moduli.

    Consecutive primes share most of their k range, so the block is folded
    as uint64 lanes: f and acc advance together and a lane drops out once
    k reaches its modulus. acc stays below pmax^2 < 2^64, so it is reduced
    only at the end. Moduli at or above 2^32 fall back to the scalar path.
    """
    if not primes:
        return []
    if any(b <= a for a, b in zip(primes, primes[1:])):
        raise ValueError("block_residues requires strictly increasing moduli")
    if primes[0] < 2:
        raise ValueError("block_residues requires moduli >= 2")
    pmax = primes[-1]
    if pmax >= 1 << 32:
        return [left_factorial_mod(p) for p in primes]
    ps = np.asarray(primes, dtype=np.uint64)
    f = np.ones(len(ps), dtype=np.uint64)
    acc = np.ones(len(ps), dtype=np.uint64)
    start = 0
    for k in range(1, pmax):
        while start < len(ps) and primes[start] <= k:
            start += 1
        if start == len(ps):
            break
        sl = slice(start, None)
        f[sl] = f[sl] * np.uint64(k) % ps[sl]
        acc[sl] += f[sl]
    return [int(r) for r in acc % ps]


@dataclass(frozen=True)
class ResidueRecord:
    p: int
    residue: int

    @property
    def bucket(self) -> int:
        # histogram bucket under the uniform map floor(256 r / p)
        return HISTOGRAM_BUCKETS * self.residue // self.p

    @property
    def is_counterexample(self) -> bool:
        return self.p > 2 and self.residue == 0


def residue_records(primes: Sequence[int]) -> list[ResidueRecord]:
    return [ResidueRecord(p, r) for p, r in zip(primes, block_residues(primes))]


@dataclass
class SearchCheckpoint:
    """Resumable search state: primes in [lo, last_completed) are done."""

    lo: int
    hi: int
    last_completed: int
    counterexamples: list[int] = field(default_factory=list)
    histogram: list[int] | None = None
    wall_seconds: float = 0.0
    finished: bool = False
    version: int = CHECKPOINT_VERSION

    def to_json(self) -> str:
        payload = {key: getattr(self, key) for key in _CHECKPOINT_KEYS}
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise CheckpointFormatError(message)


def _is_int(value: object) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def checkpoint_from_json(text: str) -> SearchCheckpoint:
    """Parse and validate checkpoint JSON; unknown keys are rejected."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CheckpointFormatError(f"checkpoint is not valid JSON: {exc}") from exc
    _require(isinstance(payload, dict), "checkpoint must be a JSON object")
    extra = set(payload) - set(_CHECKPOINT_KEYS)
    missing = set(_CHECKPOINT_KEYS) - set(payload)
    _require(not extra, f"unknown checkpoint keys: {sorted(extra)}")
    _require(not missing, f"missing checkpoint keys: {sorted(missing)}")
    _require(payload["version"] == CHECKPOINT_VERSION, "unsupported checkpoint version")
    lo, hi, last = payload["lo"], payload["hi"], payload["last_completed"]
    _require(all(_is_int(v) for v in (lo, hi, last)), "range fields must be integers")
    _require(2 <= lo < hi, "checkpoint range must satisfy 2 <= lo < hi")
    _require(lo <= last <= hi, "last_completed must lie in [lo, hi]")
    cex = payload["counterexamples"]
    _require(isinstance(cex, list) and all(_is_int(p) for p in cex), "counterexamples must be a list of integers")
    hist = payload["histogram"]
    if hist is not None:
        _require(
            isinstance(hist, list)
            and len(hist) == HISTOGRAM_BUCKETS
            and all(_is_int(c) and c >= 0 for c in hist),
            f"histogram must be null or {HISTOGRAM_BUCKETS} nonnegative integers",
        )
    wall = payload["wall_seconds"]
    _require(isinstance(wall, (int, float)) and not isinstance(wall, bool) and wall >= 0, "wall_seconds must be nonnegative")
    finished = payload["finished"]
    _require(isinstance(finished, bool), "finished must be a boolean")
    if finished:
        _require(last == hi, "a finished checkpoint must have last_completed == hi")
    return SearchCheckpoint(
        lo=lo,
        hi=hi,
        last_completed=last,
        counterexamples=list(cex),
        histogram=list(hist) if hist is not None else None,
        wall_seconds=float(wall),
        finished=finished,
    )


def load_checkpoint(path: str) -> SearchCheckpoint:
    with open(path, encoding="utf-8") as fh:
        return checkpoint_from_json(fh.read())


def save_checkpoint(ck: SearchCheckpoint, path: str) -> None:
    """Write atomically: temp file in the same directory, then replace."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".checkpoint-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(ck.to_json())
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def canonical_report(ck: SearchCheckpoint) -> str:
    """Deterministic summary of a search; wall_seconds is deliberately absent
    so reports from different worker counts or resume patterns compare equal.
    """
    payload = {key: getattr(ck, key) for key in _CHECKPOINT_KEYS if key != "wall_seconds"}
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _block_worker(idx: int, primes: list[int]) -> tuple[int, list[int], list[int]]:
    residues = block_residues(primes)
    cex = [p for p, r in zip(primes, residues) if r == 0 and p > 2]
    ps = np.asarray(primes, dtype=np.uint64)
    rs = np.asarray(residues, dtype=np.uint64)
    buckets = (np.uint64(HISTOGRAM_BUCKETS) * rs // ps).astype(np.int64)
    hist = np.bincount(buckets, minlength=HISTOGRAM_BUCKETS)
    return idx, cex, [int(c) for c in hist]


def _chunked(it: Iterator[int], size: int) -> Iterator[list[int]]:
    chunk: list[int] = []
    for value in it:
        chunk.append(value)
        if len(chunk) == size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def run_search(
    lo: int,
    hi: int,
    workers: int = 1,
    histogram: bool = False,
    checkpoint_path: str | None = None,
    checkpoint_interval: float = 30.0,
    block_limit: int | None = None,
    lanes: int = DEFAULT_LANES,
) -> SearchCheckpoint:
    """Search all primes in [lo, hi) for left factorial counterexamples.

    Results commit strictly in block order even when workers finish out of
    order, so last_completed always bounds a fully searched prefix. With
    checkpoint_path the state is persisted atomically at least every
    checkpoint_interval seconds and once more on exit; an existing file for
    the same range is resumed. block_limit stops the run early after that
    many committed blocks (a test hook standing in for a killed process).
    """
    if lo < 2:
        raise ValueError("run_search requires lo >= 2")
    if hi <= lo:
        raise ValueError("run_search requires hi > lo")
    if workers < 1:
        raise ValueError("run_search requires workers >= 1")
    if lanes < 1:
        raise ValueError("run_search requires lanes >= 1")

    if checkpoint_path is not None and os.path.exists(checkpoint_path):
        ck = load_checkpoint(checkpoint_path)
        if (ck.lo, ck.hi) != (lo, hi):
            raise CheckpointMismatchError(
                f"checkpoint covers [{ck.lo}, {ck.hi}), requested [{lo}, {hi})"
            )
        if (ck.histogram is not None) != histogram:
            raise CheckpointMismatchError(
                "histogram setting differs from the checkpoint; rerun with the original setting"
            )
        if ck.finished:
            return ck
    else:
        ck = SearchCheckpoint(
            lo=lo,
            hi=hi,
            last_completed=lo,
            histogram=[0] * HISTOGRAM_BUCKETS if histogram else None,
        )

    started = time.monotonic()
    base_wall = ck.wall_seconds
    last_save = started
    hist = np.array(ck.histogram, dtype=np.int64) if ck.histogram is not None else None

    block_iter = _chunked(sieve_primes(ck.last_completed, hi), lanes)
    next_submit = 0
    exhausted = False
    tops: dict[int, int] = {}

    def take_block() -> tuple[int, list[int]] | None:
        nonlocal next_submit, exhausted
        if exhausted:
            return None
        primes = next(block_iter, None)
        if primes is None:
            exhausted = True
            return None
        idx = next_submit
        next_submit += 1
        tops[idx] = primes[-1]
        return idx, primes

    next_commit = 0
    commits = 0
    stopped = False

    def commit(idx: int, cex: list[int], block_hist: list[int]) -> None:
        nonlocal commits, hist
        ck.counterexamples.extend(cex)
        if hist is not None:
            hist += np.array(block_hist, dtype=np.int64)
            ck.histogram = [int(c) for c in hist]
        ck.last_completed = tops.pop(idx) + 1
        commits += 1

    def maybe_save() -> None:
        nonlocal last_save
        now = time.monotonic()
        if checkpoint_path is not None and now - last_save >= checkpoint_interval:
            ck.wall_seconds = base_wall + (now - started)
            save_checkpoint(ck, checkpoint_path)
            last_save = now

    if checkpoint_path is not None and not os.path.exists(checkpoint_path):
        save_checkpoint(ck, checkpoint_path)

    if workers == 1:
        while not stopped:
            item = take_block()
            if item is None:
                break
            idx, primes = item
            _, cex, block_hist = _block_worker(idx, primes)
            commit(idx, cex, block_hist)
            next_commit = idx + 1
            maybe_save()
            if block_limit is not None and commits >= block_limit:
                stopped = True
    else:
        pending: dict[int, tuple[list[int], list[int]]] = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures: dict[object, int] = {}

            def top_up() -> None:
                while len(futures) < 2 * workers:
                    item = take_block()
                    if item is None:
                        return
                    idx, primes = item
                    futures[pool.submit(_block_worker, idx, primes)] = idx

            top_up()
            while futures and not stopped:
                done, _ = wait(list(futures), return_when=FIRST_COMPLETED)
                for fut in done:
                    idx = futures.pop(fut)
                    _, cex, block_hist = fut.result()
                    pending[idx] = (cex, block_hist)
                while next_commit in pending:
                    cex, block_hist = pending.pop(next_commit)
                    commit(next_commit, cex, block_hist)
                    next_commit += 1
                    if block_limit is not None and commits >= block_limit:
                        stopped = True
                        break
                maybe_save()
                if not stopped:
                    top_up()
            if stopped:
                pool.shutdown(cancel_futures=True)

    if not stopped and exhausted and next_commit == next_submit:
        ck.finished = True
        ck.last_completed = hi
    ck.wall_seconds = base_wall + (time.monotonic() - started)
    if checkpoint_path is not None:
        save_checkpoint(ck, checkpoint_path)
    return ck


def bell_mod(n: int, p: int) -> int:
    """Bell number B_n mod p via the Stirling recurrence, rows reduced mod p."""
    if n < 0:
        raise ValueError("bell_mod requires n >= 0")
    if p < 1:
        raise ValueError("bell_mod requires p >= 1")
    if n == 0:
        return 1 % p
    if p < 1 << 31 and n * p < 1 << 62:
        row = np.zeros(n + 1, dtype=np.uint64)
        row[0] = 1 % p
        ks = np.arange(n + 1, dtype=np.uint64)
        pp = np.uint64(p)
        for i in range(1, n + 1):
            new = np.zeros(n + 1, dtype=np.uint64)
            new[1 : i + 1] = (row[0:i] + ks[1 : i + 1] * row[1 : i + 1]) % pp
            row = new
        return int(row.sum() % pp)
    row_py = [1 % p] + [0] * n
    for i in range(1, n + 1):
        new_py = [0] * (n + 1)
        for k in range(1, i + 1):
            new_py[k] = (row_py[k - 1] + k * row_py[k]) % p
        row_py = new_py
    return sum(row_py) % p


def check_bell_congruence(p: int) -> DiscrepancyReport:
    """!p = Bell_{p-1} - 1 (mod p) for prime p, checked by direct residue."""
    if p < 2:
        raise ValueError("check_bell_congruence requires p >= 2")
    lhs = left_factorial_mod(p)
    rhs = (bell_mod(p - 1, p) - 1) % p
    return DiscrepancyReport(
        claim_id=f"congruence.bell.p{p}",
        location="sec1.congruence",
        claimed=str(rhs),
        computed=str(lhs),
        status=MATCH if lhs == rhs else MISMATCH,
        note="claimed side is the Bell residue, computed side the direct left factorial residue",
    )
