"""Chunked, resumable verification over prime ranges.

A range ``[start, stop)`` is cut into fixed-size chunks.  Each chunk is an
independent work unit (sieve, fast path over every prime, exact path on a
deterministic 1-in-K sample); a single collector merges results by chunk and
owns the checkpoint and the report.  Output does not depend on ``jobs``.
"""

from __future__ import annotations

import csv
import dataclasses
import hashlib
import json
import logging
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable

from . import _kernels
from .errors import CheckpointCorrupt, CheckpointMismatch, InternalError
from .primes import sieve_segment_array
from .verify import (
    COUNTEREXAMPLE,
    HOLDS,
    VerificationRecord,
    aac_full,
    cross_check,
    mordell_full,
)

log = logging.getLogger(__name__)

MODES = ("mordell", "aac")
REPORT_FIELDS = ("p", "p_mod8", "period_len", "central", "witness_residue", "method", "verdict")
DEFAULT_CHUNK = 1 << 20
DEFAULT_FULL_EVERY = 10_000

# fields that change results; paths and worker count do not
_DIGEST_FIELDS = ("mode", "start", "stop", "chunk_size", "full_every", "force_full")


@dataclass(frozen=True)
class RunConfig:
    mode: str
    start: int
    stop: int
    jobs: int = 1
    chunk_size: int = DEFAULT_CHUNK
    full_every: int = DEFAULT_FULL_EVERY
    checkpoint_path: str | None = None
    report_path: str | None = None
    report_format: str = "csv"
    force_full: tuple[int, ...] = ()

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not self.start < self.stop:
            raise ValueError(f"empty range [{self.start}, {self.stop})")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.chunk_size < 1:
            raise ValueError("chunk_size must be >= 1")
        if self.full_every < 0:
            raise ValueError("full_every must be >= 0")
        if self.report_format not in ("csv", "jsonl"):
            raise ValueError(f"unknown report format {self.report_format!r}")
        object.__setattr__(self, "force_full", tuple(sorted(set(self.force_full))))

    def digest(self) -> str:
        payload = {k: getattr(self, k) for k in _DIGEST_FIELDS}
        payload["force_full"] = list(payload["force_full"])
        blob = json.dumps(payload, sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()

    def chunks(self) -> list[tuple[int, int]]:
        return [
            (lo, min(lo + self.chunk_size, self.stop))
            for lo in range(self.start, self.stop, self.chunk_size)
        ]

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["force_full"] = list(self.force_full)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> RunConfig:
        d = dict(d)
        d["force_full"] = tuple(d.get("force_full", ()))
        return cls(**d)


@dataclass
class Checkpoint:
    config_digest: str
    config: dict
    completed_chunks: list[tuple[int, int]] = field(default_factory=list)
    counts: dict = field(
        default_factory=lambda: {"primes_checked": 0, "holds": 0, "counterexamples": 0}
    )
    max_witness_seen: dict | None = None

    def to_json(self) -> str:
        d = dataclasses.asdict(self)
        d["completed_chunks"] = [list(c) for c in self.completed_chunks]
        return json.dumps(d, sort_keys=True, indent=1)

    @classmethod
    def from_json(cls, text: str) -> Checkpoint:
        try:
            d = json.loads(text)
            cp = cls(
                config_digest=d["config_digest"],
                config=d["config"],
                completed_chunks=[(int(lo), int(hi)) for lo, hi in d["completed_chunks"]],
                counts={k: int(d["counts"][k]) for k in ("primes_checked", "holds", "counterexamples")},
                max_witness_seen=d.get("max_witness_seen"),
            )
        except (ValueError, KeyError, TypeError) as exc:
            raise CheckpointCorrupt(f"unreadable checkpoint: {exc}") from exc
        spans = sorted(cp.completed_chunks)
        if any(a_hi > b_lo for (_, a_hi), (b_lo, _) in zip(spans, spans[1:])):
            raise CheckpointCorrupt("overlapping chunks in checkpoint")
        return cp

    def save(self, path: str | os.PathLike) -> None:
        _atomic_write(Path(path), self.to_json())

    @classmethod
    def load(cls, path: str | os.PathLike) -> Checkpoint:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise CheckpointCorrupt(f"cannot read checkpoint {path}: {exc}") from exc
        return cls.from_json(text)


@dataclass
class ChunkResult:
    lo: int
    hi: int
    rows: list[VerificationRecord]
    full_checks: int = 0

    @property
    def counts(self) -> dict:
        bad = sum(1 for r in self.rows if r.verdict == COUNTEREXAMPLE)
        return {"primes_checked": len(self.rows), "holds": len(self.rows) - bad, "counterexamples": bad}


@dataclass
class RunSummary:
    primes_checked: int
    holds: int
    counterexamples: int
    elapsed: float
    full_checks: int = 0
    counterexample_records: list[VerificationRecord] = field(default_factory=list)
    max_witness_seen: dict | None = None

    def as_dict(self) -> dict:
        return {
            "primes_checked": self.primes_checked,
            "holds": self.holds,
            "counterexamples": self.counterexamples,
            "elapsed": round(self.elapsed, 3),
        }


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def sampled_for_full(p: int, full_every: int) -> bool:
    """Deterministic 1-in-K selection, independent of chunking and order."""
    if full_every <= 0:
        return False
    if full_every == 1:
        return True
    mixed = (p * 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF
    return (mixed >> 24) % full_every == 0


def verify_chunk(
    mode: str, lo: int, hi: int, full_every: int = DEFAULT_FULL_EVERY, force_full: Iterable[int] = ()
) -> ChunkResult:
    """Verify every prime of the mode's residue class in ``[lo, hi)``."""
    forced = set(force_full)
    if mode == "mordell":
        ps = sieve_segment_array(lo, hi, "3 mod 4")
        ls, centrals, witnesses, steps = _kernels.half_period_batch(ps)
        full = mordell_full
    else:
        ps = sieve_segment_array(max(lo, 5), hi, "1 mod 4")
        ls, witnesses = _kernels.full_period_batch(ps)
        centrals, steps = ls * 0, ls
        full = aac_full

    rows = []
    full_checks = 0
    for p, l, c, w, s in zip(ps.tolist(), ls.tolist(), centrals.tolist(), witnesses.tolist(), steps.tolist()):
        if mode == "mordell" and l % 2:
            raise InternalError(f"odd period {l} for sqrt({p}) with p = 3 mod 4")
        rec = VerificationRecord(p, p % 8, l, c, w, "fast", HOLDS if w else COUNTEREXAMPLE, s)
        if rec.verdict == COUNTEREXAMPLE or p in forced or sampled_for_full(p, full_every):
            rec = cross_check(rec, full(p))
            full_checks += 1
            if rec.verdict == COUNTEREXAMPLE:
                log.warning("COUNTEREXAMPLE confirmed by exact path: %s", rec)
        rows.append(rec)
    return ChunkResult(lo, hi, rows, full_checks)


def _verify_chunk_args(args) -> ChunkResult:
    return verify_chunk(*args)


def _record_dict(rec: VerificationRecord) -> dict:
    return dict(zip(REPORT_FIELDS, report_row(rec)))


def report_row(rec: VerificationRecord) -> tuple:
    return (rec.p, rec.p_mod_8, rec.l, rec.central, rec.witness_residue, rec.method, rec.verdict)


def _record_from_dict(d: dict) -> VerificationRecord:
    return VerificationRecord(
        int(d["p"]), int(d["p_mod8"]), int(d["period_len"]), int(d["central"]),
        int(d["witness_residue"]), d["method"], d["verdict"],
    )


def emit_report(rows: Iterable[VerificationRecord], path: str | os.PathLike, format: str = "csv") -> None:
    """Write records in ascending p as CSV (with header) or JSONL, UTF-8, LF."""
    ordered = sorted(rows, key=lambda r: r.p)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        if format == "csv":
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(REPORT_FIELDS)
            writer.writerows(report_row(r) for r in ordered)
        elif format == "jsonl":
            for r in ordered:
                fh.write(json.dumps(_record_dict(r)) + "\n")
        else:
            raise ValueError(f"unknown report format {format!r}")


def _parts_dir(checkpoint_path: str) -> Path:
    return Path(str(checkpoint_path) + ".parts")


def _part_path(checkpoint_path: str, lo: int, hi: int) -> Path:
    return _parts_dir(checkpoint_path) / f"{lo}-{hi}.jsonl"


def _load_part(checkpoint_path: str, lo: int, hi: int) -> list[VerificationRecord]:
    path = _part_path(checkpoint_path, lo, hi)
    try:
        with open(path, encoding="utf-8") as fh:
            return [_record_from_dict(json.loads(line)) for line in fh]
    except (OSError, ValueError, KeyError) as exc:
        raise CheckpointCorrupt(f"missing or unreadable rows for chunk [{lo}, {hi}): {exc}") from exc


def _better_witness(cur: dict | None, rec: VerificationRecord) -> dict:
    cand = _record_dict(rec)
    if cur is None or (cand["period_len"], -cand["p"]) > (cur["period_len"], -cur["p"]):
        return cand
    return cur


def run_range(cfg: RunConfig, on_chunk: Callable[[ChunkResult], None] | None = None) -> RunSummary:
    """Verify all primes of the mode's residue class in ``[cfg.start, cfg.stop)``.

    With a checkpoint path, progress is persisted after every chunk and an
    existing checkpoint for the same configuration is resumed.  ``on_chunk``
    is called after each chunk has been committed.
    """
    t0 = time.perf_counter()
    chunks = cfg.chunks()
    rows: dict[tuple[int, int], list[VerificationRecord]] = {}
    full_checks = 0

    cp = None
    if cfg.checkpoint_path:
        if os.path.exists(cfg.checkpoint_path):
            cp = Checkpoint.load(cfg.checkpoint_path)
            if cp.config_digest != cfg.digest():
                raise CheckpointMismatch(
                    f"checkpoint {cfg.checkpoint_path} was written for a different configuration"
                )
        else:
            cp = Checkpoint(config_digest=cfg.digest(), config=cfg.to_dict())
            cp.save(cfg.checkpoint_path)

    done = set(cp.completed_chunks) if cp else set()
    if cp and cfg.report_path:
        for span in done:
            rows[span] = _load_part(cfg.checkpoint_path, *span)
    pending = [c for c in chunks if c not in done]

    counts = dict(cp.counts) if cp else {"primes_checked": 0, "holds": 0, "counterexamples": 0}
    best = cp.max_witness_seen if cp else None
    bad: list[VerificationRecord] = [r for part in rows.values() for r in part if r.verdict == COUNTEREXAMPLE]

    def commit(res: ChunkResult) -> None:
        nonlocal best, full_checks
        full_checks += res.full_checks
        for k, v in res.counts.items():
            counts[k] += v
        for r in res.rows:
            best = _better_witness(best, r)
            if r.verdict == COUNTEREXAMPLE:
                log.error("counterexample: %s", r)
                bad.append(r)
        if cfg.report_path:
            rows[(res.lo, res.hi)] = res.rows
        if cp is not None:
            if cfg.report_path:
                _atomic_write(
                    _part_path(cfg.checkpoint_path, res.lo, res.hi),
                    "".join(json.dumps(_record_dict(r)) + "\n" for r in res.rows),
                )
            cp.completed_chunks.append((res.lo, res.hi))
            cp.completed_chunks.sort()
            cp.counts = dict(counts)
            cp.max_witness_seen = best
            cp.save(cfg.checkpoint_path)
        log.info("chunk [%d, %d): %d primes", res.lo, res.hi, len(res.rows))
        if on_chunk is not None:
            on_chunk(res)

    args = [(cfg.mode, lo, hi, cfg.full_every, cfg.force_full) for lo, hi in pending]
    if cfg.jobs == 1 or len(args) <= 1:
        for a in args:
            commit(verify_chunk(*a))
    else:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            futures = [pool.submit(_verify_chunk_args, a) for a in args]
            try:
                for fut in as_completed(futures):
                    commit(fut.result())
            except BaseException:
                for fut in futures:
                    fut.cancel()
                raise

    if cfg.report_path:
        emit_report(
            (r for span in sorted(rows) for r in rows[span]), cfg.report_path, cfg.report_format
        )
    bad.sort(key=lambda r: r.p)
    return RunSummary(
        primes_checked=counts["primes_checked"],
        holds=counts["holds"],
        counterexamples=counts["counterexamples"],
        elapsed=time.perf_counter() - t0,
        full_checks=full_checks,
        counterexample_records=bad,
        max_witness_seen=best,
    )


def resume(checkpoint_path: str | os.PathLike, cfg: RunConfig | None = None) -> RunSummary:
    """Continue the run recorded in ``checkpoint_path``.

    If ``cfg`` is given it must match the configuration the checkpoint was
    written for; otherwise the stored configuration is reused.
    """
    cp = Checkpoint.load(checkpoint_path)
    if cfg is None:
        stored = RunConfig.from_dict(cp.config)
        if stored.digest() != cp.config_digest:
            raise CheckpointCorrupt("stored configuration does not match its digest")
        cfg = dataclasses.replace(stored, checkpoint_path=str(checkpoint_path))
    elif cfg.digest() != cp.config_digest:
        raise CheckpointMismatch(f"checkpoint {checkpoint_path} was written for a different configuration")
    else:
        cfg = dataclasses.replace(cfg, checkpoint_path=str(checkpoint_path))
    return run_range(cfg)
