"""End-to-end enumeration: half candidates, join filtering, partner search.

A run for length n proceeds in three stages, each persisted to disk so an
interrupted or repeated invocation picks up whatever already exists:

1. preprocessing -- enumerate the even-index and odd-index half candidates
   that survive the spectral bound on their own (files L_even/L_odd);
2. stage 1 -- join every even half with every odd half and keep joins that
   pass the exact entry-sum solvability test and the progressive spectral
   sweep (file L_A).  The even axis is vectorized; the odd axis is the
   work loop, and shards split it into contiguous chunks;
3. stage 2 -- for each surviving first member, enumerate all partners with
   the programmatic solver (file pairs).

All persisted lists are sorted, so outputs are byte-reproducible and the
union of shard outputs equals the unsharded output.  Writes go through a
temp file and os.replace; run metadata (configuration fingerprint plus CPU
seconds per completed stage) lives in a small JSON file next to the
artifacts and gates reuse: artifacts from a different configuration are
recomputed, not trusted.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import core, encoding, filters

_META_KIND = "cgolay-run"


@dataclass(frozen=True)
class RunConfig:
    n: int
    out_dir: Path
    shards: int = 1
    shard_index: int = 1  # 1-based
    dft_pre: int = 2**14
    dft_stage1: int = 2**7
    epsilon: float = 1e-3
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "out_dir", Path(self.out_dir))
        if self.n < 1:
            raise ValueError("length must be at least 1")
        if self.shards < 1:
            raise ValueError("shard count must be at least 1")
        if not 1 <= self.shard_index <= self.shards:
            raise ValueError("shard index must lie in 1..shards")
        if self.workers < 1:
            raise ValueError("worker count must be at least 1")
        # the schedule constructors validate the sample counts and epsilon
        filters.preprocessing_schedule(self.n, self.dft_pre, self.epsilon)
        filters.stage1_schedule(self.dft_stage1, self.epsilon)

    def fingerprint(self):
        return {
            "kind": _META_KIND,
            "n": self.n,
            "shards": self.shards,
            "shard_index": self.shard_index,
            "dft_pre": self.dft_pre,
            "dft_stage1": self.dft_stage1,
            "epsilon": self.epsilon,
        }

    def _suffix(self):
        if self.shards == 1:
            return ""
        return f".shard{self.shard_index}of{self.shards}"

    def path_even(self):
        return self.out_dir / f"L_even_n{self.n}.txt"

    def path_odd(self):
        return self.out_dir / f"L_odd_n{self.n}.txt"

    def path_survivors(self):
        return self.out_dir / f"L_A_n{self.n}{self._suffix()}.txt"

    def path_pairs(self):
        return self.out_dir / f"pairs_n{self.n}{self._suffix()}.txt"

    def path_report(self):
        return self.out_dir / f"report_n{self.n}{self._suffix()}.txt"

    def path_meta(self):
        return self.out_dir / f"meta_n{self.n}{self._suffix()}.json"


# ---------------------------------------------------------------------------
# artifact I/O


def _write_atomic(path, text):
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text)
    os.replace(tmp, path)


def write_candidates(path, cands):
    _write_atomic(path, "".join(core.to_text(c) + "\n" for c in cands))


def read_candidates(path):
    return [core.from_text(line) for line in path.read_text().splitlines()]


def pair_line(n, pair):
    a, b = pair
    return f"{n}\t{core.to_text(a)}\t{core.to_text(b)}"


def parse_pair_line(line):
    n_text, a_text, b_text = line.split("\t")
    a, b = core.from_text(a_text), core.from_text(b_text)
    if len(a) != int(n_text) or len(b) != int(n_text):
        raise ValueError(f"length field disagrees with members: {line!r}")
    if any(e is None for e in a + b):
        raise ValueError(f"pair line contains masked entries: {line!r}")
    return a, b


def write_pairs(path, n, pairs):
    _write_atomic(path, "".join(pair_line(n, p) + "\n" for p in pairs))


def read_pairs(path):
    return [parse_pair_line(line) for line in path.read_text().splitlines()]


class _Meta:
    """Stage bookkeeping: which stages completed, at what CPU cost."""

    def __init__(self, cfg):
        self.path = cfg.path_meta()
        self.fingerprint = cfg.fingerprint()
        self.stages = {}
        try:
            data = json.loads(self.path.read_text())
        except (OSError, ValueError):
            return
        if data.get("fingerprint") == self.fingerprint:
            self.stages = data.get("stages", {})

    def done(self, stage):
        return stage in self.stages

    def mark(self, stage, cpu_seconds):
        self.stages[stage] = round(cpu_seconds, 3)
        _write_atomic(
            self.path,
            json.dumps(
                {"fingerprint": self.fingerprint, "stages": self.stages},
                indent=1,
                sort_keys=True,
            )
            + "\n",
        )


# ---------------------------------------------------------------------------
# stage 1: join filtering, vectorized along the even axis


def shard_span(total, shards, shard_index):
    """Contiguous chunk of range(total) handled by a 1-based shard index."""
    lo = (shard_index - 1) * total // shards
    hi = shard_index * total // shards
    return lo, hi


def _stage_spans(schedule):
    """(start, end) slices of the progressive point axis, one per stage."""
    spans = []
    start = 0
    for count, _ in schedule.stages:
        spans.append((start, start + count // 2))
        start += count // 2
    return spans


def _join_halves_shard(n, evens, odds, table, schedule, span):
    """Surviving joined candidates for odds[span], sorted by text form."""
    lo, hi = span
    if not evens or lo >= hi:
        return []
    e_cols = filters.half_hall_columns(evens, n, schedule.stages[-1][0])
    e_sums = filters.half_scaled_sums(evens).astype(np.int32)
    o_cols = filters.half_hall_columns(odds, n, schedule.stages[-1][0])
    o_sums = filters.half_scaled_sums(odds).astype(np.int32)
    solvable = table.solvable
    bound = 2 * n + schedule.epsilon
    spans = _stage_spans(schedule)

    survivors = []
    for o in range(lo, hi):
        sums = e_sums + o_sums[o]
        alive = np.nonzero(
            solvable[np.abs(sums[:, :, 0]), np.abs(sums[:, :, 1])].all(axis=1)
        )[0]
        for s0, s1 in spans:
            if not alive.size:
                break
            h = e_cols[s0:s1, alive] + o_cols[s0:s1, o : o + 1]
            mag = h.real**2 + h.imag**2
            alive = alive[(mag <= bound).all(axis=0)]
        odd_half = odds[o]
        for e in alive:
            even_half = evens[e]
            survivors.append(
                tuple(
                    a if a is not None else b for a, b in zip(even_half, odd_half)
                )
            )
    survivors.sort()
    return survivors


# ---------------------------------------------------------------------------
# worker plumbing (fork-inherited state, deterministic chunk merge)

_WORK = {}


def _stage1_worker(span):
    w = _WORK
    return _join_halves_shard(
        w["n"], w["evens"], w["odds"], w["table"], w["schedule"], span
    )


def _stage2_worker(span):
    lo, hi = span
    out = []
    for a in _WORK["survivors"][lo:hi]:
        out.extend((a, b) for b in encoding.find_partners(a))
    return out


def _chunk_spans(lo, hi, pieces):
    total = hi - lo
    spans = []
    for k in range(pieces):
        a = lo + k * total // pieces
        b = lo + (k + 1) * total // pieces
        if a < b:
            spans.append((a, b))
    return spans


def _run_chunked(worker, lo, hi, workers):
    spans = _chunk_spans(lo, hi, max(1, workers) * 4)
    if workers <= 1 or len(spans) <= 1:
        results = [worker(s) for s in spans]
    else:
        import multiprocessing

        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(workers) as pool:
            results = pool.map(worker, spans)
    merged = []
    for chunk in results:
        merged.extend(chunk)
    return merged


# ---------------------------------------------------------------------------
# the three stages


def run_preprocessing(cfg, meta=None):
    """Half-candidate lists, computed or reloaded; always written to disk."""
    meta = meta or _Meta(cfg)
    if meta.done("halves") and cfg.path_even().exists() and cfg.path_odd().exists():
        return read_candidates(cfg.path_even()), read_candidates(cfg.path_odd())
    t0 = time.process_time()
    schedule = filters.preprocessing_schedule(cfg.n, cfg.dft_pre, cfg.epsilon)
    evens = filters.enumerate_half_candidates(cfg.n, "even", schedule)
    odds = filters.enumerate_half_candidates(cfg.n, "odd", schedule)
    write_candidates(cfg.path_even(), evens)
    write_candidates(cfg.path_odd(), odds)
    meta.mark("halves", time.process_time() - t0)
    return evens, odds


def run_stage1(cfg, evens, odds, meta=None):
    """First members surviving the join filters, for this shard of the odds."""
    meta = meta or _Meta(cfg)
    if meta.done("stage1") and cfg.path_survivors().exists():
        return read_candidates(cfg.path_survivors())
    t0 = time.process_time()
    if not odds and cfg.n != 1:
        survivors = []
    else:
        # a length-1 candidate is all even half; join against a blank mask
        work_odds = odds if odds else [(None,) * cfg.n]
        table = filters.build_squares_table(cfg.n)
        schedule = filters.stage1_schedule(cfg.dft_stage1, cfg.epsilon)
        lo, hi = shard_span(len(work_odds), cfg.shards, cfg.shard_index)
        global _WORK
        _WORK = {
            "n": cfg.n,
            "evens": evens,
            "odds": work_odds,
            "table": table,
            "schedule": schedule,
        }
        survivors = _run_chunked(_stage1_worker, lo, hi, cfg.workers)
        _WORK = {}
        survivors.sort()
    write_candidates(cfg.path_survivors(), survivors)
    meta.mark("stage1", time.process_time() - t0)
    return survivors


def run_stage2(cfg, survivors, meta=None):
    """All normalized pairs whose first member is in the survivor list."""
    meta = meta or _Meta(cfg)
    if meta.done("stage2") and cfg.path_pairs().exists():
        return read_pairs(cfg.path_pairs())
    t0 = time.process_time()
    global _WORK
    _WORK = {"survivors": survivors}
    pairs = _run_chunked(_stage2_worker, 0, len(survivors), cfg.workers)
    _WORK = {}
    pairs.sort()
    write_pairs(cfg.path_pairs(), cfg.n, pairs)
    meta.mark("stage2", time.process_time() - t0)
    return pairs


def _render_report(cfg, meta, counts):
    lines = [
        f"n={cfg.n}",
        f"L_even={counts['evens']}",
        f"L_odd={counts['odds']}",
        f"L_A={counts['survivors']}",
        f"pairs_normalized={counts['pairs']}",
        f"cpu_seconds_stage1={meta.stages.get('stage1', 0.0)}",
        f"cpu_seconds_stage2={meta.stages.get('stage2', 0.0)}",
    ]
    return "".join(line + "\n" for line in lines)


def enumerate_pairs(cfg):
    """Run (or resume) the whole pipeline; returns the normalized pairs."""
    meta = _Meta(cfg)
    evens, odds = run_preprocessing(cfg, meta)
    survivors = run_stage1(cfg, evens, odds, meta)
    pairs = run_stage2(cfg, survivors, meta)
    counts = {
        "evens": len(evens),
        "odds": len(odds),
        "survivors": len(survivors),
        "pairs": len(pairs),
    }
    _write_atomic(cfg.path_report(), _render_report(cfg, meta, counts))
    return pairs
