"""Batch verification drivers.

Each driver enumerates polyominoes rank by rank, splits every rank's stream
into ``jobs`` shards (stream position mod jobs), processes shards
independently and merges records in canonical polyomino order, so the report
does not depend on the number of workers.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .enumerate import DEDUP_D4, DEDUP_NONE, enumerate_simple
from .errors import MethodsDisagree, RankOutOfRange
from .grid import Polyomino
from .groebner import h_polynomial
from .lattice import count_maximal_chains, h_via_cell_chains, h_via_descents, lattice_of
from .parallelogram import S_PROPERTY, gorenstein_verdicts, is_parallelogram
from .rooks import r_tilde_polynomial, rook_number

MAX_VERIFY_RANK = 12
MAX_PARALLELOGRAM_RANK = 10


@dataclass
class Report:
    """Per-polyomino records plus a closing summary; ``ok`` iff no failures."""

    kind: str
    records: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.summary.get("failures", 0) == 0

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_jsonl(self) -> str:
        lines = [json.dumps(r, sort_keys=True) for r in self.records]
        lines.append(json.dumps({"summary": self.summary, "kind": self.kind}, sort_keys=True))
        return "\n".join(lines) + "\n"

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_jsonl())


def _check_range(value: int, hi: int, what: str) -> None:
    if not isinstance(value, int) or not 1 <= value <= hi:
        raise RankOutOfRange(f"{what} must be in 1..{hi}, got {value!r}")


# -- per-polyomino record builders (module level so they pickle) --------------


def conjecture_record(P: Polyomino, timings: bool = False) -> dict:
    t0 = time.perf_counter()
    h = h_polynomial(P)
    t1 = time.perf_counter()
    rt = r_tilde_polynomial(P)
    t2 = time.perf_counter()
    rec = {
        "cells": P.to_list(),
        "rank": P.rank,
        "h": h.to_list(),
        "r_tilde": rt.to_list(),
        "match": h == rt,
    }
    if timings:
        rec["timings"] = {"groebner": round(t1 - t0, 6), "rooks": round(t2 - t1, 6)}
    return rec


def parallelogram_record(P: Polyomino, timings: bool = False) -> dict:
    h_gb = h_polynomial(P)
    L = lattice_of(P)
    h_desc = h_via_descents(L)
    h_cells = h_via_cell_chains(P)
    rt = r_tilde_polynomial(P)
    rn = rook_number(P)
    chains = count_maximal_chains(L)
    checks = {
        "all_equal": h_gb == h_desc == h_cells == rt,
        "degree_is_rook_number": h_gb.degree == rn,
        "h1_is_chain_count": h_desc(1) == chains,
    }
    return {
        "cells": P.to_list(),
        "rank": P.rank,
        "groebner": h_gb.to_list(),
        "descents": h_desc.to_list(),
        "cell_chains": h_cells.to_list(),
        "r_tilde": rt.to_list(),
        "rook_number": rn,
        "maximal_chains": chains,
        "checks": checks,
        "match": all(checks.values()),
    }


def gorenstein_record(P: Polyomino, timings: bool = False) -> dict:
    verdicts = gorenstein_verdicts(P)
    agree = len(set(verdicts.values())) == 1
    rec = {"cells": P.to_list(), "rank": P.rank, "verdicts": verdicts, "match": agree}
    if agree and verdicts[S_PROPERTY]:
        h = h_via_cell_chains(P)
        rec["h_palindromic"] = h.is_palindromic()
        rec["match"] = rec["h_palindromic"]
    if not agree:
        from .parallelogram import disagreement_report

        rec["counterexample"] = disagreement_report(P, verdicts)
    return rec


_BUILDERS: dict[str, Callable[..., dict]] = {
    "conjecture": conjecture_record,
    "parallelogram": parallelogram_record,
    "gorenstein": gorenstein_record,
}


def _source(kind: str, rank: int, dedup: str, shard):
    if kind == "conjecture":
        return enumerate_simple(rank, dedup, shard)
    return (P for P in enumerate_simple(rank, DEDUP_NONE, shard) if is_parallelogram(P))


def _run_shard(task) -> tuple[tuple, list[dict]]:
    kind, rank, dedup, shard, timings = task
    build = _BUILDERS[kind]
    return (rank, shard[0]), [build(P, timings) for P in _source(kind, rank, dedup, shard)]


def _load_checkpoint(path, config: dict) -> dict:
    done = {}
    if not path or not os.path.exists(path):
        return done
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            entry = json.loads(line)
            if entry.get("config") == config:
                done[(entry["rank"], entry["shard"])] = entry["records"]
    return done


def _append_checkpoint(path, config: dict, key, records) -> None:
    if not path:
        return
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps({"config": config, "rank": key[0], "shard": key[1], "records": records}) + "\n")


def _drive(kind: str, max_rank: int, jobs: int, dedup: str, timings: bool, checkpoint) -> list[dict]:
    jobs = max(1, int(jobs))
    # max_rank is left out so a finished checkpoint can seed a deeper run
    config = {"kind": kind, "jobs": jobs, "dedup": dedup, "timings": timings}
    done = _load_checkpoint(checkpoint, config)
    tasks = [
        (kind, rank, dedup, (i, jobs), timings)
        for rank in range(1, max_rank + 1)
        for i in range(jobs)
        if (rank, i) not in done
    ]
    results = dict(done)
    if jobs == 1:
        for task in tasks:
            key, recs = _run_shard(task)
            results[key] = recs
            _append_checkpoint(checkpoint, config, key, recs)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for key, recs in pool.map(_run_shard, tasks):
                results[key] = recs
                _append_checkpoint(checkpoint, config, key, recs)
    records = [r for recs in results.values() for r in recs]
    records.sort(key=lambda r: (r["rank"], sorted((y, x) for x, y in r["cells"])))
    return records


def _per_rank(records: list[dict], max_rank: int) -> dict:
    out = {}
    for rank in range(1, max_rank + 1):
        rs = [r for r in records if r["rank"] == rank]
        out[str(rank)] = {"count": len(rs), "failures": sum(not r["match"] for r in rs)}
    return out


def verify_conjecture(
    max_rank: int,
    jobs: int = 1,
    dedup: str = DEDUP_D4,
    timings: bool = False,
    checkpoint=None,
) -> Report:
    """Compare h(t) from Gröbner bases with the switch-class rook polynomial."""
    _check_range(max_rank, MAX_VERIFY_RANK, "max_rank")
    if dedup not in (DEDUP_D4, DEDUP_NONE):
        raise ValueError(f"unknown dedup mode {dedup!r}")
    start = time.perf_counter()
    records = _drive("conjecture", max_rank, jobs, dedup, timings, checkpoint)
    mismatches = [r["cells"] for r in records if not r["match"]]
    summary = {
        "max_rank": max_rank,
        "dedup": dedup,
        "per_rank": _per_rank(records, max_rank),
        "total": len(records),
        "failures": len(mismatches),
        "mismatches": mismatches,
    }
    if timings:
        summary["wall_time"] = round(time.perf_counter() - start, 3)
    return Report("verify", records, summary)


def crosscheck_parallelogram(max_rank: int, jobs: int = 1, checkpoint=None) -> Report:
    """Four h(t) computations, deg h vs rook number, and h(1) vs chain count."""
    _check_range(max_rank, MAX_PARALLELOGRAM_RANK, "max_rank")
    records = _drive("parallelogram", max_rank, jobs, DEDUP_NONE, False, checkpoint)
    failures = [r["cells"] for r in records if not r["match"]]
    summary = {
        "max_rank": max_rank,
        "per_rank": _per_rank(records, max_rank),
        "total": len(records),
        "failures": len(failures),
        "mismatches": failures,
    }
    return Report("crosscheck", records, summary)


def classify_gorenstein(max_rank: int, jobs: int = 1, checkpoint=None) -> Report:
    """Gorenstein verdicts by S-property, purity and Motzkin blocks."""
    _check_range(max_rank, MAX_PARALLELOGRAM_RANK, "max_rank")
    records = _drive("gorenstein", max_rank, jobs, DEDUP_NONE, False, checkpoint)
    per_rank = _per_rank(records, max_rank)
    for rank, stats in per_rank.items():
        stats["gorenstein"] = sum(
            1 for r in records if r["rank"] == int(rank) and r["verdicts"][S_PROPERTY] and r["match"]
        )
    counterexamples = [r["counterexample"] for r in records if "counterexample" in r]
    summary = {
        "max_rank": max_rank,
        "per_rank": per_rank,
        "total": len(records),
        "failures": sum(not r["match"] for r in records),
        "disagreements": len(counterexamples),
        "counterexamples": counterexamples,
    }
    return Report("gorenstein-sweep", records, summary)


__all__ = [
    "Report",
    "MethodsDisagree",
    "verify_conjecture",
    "crosscheck_parallelogram",
    "classify_gorenstein",
    "conjecture_record",
    "parallelogram_record",
    "gorenstein_record",
]
