"""Timing the combinatorial construction against the rank-factorisation oracle."""

from __future__ import annotations

import csv
import io
import math
import random
import statistics
import time
from dataclasses import astuple, dataclass, fields
from typing import Iterable, Optional

from .exact_arith import mat_eq
from .generate import GenSpec, random_unicyclic
from .graph_core import decompose, distance_matrix
from .matrices import incidence_matrix
from .oracle import check_penrose, pinv_rank_factorization
from .pinv import combinatorial_pinv

DEFAULT_ORACLE_CAP = 64


@dataclass(frozen=True)
class BenchRecord:
    n: int
    cycle_length: int
    seed: int
    t_combinatorial: float
    t_oracle: Optional[float]
    verified: bool


def bench_cycle_length(n: int, seed: int) -> int:
    """Even cycle length in ``[4, max(4, 2*isqrt(n))]``, capped at ``n``.

    Keeps the Penrose verification of the combinatorial result quadratic in
    ``n``; the construction itself is quadratic for any cycle length.
    """
    hi = min(n, max(4, 2 * math.isqrt(n)))
    return random.Random(seed).choice(range(4, hi + 1, 2))


def bench_one(n: int, seed: int, oracle_cap: int = DEFAULT_ORACLE_CAP,
              cycle_length: Optional[int] = None) -> BenchRecord:
    c = cycle_length if cycle_length is not None else bench_cycle_length(n, seed)
    g = random_unicyclic(GenSpec(n, c, "any", seed))

    # cold caches, so the timing includes the distance computation
    distance_matrix.cache_clear()
    decompose.cache_clear()
    t0 = time.perf_counter()
    h = combinatorial_pinv(decompose(g)).h
    t_comb = time.perf_counter() - t0

    m = incidence_matrix(g)
    verified = check_penrose(m, h).passed
    t_orc = None
    if n <= oracle_cap:
        t0 = time.perf_counter()
        x = pinv_rank_factorization(incidence_matrix(g), certify=False)
        t_orc = time.perf_counter() - t0
        verified = verified and mat_eq(x, h)
    return BenchRecord(n, c, seed, t_comb, t_orc, verified)


def run_bench(sizes: Iterable[int], seeds: Iterable[int], oracle_cap: int = DEFAULT_ORACLE_CAP,
              cycle_length: Optional[int] = None) -> list[BenchRecord]:
    seeds = list(seeds)
    records = []
    for n in sizes:
        if n < 4:
            raise ValueError(f"bench sizes must be >= 4, got {n}")
        for s in seeds:
            records.append(bench_one(n, s, oracle_cap, cycle_length))
    return records


def records_to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f.name for f in fields(BenchRecord)])
    for r in records:
        w.writerow(["" if v is None else (f"{v:.6f}" if isinstance(v, float) else v) for v in astuple(r)])
    return buf.getvalue()


def summarize(records: Iterable[BenchRecord]) -> list[dict]:
    """Per-size medians over verified records."""
    by_n: dict[int, list[BenchRecord]] = {}
    for r in records:
        by_n.setdefault(r.n, []).append(r)
    out = []
    for n in sorted(by_n):
        rs = by_n[n]
        ok = [r for r in rs if r.verified]
        comb = statistics.median(r.t_combinatorial for r in ok) if ok else None
        orc = [r.t_oracle for r in ok if r.t_oracle is not None]
        orc_med = statistics.median(orc) if orc else None
        out.append({
            "n": n,
            "runs": len(rs),
            "verified": len(ok),
            "median_t_combinatorial": comb,
            "median_t_oracle": orc_med,
            "ratio": orc_med / comb if orc_med is not None and comb else None,
        })
    return out
