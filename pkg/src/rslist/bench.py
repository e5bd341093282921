"""Multiplication-count sweeps for the interpolation step."""
from __future__ import annotations

import csv
import io
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

from .gf import FieldCtx, is_prime, parse_field
from .interp import interpolate_Q
from .rs import RSCode

CSV_COLUMNS = ("n", "k", "m", "l", "mult_count", "wall_time_ns")


@dataclass(frozen=True)
class BenchRow:
    n: int
    k: int
    m: int
    l: int
    mult_count: int
    wall_time_ns: int


def smallest_prime_above(n: int) -> int:
    p = n + 1
    while not is_prime(p):
        p += 1
    return p


def run_point(n: int, k: int, m: int, field: str | None = None, seed: int = 0) -> BenchRow:
    """Interpolate one random received word and report the multiplication tally.

    Each call builds its own field, so the counter is never shared. The node
    polynomial and Lagrange basis are built before the counter is reset:
    they belong to the code, not to a decode.
    """
    F = parse_field(field) if field else FieldCtx(smallest_prime_above(n))
    code = RSCode(F, n, k)
    code.eta, code.lagrange  # warm the per-code caches
    rng = random.Random(f"{seed}:{n}:{k}:{m}")
    v = [rng.randrange(F.q) for _ in range(n)]
    F.reset_counters()
    t0 = time.perf_counter_ns()
    _, params = interpolate_Q(code, v, m)
    elapsed = time.perf_counter_ns() - t0
    return BenchRow(n, k, m, params.l, F.mult_counter, elapsed)


def grid(ns: Iterable[int], ms: Iterable[int], rate: float = 0.5, k: int | None = None) -> list[tuple[int, int, int]]:
    ms = list(ms)
    return [(n, k if k is not None else max(2, round(n * rate)), m) for n in ns for m in ms]


def sweep(
    points: Sequence[tuple[int, int, int]],
    field: str | None = None,
    seed: int = 0,
    jobs: int = 1,
) -> list[BenchRow]:
    if jobs <= 1:
        return [run_point(n, k, m, field, seed) for n, k, m in points]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futs = [pool.submit(run_point, n, k, m, field, seed) for n, k, m in points]
        return [f.result() for f in futs]


def to_csv(rows: Iterable[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(asdict(r))
    return buf.getvalue()


def read_csv(text: str) -> list[BenchRow]:
    return [BenchRow(**{k: int(v) for k, v in rec.items()}) for rec in csv.DictReader(io.StringIO(text))]


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of log(y) against log(x)."""
    lx = [math.log(x) for x in xs]
    ly = [math.log(y) for y in ys]
    mx, my = sum(lx) / len(lx), sum(ly) / len(ly)
    num = sum((a - mx) * (b - my) for a, b in zip(lx, ly))
    den = sum((a - mx) ** 2 for a in lx)
    return num / den
