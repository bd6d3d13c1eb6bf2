"""Backend selection and chunked driving of the segment pass.

At import time the compiled extension is preferred; setting the
environment variable HALTON_WITNESS_PURE to a non-empty value (or a build
without the extension) selects the pure-Python loop instead.  Either way
the observable results are identical: chunks are merged with exact big-int
arithmetic in a fixed order, so output does not depend on backend, chunk
size, or thread count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import _segment_py
from .sequence import BaseVector, digits_of

try:
    from . import _segment_c  # type: ignore[attr-defined]
except ImportError:
    _segment_c = None  # type: ignore[assignment]

if _segment_c is None or os.environ.get("HALTON_WITNESS_PURE"):
    _impl = _segment_py
    BACKEND = "python"
else:
    _impl = _segment_c
    BACKEND = "c"

# The compiled loop keeps c(t)*D - t*V and sum-of-counts in 64-bit ints.
# With chunks of at most 2^20 steps and D, V below 2^40 every accumulator
# stays under 2^60.
_CHUNK = 1 << 20
_SCALE_LIMIT = 1 << 40


@dataclass(frozen=True)
class SegmentStats:
    """Exact statistics of one segment pass of length `count`.

    Scaled values use the corner-box denominator D = box_scale and
    V = vol_scaled = volume * D, so the running local discrepancy at step
    N is Delta(N) = (c(N)*D - N*V) / D.
    """

    count: int
    box_scale: int
    vol_scaled: int
    hits: int
    sum_delta_scaled: int  # sum over N = 1..count of c(N)*D - N*V
    max_scaled: int
    n_at_max: int
    min_scaled: int
    n_at_min: int

    def argmax_abs(self) -> tuple[int, int]:
        """(N*, scaled signed Delta at N*) maximizing |Delta|, earliest N."""
        cand = [
            (self.max_scaled, self.n_at_max),
            (self.min_scaled, self.n_at_min),
        ]
        best_val, best_n = cand[0]
        for val, n in cand[1:]:
            if abs(val) > abs(best_val) or (abs(val) == abs(best_val) and n < best_n):
                best_val, best_n = val, n
        return best_n, best_val


def _start_digit_vectors(
    bases: BaseVector, taus: tuple[int, ...], m: int, start: int
) -> list[list[int]]:
    rows = []
    for p, tau in zip(bases.bases, taus):
        length = m * tau
        reduced = start % (p**length)
        row = list(digits_of(reduced, p).digits)
        row.extend([0] * (length - len(row)))
        rows.append(row)
    return rows


def run_segment(
    bases: BaseVector,
    taus: tuple[int, ...],
    m: int,
    start: int,
    count: int,
    box_scale: int,
    vol_scaled: int,
    threads: int = 1,
    backend: str | None = None,
) -> SegmentStats:
    """Run the digit-classifier pass over `count` indices from `start`.

    The range is split into fixed-size chunks; each chunk reports counts
    and extrema relative to its own entry state and the chunks are folded
    left-to-right, which keeps the result independent of scheduling.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if backend == "python":
        impl = _segment_py
    elif backend == "c":
        if _segment_c is None:
            raise RuntimeError("compiled kernel not available")
        impl = _segment_c
    else:
        impl = _impl
        backend = BACKEND
    if backend == "c" and (
        box_scale > _SCALE_LIMIT or vol_scaled > _SCALE_LIMIT
    ):
        impl = _segment_py  # int64 headroom gone; big ints take over

    offsets = list(range(0, count, _CHUNK))
    jobs = [(off, min(_CHUNK, count - off)) for off in offsets]

    def run_one(job: tuple[int, int]):
        off, size = job
        digs = _start_digit_vectors(bases, taus, m, start + off)
        return impl.segment_chunk(
            list(bases.bases), list(taus), m, digs, size, box_scale, vol_scaled
        )

    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_one, jobs))
    else:
        results = [run_one(job) for job in jobs]

    hits_total = 0
    steps_done = 0
    sum_delta = 0
    gmax = gmin = 0
    n_at_max = n_at_min = 0
    first = True
    for (off, size), (hits, sum_counts, max_rel, t_max, min_rel, t_min) in zip(
        jobs, results
    ):
        entry = hits_total * box_scale - steps_done * vol_scaled
        sum_delta += size * entry + (
            sum_counts * box_scale - vol_scaled * size * (size + 1) // 2
        )
        for rel, t in ((max_rel, t_max), (min_rel, t_min)):
            val = entry + rel
            n = steps_done + t
            if first:
                gmax = gmin = val
                n_at_max = n_at_min = n
                first = False
                continue
            if val > gmax:
                gmax, n_at_max = val, n
            if val < gmin:
                gmin, n_at_min = val, n
        hits_total += hits
        steps_done += size
    return SegmentStats(
        count=count,
        box_scale=box_scale,
        vol_scaled=vol_scaled,
        hits=hits_total,
        sum_delta_scaled=sum_delta,
        max_scaled=gmax,
        n_at_max=n_at_max,
        min_scaled=gmin,
        n_at_min=n_at_min,
    )
