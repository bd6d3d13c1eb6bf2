"""Pure-Python segment pass over consecutive Halton indices.

Used when the compiled extension is unavailable (or forced off); same
contract as `haltonbound._segment_c.segment_chunk`.

The pass walks indices start, start+1, ..., keeping one little-endian
digit counter per base, and classifies each index against the witness
corner y by digit pattern alone: the coordinate phi_p(n) lies below
y = sum_{j<=m} p^(-j*tau) exactly when, scanning tau-digit blocks of n
from the bottom, some run of "only the top digit is 1" blocks is followed
by an all-zero block within the first m blocks.  No rational arithmetic
happens per point; the running local discrepancy is tracked as the scaled
integer c(t)*D - t*V where D is the common denominator of the corner
volume and V its numerator.
"""

from __future__ import annotations


def _level(digits: list[int], tau: int, m: int) -> int:
    """Sub-interval index in [1, m] of the coordinate with these index
    digits, or 0 when the coordinate is not below the corner."""
    pos = 0
    j = 0
    while j < m:
        top = digits[pos + tau - 1]
        q = pos
        end = pos + tau - 1
        while q < end:
            if digits[q]:
                return 0
            q += 1
        if top == 0:
            return j + 1
        if top != 1:
            return 0
        pos += tau
        j += 1
    return 0


def segment_chunk(
    bases: list[int],
    taus: list[int],
    m: int,
    start_digits: list[list[int]],
    count: int,
    box_scale: int,
    vol_scaled: int,
) -> tuple[int, int, int, int, int, int]:
    """Walk `count` consecutive indices and accumulate hit statistics.

    `start_digits[i]` holds the m*taus[i] low base-bases[i] digits of the
    first index.  Returns

        (hits, sum_counts, max_rel, t_at_max, min_rel, t_at_min)

    where hits is the number of indices whose point lies in the corner box,
    sum_counts is sum over t = 1..count of the running hit count, and
    max_rel/min_rel are the extrema over t of c(t)*box_scale - t*vol_scaled
    together with the earliest t attaining each.
    """
    s = len(bases)
    digs = [list(d) for d in start_digits]
    lengths = [m * taus[i] for i in range(s)]
    hits = 0
    sum_counts = 0
    acc = 0
    max_rel = min_rel = 0
    t_max = t_min = 0
    for t in range(1, count + 1):
        inside = True
        for i in range(s):
            if _level(digs[i], taus[i], m) == 0:
                inside = False
                break
        if inside:
            hits += 1
            acc += box_scale
        acc -= vol_scaled
        sum_counts += hits
        if t == 1:
            max_rel = min_rel = acc
            t_max = t_min = 1
        elif acc > max_rel:
            max_rel = acc
            t_max = t
        elif acc < min_rel:
            min_rel = acc
            t_min = t
        for i in range(s):
            d = digs[i]
            p = bases[i]
            length = lengths[i]
            j = 0
            while j < length:
                v = d[j] + 1
                if v < p:
                    d[j] = v
                    break
                d[j] = 0
                j += 1
            # carry past the top digit drops: only n mod p^(m*tau) matters
    return hits, sum_counts, max_rel, t_max, min_rel, t_min
