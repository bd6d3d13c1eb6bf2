# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled segment pass over consecutive Halton indices.

Same contract as `haltonbound._segment_py.segment_chunk`; see that module
for the algorithm.  All per-step state is C integers, so the caller must
guarantee that box_scale, vol_scaled and count keep every accumulator
below 2^62 (the dispatcher in `haltonbound.kernel` enforces this before
choosing this backend).
"""

from libc.stdlib cimport free, malloc


def segment_chunk(bases, taus, int m, start_digits, long long count,
                  long long box_scale, long long vol_scaled):
    """Walk `count` consecutive indices; see _segment_py.segment_chunk."""
    cdef int s = len(bases)
    cdef int i, j, q, tau_i, length, top, ok
    cdef long long t
    cdef long long hits = 0, sum_counts = 0, acc = 0
    cdef long long max_rel = 0, min_rel = 0, t_max = 0, t_min = 0
    cdef int level, pos, end
    cdef bint inside

    cdef int *p = <int *> malloc(s * sizeof(int))
    cdef int *tau = <int *> malloc(s * sizeof(int))
    cdef int *off = <int *> malloc((s + 1) * sizeof(int))
    cdef int *dig = NULL
    if p == NULL or tau == NULL or off == NULL:
        free(p); free(tau); free(off)
        raise MemoryError()
    try:
        off[0] = 0
        for i in range(s):
            p[i] = bases[i]
            tau[i] = taus[i]
            off[i + 1] = off[i] + m * tau[i]
        dig = <int *> malloc(off[s] * sizeof(int))
        if dig == NULL:
            raise MemoryError()
        for i in range(s):
            row = start_digits[i]
            for j in range(m * tau[i]):
                dig[off[i] + j] = row[j]

        with nogil:
            for t in range(1, count + 1):
                inside = True
                for i in range(s):
                    tau_i = tau[i]
                    pos = off[i]
                    level = -1
                    j = 0
                    while j < m:
                        top = dig[pos + tau_i - 1]
                        ok = 1
                        q = pos
                        end = pos + tau_i - 1
                        while q < end:
                            if dig[q] != 0:
                                ok = 0
                                break
                            q += 1
                        if ok == 0 or top > 1:
                            level = 0
                            break
                        if top == 0:
                            level = j + 1
                            break
                        pos += tau_i
                        j += 1
                    if level <= 0:
                        inside = False
                        break
                if inside:
                    hits += 1
                    acc += box_scale
                acc -= vol_scaled
                sum_counts += hits
                if t == 1:
                    max_rel = acc
                    min_rel = acc
                    t_max = 1
                    t_min = 1
                elif acc > max_rel:
                    max_rel = acc
                    t_max = t
                elif acc < min_rel:
                    min_rel = acc
                    t_min = t
                for i in range(s):
                    length = m * tau[i]
                    pos = off[i]
                    j = 0
                    while j < length:
                        if dig[pos + j] + 1 < p[i]:
                            dig[pos + j] += 1
                            break
                        dig[pos + j] = 0
                        j += 1
    finally:
        free(p)
        free(tau)
        free(off)
        free(dig)
    return hits, sum_counts, max_rel, t_max, min_rel, t_min
