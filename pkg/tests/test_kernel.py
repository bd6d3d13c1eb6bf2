import pytest

from haltonbound import kernel
from haltonbound.kernel import SegmentStats, run_segment
from haltonbound.sequence import BaseVector
from haltonbound.witness import modulus_P, start_index, tau_vector, witness_corner

B23 = BaseVector.of(2, 3)
B235 = BaseVector.of(2, 3, 5)

HAVE_C = kernel._segment_c is not None


def pass_args(bases, m, count=None, start=None):
    tau = tau_vector(bases)
    corner = witness_corner(bases, tau, m)
    v, d = corner.volume_scaled()
    if start is None:
        start = start_index(bases, tau, m)
    if count is None:
        count = modulus_P(bases, tuple(t * m for t in tau.tau))
    return bases, tau.tau, m, start, count, d, v


@pytest.mark.skipif(not HAVE_C, reason="compiled kernel not built")
class TestBackendParity:
    @pytest.mark.parametrize(
        "bases,m",
        [(B23, 1), (B23, 2), (B23, 3), (B23, 4), (B235, 1)],
    )
    def test_full_period(self, bases, m):
        args = pass_args(bases, m)
        assert run_segment(*args, backend="c") == run_segment(*args, backend="python")

    @pytest.mark.parametrize("start", [0, 1, 83, 10**18 + 7])
    def test_odd_starts_and_lengths(self, start):
        args = pass_args(B23, 2, count=997, start=start)
        assert run_segment(*args, backend="c") == run_segment(*args, backend="python")


class TestChunking:
    def test_chunk_size_invariance(self, monkeypatch):
        args = pass_args(B23, 3)
        whole = run_segment(*args)
        monkeypatch.setattr(kernel, "_CHUNK", 7)
        chopped = run_segment(*args)
        assert whole == chopped

    def test_thread_count_invariance(self, monkeypatch):
        monkeypatch.setattr(kernel, "_CHUNK", 64)
        args = pass_args(B23, 3)
        assert run_segment(*args, threads=1) == run_segment(*args, threads=4)

    def test_scale_guard_falls_back(self):
        # scales beyond the int64 headroom must still give exact results
        bases, taus, m, start, count, d, v = pass_args(B23, 2, count=50)
        big = 1 << 45
        reference = run_segment(
            bases, taus, m, start, count, d * big, v * big, backend="python"
        )
        auto = run_segment(bases, taus, m, start, count, d * big, v * big)
        assert auto == reference

    def test_count_must_be_positive(self):
        args = pass_args(B23, 1, count=0)
        with pytest.raises(ValueError):
            run_segment(*args)


class TestArgmaxAbs:
    def test_prefers_larger_magnitude(self):
        stats = SegmentStats(
            count=10,
            box_scale=1,
            vol_scaled=1,
            hits=0,
            sum_delta_scaled=0,
            max_scaled=3,
            n_at_max=5,
            min_scaled=-4,
            n_at_min=9,
        )
        assert stats.argmax_abs() == (9, -4)

    def test_tie_takes_smaller_index(self):
        stats = SegmentStats(
            count=10,
            box_scale=1,
            vol_scaled=1,
            hits=0,
            sum_delta_scaled=0,
            max_scaled=4,
            n_at_max=7,
            min_scaled=-4,
            n_at_min=3,
        )
        assert stats.argmax_abs() == (3, -4)
