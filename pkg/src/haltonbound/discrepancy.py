"""Exact local and star discrepancy of finite rational point sets.

Local discrepancy of an anchored box B(y) = [0,y_1) x ... x [0,y_s):

    Delta(B(y)) = #{points in B(y)} - N * y_1...y_s      (unnormalized)

Star discrepancy D* is the supremum of |Delta|/N over all anchored boxes.
The supremum over half-open boxes is not always attained, so the exact
algorithm enumerates candidate corners on the grid spanned by the point
coordinates and takes, at each corner, both the closed-count limit from
above and the strict-count limit from below.  Everything is compared as
exact rationals; this is a desk-scale algorithm (roughly s <= 3 and
N <= 3000) guarded by an explicit operation budget.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    EmptyPointSet,
)
from .sequence import Point

#: Default cap on candidate-corner * dimension comparisons for the exact
#: star-discrepancy enumeration.  Above this the call refuses instead of
#: silently approximating.
DEFAULT_COMPARISON_BUDGET = 10**8


@dataclass(frozen=True)
class AnchoredBox:
    """Half-open box [0, y_1) x ... x [0, y_s) with 0 < y_i <= 1."""

    upper: tuple[Fraction, ...]

    def __post_init__(self):
        if any(not 0 < y <= 1 for y in self.upper):
            raise ValueError("anchored-box corner coordinates must be in (0, 1]")

    @property
    def dim(self) -> int:
        return len(self.upper)

    @property
    def volume(self) -> Fraction:
        return math.prod(self.upper, start=Fraction(1))

    def contains(self, p: Point) -> bool:
        if p.dim != self.dim:
            raise DimensionMismatch(f"point dim {p.dim} != box dim {self.dim}")
        return all(x < y for x, y in zip(p.coords, self.upper))


@dataclass(frozen=True)
class HalfOpenBox:
    """Box prod_i [lower_i, upper_i) with 0 <= lower_i < upper_i <= 1."""

    lower: tuple[Fraction, ...]
    upper: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise DimensionMismatch("lower and upper corner dimensions differ")
        for lo, hi in zip(self.lower, self.upper):
            if not 0 <= lo < hi <= 1:
                raise ValueError("need 0 <= lower < upper <= 1 in every coordinate")

    @property
    def dim(self) -> int:
        return len(self.upper)

    @property
    def volume(self) -> Fraction:
        return math.prod(
            (hi - lo for lo, hi in zip(self.lower, self.upper)), start=Fraction(1)
        )

    def contains(self, p: Point) -> bool:
        if p.dim != self.dim:
            raise DimensionMismatch(f"point dim {p.dim} != box dim {self.dim}")
        return all(
            lo <= x < hi for x, lo, hi in zip(p.coords, self.lower, self.upper)
        )


Box = Union[AnchoredBox, HalfOpenBox]


@dataclass(frozen=True)
class PointSet:
    """Immutable ordered list of points sharing one dimension."""

    points: tuple[Point, ...]

    def __post_init__(self):
        dims = {p.dim for p in self.points}
        if len(dims) > 1:
            raise DimensionMismatch(f"mixed point dimensions {sorted(dims)}")

    @classmethod
    def of(cls, points: Iterable[Point]) -> "PointSet":
        return cls(tuple(points))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def dim(self) -> int:
        if not self.points:
            raise EmptyPointSet("dimension of an empty point set is undefined")
        return self.points[0].dim


def contains(box: Box, p: Point) -> bool:
    """Exact half-open membership test."""
    return box.contains(p)


def local_discrepancy(ps: PointSet, box: AnchoredBox) -> Fraction:
    """Signed count excess  #{points in box} - N * vol(box)."""
    if ps.points and ps.dim != box.dim:
        raise DimensionMismatch(f"point dim {ps.dim} != box dim {box.dim}")
    inside = sum(1 for p in ps.points if box.contains(p))
    return inside - ps.n * box.volume


def local_discrepancy_subbox(ps: PointSet, box: HalfOpenBox) -> Fraction:
    """Same as local_discrepancy but for a non-anchored half-open box."""
    if ps.points and ps.dim != box.dim:
        raise DimensionMismatch(f"point dim {ps.dim} != box dim {box.dim}")
    inside = sum(1 for p in ps.points if box.contains(p))
    return inside - ps.n * box.volume


def star_discrepancy_lower_bound(
    ps: PointSet, probes: Sequence[AnchoredBox]
) -> Fraction:
    """max over probe boxes of |Delta|/N: a certified lower bound on D*."""
    if ps.n == 0:
        raise EmptyPointSet("star discrepancy needs at least one point")
    best = Fraction(0)
    for box in probes:
        value = abs(local_discrepancy(ps, box)) / ps.n
        if value > best:
            best = value
    return best


def _candidate_grid(ps: PointSet) -> list[list[Fraction]]:
    dim = ps.dim
    one = Fraction(1)
    grid = []
    for i in range(dim):
        values = {p.coords[i] for p in ps.points}
        values.add(one)
        grid.append(sorted(values))
    return grid


def _star_exact_with_corner(
    ps: PointSet, budget: int
) -> tuple[Fraction, tuple[Fraction, ...]]:
    if ps.n == 0:
        raise EmptyPointSet("star discrepancy needs at least one point")
    grid = _candidate_grid(ps)
    n_candidates = math.prod(len(g) for g in grid)
    cost = n_candidates * ps.n * ps.dim
    if cost > budget:
        raise BudgetExceeded(cost, budget, "exact star-discrepancy enumeration")
    n = ps.n
    best = Fraction(-1)
    best_corner: tuple[Fraction, ...] = ()
    for corner in itertools.product(*grid):
        weak = 0
        strict = 0
        for p in ps.points:
            is_weak = True
            is_strict = True
            for x, y in zip(p.coords, corner):
                if x > y:
                    is_weak = False
                    is_strict = False
                    break
                if x == y:
                    is_strict = False
            if is_weak:
                weak += 1
                if is_strict:
                    strict += 1
        vol = math.prod(corner, start=Fraction(1))
        # Closed count gives the limit from just above the corner, strict
        # count the limit from just below; the half-open sup is the larger.
        value = max(Fraction(weak, n) - vol, vol - Fraction(strict, n))
        if value > best:
            best = value
            best_corner = corner
    return best, best_corner


def star_discrepancy_exact(
    ps: PointSet, budget: Optional[int] = None
) -> Fraction:
    """Exact star discrepancy D* of a finite rational point set.

    Candidate upper corners run over the per-dimension coordinate values
    plus 1.  At each corner both the weak (<=) and strict (<) point counts
    are formed; their two one-sided deviations capture the limit values of
    the half-open definition exactly, including suprema that are only
    attained in the limit (e.g. the single point {0} has D* = 1).
    """
    value, _ = _star_exact_with_corner(
        ps, DEFAULT_COMPARISON_BUDGET if budget is None else budget
    )
    return value


def star_discrepancy_exact_with_corner(
    ps: PointSet, budget: Optional[int] = None
) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Like star_discrepancy_exact, also returning an attaining corner."""
    return _star_exact_with_corner(
        ps, DEFAULT_COMPARISON_BUDGET if budget is None else budget
    )
