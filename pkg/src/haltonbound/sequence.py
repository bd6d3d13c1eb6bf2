"""Radical inverses and Halton points with exact rational coordinates.

The radical inverse in base p mirrors the base-p digits of an index n
across the radix point:

    n = sum_i e_i p^i   ->   phi_p(n) = sum_i e_i p^(-i-1)  in [0, 1).

An s-dimensional Halton point is the vector of radical inverses of one
index in s pairwise-coprime bases.  Coordinates are `fractions.Fraction`
throughout: point-in-box decisions downstream must be exact, so there is
no floating-point path in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .errors import InvalidBase, NotCoprimeModuli
from .numtheory import pairwise_coprime

# A digit list stores least-significant-first integer digits e_0, e_1, ...
# or the fractional digits x_1, x_2, ... of a value in [0,1) (x_1 is the
# most significant).  Both live in the same structure; the `kind` flag says
# which reading applies, so the two index conventions never get mixed up.
INTEGER = "integer"
FRACTIONAL = "fractional"


@dataclass(frozen=True)
class DigitExpansion:
    """Digit list in a fixed base, either an integer or a fractional view."""

    base: int
    digits: tuple[int, ...]
    kind: str = INTEGER

    def __post_init__(self):
        if self.base < 2:
            raise InvalidBase(f"base must be >= 2, got {self.base}")
        if self.kind not in (INTEGER, FRACTIONAL):
            raise ValueError(f"unknown digit kind {self.kind!r}")
        if any(not 0 <= d < self.base for d in self.digits):
            raise ValueError(f"digit out of range for base {self.base}")

    def as_integer(self) -> int:
        """Reconstruct sum e_i * base^i (integer view only)."""
        if self.kind != INTEGER:
            raise ValueError("as_integer() needs an integer-view expansion")
        value = 0
        for d in reversed(self.digits):
            value = value * self.base + d
        return value

    def as_fraction(self) -> Fraction:
        """Value of the digit list read as sum digits[j] * base^-(j+1).

        For a fractional view this is the value the digits came from.  For
        an integer view it mirrors the digits across the radix point, i.e.
        it is exactly the radical inverse of the reconstructed integer.
        """
        num = 0
        for d in self.digits:
            num = num * self.base + d
        return Fraction(num, self.base ** len(self.digits))


@dataclass(frozen=True)
class BaseVector:
    """Pairwise-coprime bases p_1..p_s with product p0 and cofactors p0/p_i."""

    bases: tuple[int, ...]

    def __post_init__(self):
        if len(self.bases) < 1:
            raise ValueError("need at least one base")
        for p in self.bases:
            if p < 2:
                raise InvalidBase(f"base must be >= 2, got {p}")
        if not pairwise_coprime(self.bases):
            raise NotCoprimeModuli(f"bases {self.bases} are not pairwise coprime")

    @classmethod
    def of(cls, *bases: int) -> "BaseVector":
        return cls(tuple(bases))

    @property
    def s(self) -> int:
        return len(self.bases)

    @property
    def p0(self) -> int:
        return math.prod(self.bases)

    @property
    def cobase(self) -> tuple[int, ...]:
        p0 = self.p0
        return tuple(p0 // p for p in self.bases)


@dataclass(frozen=True)
class Point:
    """A point of [0,1)^s with exact rational coordinates."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if any(not 0 <= c < 1 for c in self.coords):
            raise ValueError("coordinates must lie in [0, 1)")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)


def digits_of(n: int, base: int) -> DigitExpansion:
    """Least-significant-first base-`base` digits of n, no trailing zeros."""
    if base < 2:
        raise InvalidBase(f"base must be >= 2, got {base}")
    if n < 0:
        raise ValueError("n must be non-negative")
    digits = []
    while n:
        n, d = divmod(n, base)
        digits.append(d)
    return DigitExpansion(base, tuple(digits), INTEGER)


def fractional_digits(x: Fraction, base: int, count: int) -> DigitExpansion:
    """First `count` base-`base` fractional digits x_1..x_count of x in [0,1)."""
    if base < 2:
        raise InvalidBase(f"base must be >= 2, got {base}")
    if not 0 <= x < 1:
        raise ValueError("x must lie in [0, 1)")
    digits = []
    num, den = x.numerator, x.denominator
    for _ in range(count):
        num *= base
        d, num = divmod(num, den)
        digits.append(d)
    return DigitExpansion(base, tuple(digits), FRACTIONAL)


def radical_inverse(n: int, base: int) -> Fraction:
    """phi_base(n): the base-`base` digits of n mirrored across the radix point."""
    if base < 2:
        raise InvalidBase(f"base must be >= 2, got {base}")
    if n < 0:
        raise ValueError("n must be non-negative")
    num = 0
    den = 1
    while n:
        n, d = divmod(n, base)
        num = num * base + d
        den *= base
    return Fraction(num, den)


def digit_reversal(expansion: DigitExpansion, r: int) -> int:
    """Mirror the first r fractional digits into an integer:

        x_1, x_2, ..., x_r  ->  sum_{1<=j<=r} x_j * base^(j-1).

    The residue class of this value mod base^r selects exactly the indices
    n whose radical inverse falls in the length-base^(-r) interval anchored
    at the r-digit truncation of x.  Missing digits count as zero, so r may
    exceed the stored digit count; r = 0 gives the empty sum 0.
    """
    if expansion.kind != FRACTIONAL:
        raise ValueError("digit_reversal needs a fractional-view expansion")
    if r < 0:
        raise ValueError("r must be >= 0")
    value = 0
    for j in range(min(r, len(expansion.digits)) - 1, -1, -1):
        value = value * expansion.base + expansion.digits[j]
    return value


def halton_point(bases: BaseVector, n: int) -> Point:
    """The n-th Halton point: componentwise radical inverses of n."""
    return Point(tuple(radical_inverse(n, p) for p in bases.bases))


def _phi_of_counter(digits: list[int], base: int) -> Fraction:
    num = 0
    for d in digits:
        num = num * base + d
    return Fraction(num, base ** len(digits))


def halton_stream(
    bases: BaseVector, start: int = 0, count: Optional[int] = None
) -> Iterator[Point]:
    """Lazily yield Halton points for indices start, start+1, ...

    Keeps one persistent digit counter per base and increments it in place,
    so stepping costs amortized O(1) digit operations per point even when
    `start` is astronomically large.  Stops after `count` points, or never
    if `count` is None.
    """
    if start < 0:
        raise ValueError("start must be non-negative")
    counters: list[list[int]] = [
        list(digits_of(start, p).digits) for p in bases.bases
    ]
    emitted = 0
    while count is None or emitted < count:
        yield Point(
            tuple(
                _phi_of_counter(counters[i], p)
                for i, p in enumerate(bases.bases)
            )
        )
        emitted += 1
        for i, p in enumerate(bases.bases):
            ctr = counters[i]
            j = 0
            while j < len(ctr):
                ctr[j] += 1
                if ctr[j] < p:
                    break
                ctr[j] = 0
                j += 1
            else:
                ctr.append(1)
