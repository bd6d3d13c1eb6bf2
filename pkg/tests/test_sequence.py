from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from haltonbound.errors import InvalidBase, NotCoprimeModuli
from haltonbound.sequence import (
    FRACTIONAL,
    BaseVector,
    DigitExpansion,
    Point,
    digit_reversal,
    digits_of,
    fractional_digits,
    halton_point,
    halton_stream,
    radical_inverse,
)


def phi_by_digits(n, p):
    """Oracle: expand digits with divmod, sum e_i * p^(-i-1) as Fractions."""
    total = Fraction(0)
    i = 0
    while n:
        n, d = divmod(n, p)
        total += Fraction(d, p ** (i + 1))
        i += 1
    return total


class TestDigitsOf:
    @pytest.mark.parametrize(
        "n,base,expected",
        [(0, 2, ()), (5, 2, (1, 0, 1)), (84, 3, (0, 1, 0, 0, 1))],
    )
    def test_examples(self, n, base, expected):
        exp = digits_of(n, base)
        assert exp.digits == expected
        assert exp.as_integer() == n

    def test_invalid_base(self):
        with pytest.raises(InvalidBase):
            digits_of(5, 1)

    @given(st.integers(min_value=0, max_value=10**40), st.integers(min_value=2, max_value=100))
    def test_round_trip(self, n, base):
        exp = digits_of(n, base)
        assert exp.as_integer() == n
        assert not exp.digits or exp.digits[-1] != 0


class TestRadicalInverse:
    @pytest.mark.parametrize(
        "n,base,expected",
        [(0, 2, Fraction(0)), (3, 2, Fraction(3, 4)), (5, 3, Fraction(7, 9))],
    )
    def test_examples(self, n, base, expected):
        assert phi_by_digits(n, base) == expected
        assert radical_inverse(n, base) == expected

    @given(st.integers(min_value=0, max_value=10**30), st.integers(min_value=2, max_value=50))
    def test_matches_digit_sum(self, n, base):
        assert radical_inverse(n, base) == phi_by_digits(n, base)

    @pytest.mark.parametrize("p,r", [(2, 10), (3, 6), (5, 4), (10, 3)])
    def test_bijection_onto_grid(self, p, r):
        # injective on [0, p^r) with image exactly the multiples of p^-r
        values = {radical_inverse(n, p) for n in range(p**r)}
        assert values == {Fraction(k, p**r) for k in range(p**r)}

    def test_mirrored_view_of_integer_digits(self):
        exp = digits_of(84, 3)
        assert exp.as_fraction() == radical_inverse(84, 3) == Fraction(28, 243)


class TestDigitReversal:
    def test_zero(self):
        zero = DigitExpansion(2, (), FRACTIONAL)
        for r in range(4):
            assert digit_reversal(zero, r) == 0

    def test_interval_selection_base2(self):
        # x = 0.01_2, r = 2: reversal 2; phi_2(n) in [1/4, 1/2) iff n = 2 mod 4
        exp = DigitExpansion(2, (0, 1), FRACTIONAL)
        assert digit_reversal(exp, 2) == 2
        lo = exp.as_fraction()
        for n in range(16):
            member = lo <= radical_inverse(n, 2) < lo + Fraction(1, 4)
            assert member == (n % 4 == 2)

    def test_interval_selection_base3(self):
        exp = DigitExpansion(3, (1,), FRACTIONAL)
        assert digit_reversal(exp, 1) == 1
        for n in range(9):
            member = Fraction(1, 3) <= radical_inverse(n, 3) < Fraction(2, 3)
            assert member == (n % 3 == 1)

    def test_padding_beyond_digits(self):
        exp = DigitExpansion(5, (2, 3), FRACTIONAL)
        padded = DigitExpansion(5, (2, 3, 0, 0), FRACTIONAL)
        assert digit_reversal(exp, 4) == digit_reversal(padded, 4)

    def test_integer_view_rejected(self):
        with pytest.raises(ValueError):
            digit_reversal(digits_of(5, 2), 2)

    @pytest.mark.parametrize("p,r", [(2, 1), (2, 2), (3, 1), (3, 2), (5, 2)])
    def test_congruence_equivalence_exhaustive(self, p, r):
        # phi_p(n) in [[x]_r, [x]_r + p^-r)  iff  n = reversal (mod p^r),
        # for every r-digit prefix x and every n in [0, p^(2r))
        width = Fraction(1, p**r)
        for prefix_value in range(p**r):
            x = fractional_digits(Fraction(prefix_value, p**r), p, r)
            rev = digit_reversal(x, r)
            lo = x.as_fraction()
            for n in range(p ** (2 * r)):
                member = lo <= radical_inverse(n, p) < lo + width
                assert member == (n % p**r == rev)


class TestFractionalDigits:
    @given(
        st.integers(min_value=2, max_value=10),
        st.integers(min_value=0, max_value=10**6),
    )
    @settings(max_examples=100)
    def test_round_trip(self, base, num):
        r = 8
        x = Fraction(num % base**r, base**r)
        exp = fractional_digits(x, base, r)
        assert exp.as_fraction() == x


class TestBaseVector:
    def test_validation(self):
        with pytest.raises(NotCoprimeModuli):
            BaseVector.of(2, 4)
        with pytest.raises(InvalidBase):
            BaseVector.of(2, 1)
        b = BaseVector.of(2, 3, 5)
        assert b.p0 == 30
        assert b.cobase == (15, 10, 6)


class TestHaltonPoint:
    def test_examples(self):
        b23 = BaseVector.of(2, 3)
        assert halton_point(b23, 0).coords == (Fraction(0), Fraction(0))
        assert halton_point(b23, 5).coords == (Fraction(5, 8), Fraction(7, 9))
        b235 = BaseVector.of(2, 3, 5)
        assert halton_point(b235, 1).coords == (
            Fraction(1, 2),
            Fraction(1, 3),
            Fraction(1, 5),
        )

    def test_point_validation(self):
        with pytest.raises(ValueError):
            Point((Fraction(1), Fraction(0)))


class TestHaltonStream:
    def test_single_origin(self):
        b = BaseVector.of(2, 3)
        pts = list(halton_stream(b, 0, 1))
        assert pts[0].coords == (Fraction(0), Fraction(0))

    def test_start_three(self):
        b = BaseVector.of(2, 3)
        pts = list(halton_stream(b, 3, 2))
        # phi_3(3) = 0.01_3 = 1/9, phi_3(4) = 0.11_3 = 4/9
        assert pts[0].coords == (Fraction(3, 4), Fraction(1, 9))
        assert pts[1].coords == (Fraction(1, 8), Fraction(4, 9))
        assert [p.coords for p in pts] == [
            halton_point(b, n).coords for n in (3, 4)
        ]

    @pytest.mark.parametrize("start", [0, 1, 82, 12345, 10**30])
    def test_matches_pointwise(self, start):
        b = BaseVector.of(2, 3, 5)
        pts = list(halton_stream(b, start, 25))
        for offset, p in enumerate(pts):
            assert p.coords == halton_point(b, start + offset).coords

    def test_unbounded_stream(self):
        b = BaseVector.of(2, 3)
        gen = halton_stream(b)
        first = [next(gen) for _ in range(4)]
        assert first[3].coords == (Fraction(3, 4), Fraction(1, 9))
