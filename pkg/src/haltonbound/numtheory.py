"""Exact modular arithmetic: inverses, multiplicative orders, CRT.

Everything works on plain Python ints, which are arbitrary precision, so
moduli far beyond 64-bit range are fine.  All functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    InvalidModulus,
    NotCoprime,
    NotCoprimeModuli,
    NotInvertible,
)


@dataclass(frozen=True)
class ResidueClass:
    """A residue class ``residue (mod modulus)`` with 0 <= residue < modulus."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise InvalidModulus(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise ValueError(
                f"residue {self.residue} not reduced mod {self.modulus}"
            )

    def __str__(self):
        return f"{self.residue} (mod {self.modulus})"


def mod_inverse(a: int, m: int) -> int:
    """Return b in [0, m) with a*b == 1 (mod m)."""
    if m < 2:
        raise InvalidModulus(f"modulus must be >= 2, got {m}")
    try:
        return pow(a, -1, m)
    except ValueError:
        raise NotInvertible(f"{a} is not invertible mod {m}") from None


def multiplicative_order(a: int, m: int) -> int:
    """Smallest k >= 1 with a**k == 1 (mod m).

    Iterative powering with early exit; the order divides Euler's totient,
    so fewer than m steps always suffice.  The moduli this package feeds in
    are tiny (cofactors of a base product), so no totient factoring is
    needed.
    """
    if m < 2:
        raise InvalidModulus(f"modulus must be >= 2, got {m}")
    if math.gcd(a, m) != 1:
        raise NotCoprime(f"gcd({a}, {m}) != 1, order undefined")
    x = a % m
    k = 1
    while x != 1:
        x = x * a % m
        k += 1
    return k


def pairwise_coprime(values: Iterable[int]) -> bool:
    """True iff every pair of values has gcd 1."""
    vals = list(values)
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            if math.gcd(vals[i], vals[j]) != 1:
                return False
    return True


def crt_combine(residues: Sequence[ResidueClass]) -> ResidueClass:
    """Combine residue classes with pairwise-coprime moduli.

    Uses the explicit sum  x = sum_i M_i * (P/m_i) * r_i  (mod P) with
    M_i = (P/m_i)^-1 mod m_i, rather than Garner's algorithm, so the
    multipliers M_i match the ones exposed to the witness construction.
    """
    if not residues:
        raise ValueError("need at least one residue class")
    moduli = [rc.modulus for rc in residues]
    if not pairwise_coprime(moduli):
        raise NotCoprimeModuli(f"moduli {moduli} are not pairwise coprime")
    big_p = math.prod(moduli)
    acc = 0
    for rc in residues:
        cofactor = big_p // rc.modulus
        if rc.modulus == 1:
            continue
        m_i = mod_inverse(cofactor % rc.modulus, rc.modulus)
        acc += m_i * cofactor * rc.residue
    return ResidueClass(acc % big_p, big_p)
