"""Exact scalar arithmetic: rationals, prime powers, residues, p-adic valuation.

The universal scalar type is the stdlib ``fractions.Fraction``: arbitrary
precision, always reduced to lowest terms with a positive denominator, and
zero normalized to 0/1.  It is re-exported here as ``Rational`` so the rest
of the package has a single name for it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

Rational = Fraction

#: Valuation of an exact zero; compares greater than every finite exponent.
INFINITE_VALUATION = math.inf


class NonIntegralAtP(ValueError):
    """Reduction of a rational whose denominator is divisible by p."""


class NotInvertible(ValueError):
    """Modular inverse of a multiple of p requested modulo p**k."""


# Witnesses making Miller-Rabin deterministic for n < 3.3e24 (covers 2**64).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with a fixed witness set)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in(lo: int, hi: int) -> list[int]:
    """Ascending primes in the closed interval [lo, hi], by sieve."""
    if hi < 2 or lo > hi:
        return []
    flags = bytearray([1]) * (hi + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(hi) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, hi + 1, i)))
    return [i for i in range(max(lo, 2), hi + 1) if flags[i]]


@dataclass(frozen=True)
class PrimePower:
    """A modulus p**k whose base is validated prime at construction."""

    p: int
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"exponent must be >= 1, got {self.k}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @cached_property
    def modulus(self) -> int:
        return self.p**self.k

    def __str__(self) -> str:
        return f"{self.p}^{self.k}"


@dataclass(frozen=True)
class ResidueClass:
    """An integer residue in [0, p**k) paired with its modulus.

    Supports addition and multiplication with residues of the same modulus,
    which is enough to run whole summations purely in modular arithmetic.
    """

    value: int
    modulus: PrimePower

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus.modulus:
            raise ValueError(f"residue {self.value} outside [0, {self.modulus.modulus})")

    @classmethod
    def from_int(cls, n: int, modulus: PrimePower) -> "ResidueClass":
        return cls(n % modulus.modulus, modulus)

    def _check_same(self, other: "ResidueClass") -> None:
        if self.modulus != other.modulus:
            raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")

    def __add__(self, other: "ResidueClass") -> "ResidueClass":
        self._check_same(other)
        return ResidueClass((self.value + other.value) % self.modulus.modulus, self.modulus)

    def __mul__(self, other: "ResidueClass") -> "ResidueClass":
        self._check_same(other)
        return ResidueClass((self.value * other.value) % self.modulus.modulus, self.modulus)


def padic_valuation(q: Rational | int, p: int) -> int | float:
    """Exponent of p in q: v_p(num) - v_p(den).  v_p(0) is the infinity marker."""
    if q == 0:
        return INFINITE_VALUATION
    q = Fraction(q)
    num, den = q.numerator, q.denominator
    v = 0
    # num and den are coprime, so at most one of the loops runs.
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def mod_inverse(a: int, m: PrimePower) -> int:
    """The x in [0, p**k) with a*x = 1 (mod p**k); requires gcd(a, p) = 1."""
    try:
        return pow(a, -1, m.modulus)
    except ValueError:
        raise NotInvertible(f"{a} is divisible by {m.p}, not invertible mod {m}") from None


def reduce_mod(q: Rational | int, m: PrimePower) -> ResidueClass:
    """Residue of a p-integral rational modulo p**k.

    The denominator is inverted mod p**k, so the result is well defined
    exactly when v_p(q) >= 0; otherwise NonIntegralAtP is raised.
    """
    q = Fraction(q)
    if q.denominator % m.p == 0:
        raise NonIntegralAtP(f"{q} has negative {m.p}-adic valuation, not reducible mod {m}")
    return ResidueClass(q.numerator * mod_inverse(q.denominator, m) % m.modulus, m)


def legendre_symbol(a: int, p: int) -> int:
    """Quadratic character of a mod an odd prime p, via Euler's criterion.

    Returns 0 when p divides a, +1 for nonzero squares, -1 otherwise.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r
