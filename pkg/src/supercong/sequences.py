"""Combinatorial sequences used throughout the verification suites.

Pochhammer symbols at rational arguments, binomials, generalized harmonic
numbers, the odd-square harmonic sum, base-2 Fermat quotients, secant-family
Euler numbers, and the Catalan-type central binomial summand.  Everything is
exact; prefix sums and Euler numbers are memoized because the congruence
suites query them for many consecutive indices and many primes.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Callable

from .exact import Rational, is_prime

_MISSING = object()


class SeqCache:
    """Memo table keyed by (sequence id, index).

    Writes are guarded so threads may share an instance; a stored value is
    always identical to recomputation from scratch, so losing a write race
    is harmless.
    """

    def __init__(self) -> None:
        self._data: dict[tuple[str, int], object] = {}
        self._lock = threading.Lock()

    def get_or_compute(self, seq_id: str, index: int, compute: Callable[[], object]):
        key = (seq_id, index)
        value = self._data.get(key, _MISSING)
        if value is _MISSING:
            value = compute()
            with self._lock:
                self._data.setdefault(key, value)
        return value

    def __len__(self) -> int:
        return len(self._data)


_cache = SeqCache()
_rows_lock = threading.Lock()
_harmonic_rows: dict[int, list[Fraction]] = {}
_odd_square_row: list[Fraction] = [Fraction(0)]


def pochhammer(a: Rational | int, k: int) -> Fraction:
    """Rising factorial a(a+1)...(a+k-1); the empty product (k = 0) is 1."""
    if k < 0:
        raise ValueError(f"index must be >= 0, got {k}")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def binomial(n: int, k: int) -> int:
    """Binomial coefficient for n >= 0, with 0 for k outside [0, n]."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def harmonic(k: int, r: int = 1) -> Fraction:
    """Generalized harmonic number: sum of 1/j**r over j = 1..k."""
    if k < 0:
        raise ValueError(f"index must be >= 0, got {k}")
    if r < 1:
        raise ValueError(f"order must be >= 1, got {r}")
    with _rows_lock:
        row = _harmonic_rows.setdefault(r, [Fraction(0)])
        while len(row) <= k:
            j = len(row)
            row.append(row[-1] + Fraction(1, j**r))
        return row[k]


def odd_square_harmonic(k: int) -> Fraction:
    """Sum of 1/(2j-1)**2 over j = 1..k.

    Splitting the even-index terms out of the order-2 harmonic sum shows this
    equals harmonic(2k, 2) - harmonic(k, 2)/4.
    """
    if k < 0:
        raise ValueError(f"index must be >= 0, got {k}")
    with _rows_lock:
        row = _odd_square_row
        while len(row) <= k:
            j = len(row)
            row.append(row[-1] + Fraction(1, (2 * j - 1) ** 2))
        return row[k]


def fermat_quotient2(p: int) -> int:
    """The base-2 Fermat quotient (2**(p-1) - 1) / p for an odd prime p.

    Integral by Fermat's little theorem; the division is checked anyway.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    num = 2 ** (p - 1) - 1
    quotient, remainder = divmod(num, p)
    if remainder:
        raise ArithmeticError(f"2**({p}-1) - 1 is not divisible by {p}")
    return quotient


def euler_number(n: int) -> int:
    """Secant-family Euler numbers.

    E_0 = 1, every odd index is 0, and the even indices satisfy
    sum(binomial(2m, 2j) * E_{2j} for j = 0..m) = 0, which pins E_{2m}
    from the earlier values.  Memoized; values grow fast but stay integral.
    """
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    if n % 2:
        return 0
    return _cache.get_or_compute("euler", n, lambda: _euler_even(n))


def _euler_even(n: int) -> int:
    if n == 0:
        return 1
    acc = 0
    for j in range(0, n, 2):
        acc += math.comb(n, j) * euler_number(j)
    return -acc


def central_catalan_summand(k: int) -> Fraction:
    """binomial(4k, 2k) * binomial(2k, k) / ((2k+1) * 64**k), exactly.

    The first factor over 2k+1 is the 2k-th Catalan number.
    """
    if k < 0:
        raise ValueError(f"index must be >= 0, got {k}")
    return Fraction(binomial(4 * k, 2 * k) * binomial(2 * k, k), (2 * k + 1) * 64**k)
