"""Dense univariate polynomials and rational functions over exact rationals.

Degrees stay small (a few hundred at most), so a dense coefficient list and
schoolbook multiplication are the right tools.  The one non-routine operation
is ``eval_with_cancellation``, which evaluates a rational function at a point
after peeling off the common (x - x0) factor, i.e. computes the limit.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .exact import Rational


class NotDivisible(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class PoleAtPoint(ArithmeticError):
    """The denominator vanishes to strictly higher order than the numerator."""


#: Degree of the zero polynomial.
NEG_INFINITE_DEGREE = -math.inf


class Poly:
    """Polynomial as a coefficient tuple indexed by degree.

    The highest stored coefficient is nonzero; the zero polynomial stores
    nothing.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational | int] = ()) -> None:
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c: Rational | int) -> "Poly":
        return cls((c,))

    @classmethod
    def variable(cls) -> "Poly":
        """The monomial x."""
        return cls((0, 1))

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITE_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return "Poly(" + " + ".join(terms) + ")"

    @staticmethod
    def _coerce(other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return None

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, factor: Rational | int) -> "Poly":
        return Poly(tuple(c * factor for c in self.coeffs))

    def evaluate(self, x0: Rational | int) -> Fraction:
        """Horner evaluation at a rational point."""
        x0 = Fraction(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Quotient and remainder of division by a nonzero polynomial."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Poly(), self
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i] / lead
            if c == 0:
                continue
            quot[i - db] = c
            for j, bc in enumerate(other.coeffs):
                rem[i - db + j] -= c * bc
        return Poly(quot), Poly(rem[:db])


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    """Named-operation form of +, -, * for callers driven by data."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def poly_div_exact(a: Poly, b: Poly) -> Poly:
    """Quotient q with a = b*q; raises NotDivisible on a nonzero remainder."""
    q, r = a.divmod(b)
    if not r.is_zero():
        raise NotDivisible(f"{b!r} does not divide {a!r} (remainder {r!r})")
    return q


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic Euclidean gcd; gcd with the zero polynomial is the other argument."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    if a.is_zero():
        return a
    return a.scale(1 / a.coeffs[-1])


def pochhammer_poly(base: Poly, k: int) -> Poly:
    """Rising-factorial product base(base+1)...(base+k-1) for a base of degree <= 1."""
    if k < 0:
        raise ValueError(f"index must be >= 0, got {k}")
    if base.degree not in (NEG_INFINITE_DEGREE, 0, 1):
        raise ValueError(f"base must have degree <= 1, got degree {base.degree}")
    out = Poly.constant(1)
    for i in range(k):
        out = out * (base + i)
    return out


class RatFunc:
    """Quotient of two polynomials with a monic denominator.

    Construction only normalizes the leading coefficient; cancelling the
    polynomial gcd is deferred to ``reduced`` since most instances are
    evaluated once and discarded.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly) -> None:
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        lead = den.coeffs[-1]
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def reduced(self) -> "RatFunc":
        """Cancel the gcd; numerator and denominator come out coprime."""
        g = poly_gcd(self.num, self.den)
        if g.is_zero() or g.degree == 0:
            return self
        return RatFunc(poly_div_exact(self.num, g), poly_div_exact(self.den, g))


def eval_with_cancellation(f: RatFunc, x0: Rational | int) -> Fraction:
    """Value of f at x0 after cancelling the common (x - x0) factor.

    Both parts are divided by (x - x0) while both vanish at x0 (each division
    is exact by the factor theorem); what remains is evaluated directly.  The
    result equals the limit of f(x) as x -> x0.  PoleAtPoint is raised when
    the denominator vanishes to strictly higher order.
    """
    x0 = Fraction(x0)
    num, den = f.num, f.den
    if num.is_zero():
        return Fraction(0)
    linear = Poly((-x0, 1))
    while num.evaluate(x0) == 0 and den.evaluate(x0) == 0:
        num = poly_div_exact(num, linear)
        den = poly_div_exact(den, linear)
    dval = den.evaluate(x0)
    if dval == 0:
        raise PoleAtPoint(f"denominator vanishes to higher order than numerator at {x0}")
    return num.evaluate(x0) / dval
