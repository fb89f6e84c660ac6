"""Terminating hypergeometric series and the identity checks built on them.

A series pFq(upper; lower; z) terminates when some upper parameter is a
non-positive integer -n: every term past k = n carries the factor (-n)_k = 0.
Its value is then the finite sum over k = 0..n of

    prod((u)_k for u in upper) / prod((l)_k for l in lower) * z**k / k!

and is an exact rational whenever no lower-parameter Pochhammer vanishes
first.  Gamma-function quotients appearing in closed forms are systematically
replaced by the finite Pochhammer quotients they reduce to in the terminating
case, which keeps every right-hand side total and exact.

Each ``check_*`` function evaluates one identity for concrete parameters and
reports both sides; parameter tuples that violate a precondition raise
``SkippedPole`` so grid drivers can distinguish "identity inapplicable" from
"identity false".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Rational
from .poly import Poly, RatFunc, eval_with_cancellation, pochhammer_poly
from .sequences import binomial, odd_square_harmonic, pochhammer


class LowerParamPole(ArithmeticError):
    """A lower-parameter Pochhammer vanishes before the series terminates."""


class NonTerminating(ValueError):
    """No upper parameter terminates the series and no term budget was given."""


class SkippedPole(Exception):
    """A parameter tuple violates a check's pole-freedom precondition."""


@dataclass(frozen=True)
class HyperSeries:
    """Parameter lists and argument of a pFq series."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    argument: Fraction = Fraction(1)


@dataclass(frozen=True, eq=False)
class IdentityCheckOutcome:
    """Both sides of one identity instance and whether they agree exactly."""

    lhs: Fraction
    rhs: Fraction
    equal: bool
    params: dict


def _series(upper, lower, z=1) -> HyperSeries:
    return HyperSeries(
        tuple(Fraction(u) for u in upper),
        tuple(Fraction(l) for l in lower),
        Fraction(z),
    )


def _termination_index(upper: tuple[Fraction, ...]) -> int | None:
    ns = [-int(u) for u in upper if u.denominator == 1 and u <= 0]
    return min(ns) if ns else None


def eval_terminating_pfq(series: HyperSeries, budget: int | None = None) -> Fraction:
    """Exact value of a terminating (or budget-truncated) pFq.

    The 1/k! of the k-th term is folded in as an implicit lower parameter
    of 1.  Terms are produced by the consecutive-term ratio, one rational
    multiplication per parameter per term.
    """
    n = _termination_index(series.upper)
    if n is None:
        if budget is None:
            raise NonTerminating("no non-positive-integer upper parameter and no budget")
        n = budget
    elif budget is not None:
        n = min(n, budget)
    for low in series.lower:
        if low.denominator == 1 and -(n - 1) <= low <= 0:
            raise LowerParamPole(f"lower parameter {low} vanishes at term k = {1 - low}")
    total = term = Fraction(1)
    z = series.argument
    for k in range(1, n + 1):
        num = Fraction(1)
        den = Fraction(k)
        for u in series.upper:
            num *= u + (k - 1)
        for low in series.lower:
            den *= low + (k - 1)
        term = term * z * num / den
        total += term
    return total


def _pfq(upper, lower, z=1, budget: int | None = None) -> Fraction:
    return eval_terminating_pfq(_series(upper, lower, z), budget=budget)


def _require_no_pole(name: str, value: Fraction, n: int) -> None:
    """Reject values whose length-n Pochhammer vanishes."""
    if value.denominator == 1 and -(n - 1) <= value <= 0:
        raise SkippedPole(f"parameter {name} = {value} makes a Pochhammer of length {n} vanish")


def check_gauss_2f1(n: int, b: Rational | int, c: Rational | int) -> IdentityCheckOutcome:
    """Terminating Gauss evaluation: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    b, c = Fraction(b), Fraction(c)
    _require_no_pole("c", c, n)
    _require_no_pole("c-b", c - b, n)
    lhs = _pfq([-n, b], [c])
    rhs = pochhammer(c - b, n) / pochhammer(c, n)
    return IdentityCheckOutcome(lhs, rhs, lhs == rhs, {"n": n, "b": b, "c": c})


def check_identity_b1(n: int) -> IdentityCheckOutcome:
    """2F1(-n, n-1; 1/2; 1) equals (-1)**(n-1) / (2n-1), plus its truncation.

    The k <= n-1 partial sum is checked against both closed forms of the
    full-sum-minus-last-term rewrite, and against that subtraction itself.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    full = _pfq([-n, n - 1], [Fraction(1, 2)])
    rhs = Fraction((-1) ** (n - 1), 2 * n - 1)
    truncated = _pfq([-n, n - 1], [Fraction(1, 2)], budget=n - 1)
    last_term = (
        pochhammer(-n, n)
        * pochhammer(n - 1, n)
        / (pochhammer(1, n) * pochhammer(Fraction(1, 2), n))
    )
    closed_mid = rhs * (1 + 4 ** (n - 1) * (2 * n - 2))
    closed = (-1) ** (n - 1) * (2 ** (2 * n - 2) - Fraction(2 ** (2 * n - 2) - 1, 2 * n - 1))
    equal = (
        full == rhs
        and truncated == full - last_term
        and truncated == closed_mid
        and truncated == closed
    )
    return IdentityCheckOutcome(full, rhs, equal, {"n": n})


def check_identity_b2(n: int) -> IdentityCheckOutcome:
    """3F2(-n, n-1, -1/2; 1, 1/2; 1) equals 4n(n-1)/(2n-1), plus its truncation.

    The k <= n-1 partial sum must match (4n(n-1) + (-1)**n * C(2n-2, n)) / (2n-1)
    and the full sum minus its k = n term.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    uppers = [-n, n - 1, Fraction(-1, 2)]
    lowers = [1, Fraction(1, 2)]
    full = _pfq(uppers, lowers)
    rhs = Fraction(4 * n * (n - 1), 2 * n - 1)
    truncated = _pfq(uppers, lowers, budget=n - 1)
    last_term = (
        pochhammer(-n, n)
        * pochhammer(n - 1, n)
        * pochhammer(Fraction(-1, 2), n)
        / (pochhammer(1, n) ** 2 * pochhammer(Fraction(1, 2), n))
    )
    closed = Fraction(4 * n * (n - 1) + (-1) ** n * binomial(2 * n - 2, n), 2 * n - 1)
    equal = full == rhs and truncated == full - last_term and truncated == closed
    return IdentityCheckOutcome(full, rhs, equal, {"n": n})


def check_transformation_new4(
    n: int,
    a: Rational | int,
    b: Rational | int,
    e: Rational | int,
    f: Rational | int,
) -> IdentityCheckOutcome:
    """Three-term 3F2(1) transformation with shifted lower parameters.

    With s = e + f - a - b + n, compares 3F2(a, b, -n; e, f; 1) against
    ((e-a)_n (f-a)_n / ((e)_n (f)_n)) * 3F2(1-s, a, -n; 1+a-e-n, 1+a-f-n; 1).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    a, b, e, f = Fraction(a), Fraction(b), Fraction(e), Fraction(f)
    # Pole freedom is required over the whole nominal range k = 0..n: an
    # upper parameter terminating the series early only zeroes later terms,
    # but a vanishing lower Pochhammer anywhere below n makes them 0/0 and
    # puts the tuple outside the identity's domain.  The first two guards
    # also cover the prefactor denominator (e)_n (f)_n.
    _require_no_pole("e", e, n)
    _require_no_pole("f", f, n)
    _require_no_pole("1+a-e-n", 1 + a - e - n, n)
    _require_no_pole("1+a-f-n", 1 + a - f - n, n)
    s = e + f - a - b + n
    try:
        lhs = _pfq([a, b, -n], [e, f])
        rhs_series = _pfq([1 - s, a, -n], [1 + a - e - n, 1 + a - f - n])
    except LowerParamPole as exc:  # unreachable given the guards; kept as a belt
        raise SkippedPole(str(exc)) from None
    prefactor = (
        pochhammer(e - a, n)
        * pochhammer(f - a, n)
        / (pochhammer(e, n) * pochhammer(f, n))
    )
    rhs = prefactor * rhs_series
    params = {"n": n, "a": a, "b": b, "e": e, "f": f}
    return IdentityCheckOutcome(lhs, rhs, lhs == rhs, params)


def _quartic_coeffs(n: int) -> tuple[int, int, int, int, int]:
    """Coefficients (constant first) of the degree-4 numerator polynomial."""
    return (
        4 * n * (n - 1) * (n * n - n - 1),
        12 * n * n - 12 * n - 3,
        -8 * n * n + 8 * n + 11,
        -12,
        4,
    )


def check_new6_at(n: int, x: Rational | int) -> IdentityCheckOutcome:
    """One sample point of the x-dependent 3F2 evaluation.

    Checks that the inner 3-term 3F2(-2, n-1, -n; -x, x-3/2; 1) equals the
    quartic quotient, and that the full series 3F2(n-1, -1/2, -n; x, 3/2-x; 1)
    equals the Pochhammer-quotient prefactor times that quotient.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    x = Fraction(x)
    if x in (0, 1, Fraction(1, 2), Fraction(3, 2)):
        raise SkippedPole(f"x = {x} is a zero of the closed form's denominator")
    _require_no_pole("x", x, n)
    _require_no_pole("3/2-x", Fraction(3, 2) - x, n)
    try:
        lhs = _pfq([n - 1, Fraction(-1, 2), -n], [x, Fraction(3, 2) - x])
        inner = _pfq([-2, n - 1, -n], [-x, x - Fraction(3, 2)])
    except LowerParamPole as exc:
        raise SkippedPole(str(exc)) from None
    quartic = Poly(_quartic_coeffs(n)).evaluate(x)
    quotient = quartic / (x * (x - 1) * (2 * x - 1) * (2 * x - 3))
    prefactor = (
        pochhammer(x + 1 - n, n)
        * pochhammer(Fraction(5, 2) - x - n, n)
        / (pochhammer(x, n) * pochhammer(Fraction(3, 2) - x, n))
    )
    rhs = prefactor * quotient
    equal = inner == quotient and lhs == rhs
    return IdentityCheckOutcome(lhs, rhs, equal, {"n": n, "x": x})


def check_identity_new6(n: int, sample_x: list[Rational]) -> IdentityCheckOutcome:
    """The x-dependent identity at every supplied sample point.

    Equality holds only if every non-skipped point agrees; the reported
    sides are those of the first failing point, or of the last point
    checked when all agree.
    """
    lhs = rhs = Fraction(1)
    equal = True
    checked = 0
    for x in sample_x:
        try:
            outcome = check_new6_at(n, x)
        except SkippedPole:
            continue
        checked += 1
        lhs, rhs = outcome.lhs, outcome.rhs
        if not outcome.equal:
            equal = False
            break
    return IdentityCheckOutcome(lhs, rhs, equal, {"n": n, "points_checked": checked})


def check_new6_limits(n: int) -> IdentityCheckOutcome:
    """The two x -> 1 limit evaluations of the closed form, by cancellation.

    The bracketed factor quartic / (x(2x-1)(2x-3)) must evaluate to
    -4n^2(n-1)^2 at x = 1, the Pochhammer quotient over (x - 1) must
    evaluate to -1/(n(n-1)(2n-1)), and the full closed form must meet the
    directly summed series at x = 1, where both give 4n(n-1)/(2n-1).
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    x = Poly.variable()
    quartic = Poly(_quartic_coeffs(n))
    two_x_minus_1 = Poly((-1, 2))
    two_x_minus_3 = Poly((-3, 2))

    bracket = RatFunc(quartic, x * two_x_minus_1 * two_x_minus_3)
    first = eval_with_cancellation(bracket, 1)
    first_ok = first == -4 * n * n * (n - 1) ** 2

    rising_num = pochhammer_poly(Poly((1 - n, 1)), n) * pochhammer_poly(
        Poly((Fraction(5, 2) - n, -1)), n
    )
    rising_den = pochhammer_poly(x, n) * pochhammer_poly(Poly((Fraction(3, 2), -1)), n)
    quotient = RatFunc(rising_num, Poly((-1, 1)) * rising_den)
    second = eval_with_cancellation(quotient, 1)
    second_ok = second == Fraction(-1, n * (n - 1) * (2 * n - 1))

    closed_at_1 = eval_with_cancellation(
        RatFunc(rising_num * quartic, rising_den * x * Poly((-1, 1)) * two_x_minus_1 * two_x_minus_3),
        1,
    )
    series_at_1 = _pfq([n - 1, Fraction(-1, 2), -n], [1, Fraction(1, 2)])
    value = Fraction(4 * n * (n - 1), 2 * n - 1)
    third_ok = closed_at_1 == series_at_1 == value

    equal = first_ok and second_ok and third_ok
    return IdentityCheckOutcome(closed_at_1, series_at_1, equal, {"n": n})


def check_identity_c1(n: int) -> IdentityCheckOutcome:
    """4F3(-n, n+1, 1/4, 3/4; 1, 1/2, 3/2; 1) equals binomial(2n, n) / 4**n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    lhs = _pfq(
        [-n, n + 1, Fraction(1, 4), Fraction(3, 4)],
        [1, Fraction(1, 2), Fraction(3, 2)],
    )
    rhs = Fraction(binomial(2 * n, n), 4**n)
    return IdentityCheckOutcome(lhs, rhs, lhs == rhs, {"n": n})


def check_identity_new2(n: int, f: Rational | int, g: Rational | int) -> IdentityCheckOutcome:
    """Well-poised 4F3(1) evaluation in Pochhammer form, terminating at -n.

    4F3(-n, 1+f-g, f/2, (f+1)/2; 1+f, (1+f-n-g)/2, 1+(f-n-g)/2; 1)
    must equal (g)_n / (g-f)_n.  For the degenerate family f = 1/2,
    g = 1/2 - n the quotient collapses to binomial(2n, n) / 4**n, which is
    asserted as well.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    f, g = Fraction(f), Fraction(g)
    d = Fraction(-n)
    _require_no_pole("g-f", g - f, n)
    lowers = (1 + f, (1 + f + d - g) / 2, 1 + (f + d - g) / 2)
    # Full-range guard: another upper parameter may terminate the series
    # before a vanishing lower Pochhammer is reached, but such points are
    # 0/0 in the tail terms and outside the identity's domain.
    for index, low in enumerate(lowers, start=1):
        _require_no_pole(f"lower #{index}", low, n)
    try:
        lhs = _pfq([d, 1 + f - g, f / 2, (f + 1) / 2], list(lowers))
    except LowerParamPole as exc:  # unreachable given the guards; kept as a belt
        raise SkippedPole(str(exc)) from None
    rhs = pochhammer(g, n) / pochhammer(g - f, n)
    equal = lhs == rhs
    if (f, g) == (Fraction(1, 2), Fraction(1, 2) - n):
        equal = equal and rhs == Fraction(binomial(2 * n, n), 4**n)
    return IdentityCheckOutcome(lhs, rhs, equal, {"n": n, "f": f, "g": g})


def check_identity_c2(n: int) -> IdentityCheckOutcome:
    """Odd-square-harmonic-weighted variant of the c1 sum.

    The weighted sum over k of the c1 summand times sum(1/(2j-1)**2, j<=k)
    must equal the three-part closed form combining binomial(2n, n)/4**n,
    the inverse-square central binomial sum and the inverse-cube one.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    term = Fraction(1)
    lhs = Fraction(0)
    for k in range(1, n + 1):
        term *= Fraction(
            (k - 1 - n) * (n + k) * (4 * k - 3) * (4 * k - 1),
            4 * k * k * (2 * k - 1) * (2 * k + 1),
        )
        lhs += term * odd_square_harmonic(k)
    central = Fraction(binomial(2 * n, n), 4**n)
    inv_square = sum(
        Fraction(binomial(2 * k, k), (2 * k - 1) ** 2 * 4**k) for k in range(n + 1)
    )
    inv_cube = sum(
        Fraction(binomial(2 * k, k) ** 2, (2 * k - 1) ** 3 * 16**k) for k in range(n + 1)
    )
    rhs = (
        -central * (3 + odd_square_harmonic(n))
        + Fraction(2, 2 * n + 1) * inv_square
        - Fraction(4**n, (2 * n + 1) * binomial(2 * n, n)) * inv_cube
    )
    return IdentityCheckOutcome(lhs, rhs, lhs == rhs, {"n": n})
