"""Exact-arithmetic verification of hypergeometric identities and supercongruences.

Identities are checked as exact rational (or polynomial) equalities;
congruences are checked as p-adic valuation assertions on exact differences.
Nothing is ever rounded.
"""

from .exact import (
    NonIntegralAtP,
    NotInvertible,
    PrimePower,
    Rational,
    ResidueClass,
    is_prime,
    legendre_symbol,
    mod_inverse,
    padic_valuation,
    primes_in,
    reduce_mod,
)
from .sequences import (
    binomial,
    central_catalan_summand,
    euler_number,
    fermat_quotient2,
    harmonic,
    odd_square_harmonic,
    pochhammer,
)
from .poly import NotDivisible, Poly, PoleAtPoint, RatFunc, eval_with_cancellation
from .hyper import (
    HyperSeries,
    IdentityCheckOutcome,
    LowerParamPole,
    NonTerminating,
    SkippedPole,
    eval_terminating_pfq,
)
from .congruences import CheckResult, PrimeContext, assert_congruent

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "HyperSeries",
    "IdentityCheckOutcome",
    "LowerParamPole",
    "NonIntegralAtP",
    "NonTerminating",
    "NotDivisible",
    "NotInvertible",
    "Poly",
    "PoleAtPoint",
    "PrimeContext",
    "PrimePower",
    "RatFunc",
    "Rational",
    "ResidueClass",
    "SkippedPole",
    "assert_congruent",
    "binomial",
    "central_catalan_summand",
    "euler_number",
    "eval_terminating_pfq",
    "eval_with_cancellation",
    "fermat_quotient2",
    "harmonic",
    "is_prime",
    "legendre_symbol",
    "mod_inverse",
    "odd_square_harmonic",
    "padic_valuation",
    "pochhammer",
    "primes_in",
    "reduce_mod",
]
