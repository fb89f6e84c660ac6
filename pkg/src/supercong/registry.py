"""The check registry: every verifiable claim as a named, self-describing unit.

Each entry knows its short name, the equation tag it corresponds to, the
modulus it is claimed at (or "exact" for identities), and its parameter
domain.  Congruence entries run per prime against a shared ``PrimeContext``;
identity entries run their whole n-range as one unit.  Execution tasks are
shaped so that results concatenate into the same order regardless of how
many workers processed them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .congruences import (
    CheckResult,
    PrimeContext,
    check_a1,
    check_a2,
    check_binomial_cong,
    check_harmonic_cong,
    check_intermediate,
    check_main_a3,
    check_new7,
    check_rv,
    check_sun_euler,
    sweep_c4_integrality,
    sweep_new1,
    sweep_pochhammer_cong,
)
from .exact import primes_in
from .hyper import (
    SkippedPole,
    check_gauss_2f1,
    check_identity_b1,
    check_identity_b2,
    check_identity_c1,
    check_identity_c2,
    check_identity_new2,
    check_new6_at,
    check_new6_limits,
    check_transformation_new4,
    IdentityCheckOutcome,
)

DEFAULT_SEED = 0x5EED


@dataclass(frozen=True)
class SuiteConfig:
    """The parameters that determine which instances every check runs on."""

    prime_min: int = 5
    prime_max: int = 199
    max_n: int = 200
    seed: int = DEFAULT_SEED
    include_p3: bool = False


@dataclass(frozen=True)
class CheckSpec:
    """Registry entry: metadata plus the runner for one named check."""

    name: str
    equation: str
    modulus: str
    domain: str
    suite: str  # "congruences" | "identities"
    run_at_prime: Callable[[PrimeContext, bool], list[CheckResult]] | None = None
    run_identity: Callable[[SuiteConfig], list[CheckResult]] | None = None


def _one(fn):
    """Adapt a single-result per-prime check to the list-returning runner shape."""

    def runner(ctx: PrimeContext, informational: bool) -> list[CheckResult]:
        return [fn(ctx.p, ctx, informational=informational)]

    return runner


def _params_for_json(params: dict) -> dict:
    return {
        key: str(value) if isinstance(value, Fraction) else value
        for key, value in params.items()
    }


def _result_from_outcome(name: str, outcome: IdentityCheckOutcome) -> CheckResult:
    note = "" if outcome.equal else f"lhs = {outcome.lhs}, rhs = {outcome.rhs}"
    return CheckResult(
        name,
        None,
        _params_for_json(outcome.params),
        "pass" if outcome.equal else "fail",
        note=note,
    )


def _skip_result(name: str, params: dict, reason: str) -> CheckResult:
    return CheckResult(name, None, _params_for_json(params), "skipped", note=reason)


def _run_b1(cfg: SuiteConfig) -> list[CheckResult]:
    return [_result_from_outcome("b1", check_identity_b1(n)) for n in range(2, cfg.max_n + 1)]


def _run_b2(cfg: SuiteConfig) -> list[CheckResult]:
    return [_result_from_outcome("b2", check_identity_b2(n)) for n in range(2, cfg.max_n + 1)]


def _run_c1(cfg: SuiteConfig) -> list[CheckResult]:
    top = min(cfg.max_n, 150)
    return [_result_from_outcome("c1", check_identity_c1(n)) for n in range(0, top + 1)]


def _run_c2(cfg: SuiteConfig) -> list[CheckResult]:
    top = min(cfg.max_n, 150)
    return [_result_from_outcome("c2", check_identity_c2(n)) for n in range(0, top + 1)]


# 25 pole-free pairs: denominators 2 and 3 keep c and c-b away from integers.
GAUSS_GRID = tuple(
    (b, c)
    for b in (Fraction(1, 2), Fraction(-1, 2), Fraction(3, 2), Fraction(5, 2), Fraction(7, 2))
    for c in (Fraction(1, 3), Fraction(2, 3), Fraction(4, 3), Fraction(5, 3), Fraction(7, 3))
)


def _run_gauss(cfg: SuiteConfig) -> list[CheckResult]:
    out = []
    for n in range(1, min(cfg.max_n, 30) + 1):
        for b, c in GAUSS_GRID:
            try:
                out.append(_result_from_outcome("gauss", check_gauss_2f1(n, b, c)))
            except SkippedPole as exc:
                out.append(_skip_result("gauss", {"n": n, "b": b, "c": c}, str(exc)))
    return out


def _new4_tuples(seed: int) -> list[tuple[Fraction, Fraction, Fraction, Fraction]]:
    rng = random.Random(f"{seed}:new4")

    def draw() -> Fraction:
        return Fraction(rng.randint(-6, 6), rng.randint(1, 4))

    def draw_non_integer() -> Fraction:
        # Integer lower parameters in (-n, 0] are poles for most n; keep e, f
        # off the integers so the grid spends its points on checkable tuples.
        while True:
            value = draw()
            if value.denominator > 1:
                return value

    return [(draw(), draw(), draw_non_integer(), draw_non_integer()) for _ in range(25)]


def _run_new4(cfg: SuiteConfig) -> list[CheckResult]:
    tuples = _new4_tuples(cfg.seed)
    out = []
    for n in range(1, min(cfg.max_n, 10) + 1):
        for a, b, e, f in tuples:
            params = {"n": n, "a": a, "b": b, "e": e, "f": f}
            try:
                out.append(_result_from_outcome("new4", check_transformation_new4(n, a, b, e, f)))
            except SkippedPole as exc:
                out.append(_skip_result("new4", params, str(exc)))
    return out


# f - g is never an integer, so no lower parameter can collide and no upper
# parameter other than -n can terminate the series early.
NEW2_GRID = (
    (Fraction(1, 3), Fraction(2)),
    (Fraction(1, 2), Fraction(7, 3)),
    (Fraction(1), Fraction(10, 3)),
    (Fraction(3, 2), Fraction(13, 3)),
    (Fraction(2, 3), Fraction(3)),
    (Fraction(5, 2), Fraction(17, 6)),
)


def _run_new2(cfg: SuiteConfig) -> list[CheckResult]:
    top = min(cfg.max_n, 30)
    out = []
    for n in range(1, top + 1):
        for f, g in NEW2_GRID:
            try:
                out.append(_result_from_outcome("new2", check_identity_new2(n, f, g)))
            except SkippedPole as exc:
                out.append(_skip_result("new2", {"n": n, "f": f, "g": g}, str(exc)))
    for n in range(0, top + 1):  # degenerate family, collapses to binomial(2n,n)/4**n
        f, g = Fraction(1, 2), Fraction(1, 2) - n
        try:
            out.append(_result_from_outcome("new2", check_identity_new2(n, f, g)))
        except SkippedPole as exc:
            out.append(_skip_result("new2", {"n": n, "f": f, "g": g}, str(exc)))
    return out


def _new6_points(seed: int, n: int, count: int = 20) -> list[Fraction]:
    """Deterministic pole-free rational sample points for one n."""
    rng = random.Random(f"{seed}:new6:{n}")
    points: list[Fraction] = []
    seen = set()
    attempts = 0
    while len(points) < count and attempts < 10_000:
        attempts += 1
        x = Fraction(rng.randint(-48, 48), rng.randint(2, 9))
        if x in seen:
            continue
        if x in (0, 1, Fraction(1, 2), Fraction(3, 2)):
            continue
        if x.denominator == 1 and -(n - 1) <= x <= 0:
            continue
        shifted = Fraction(3, 2) - x
        if shifted.denominator == 1 and -(n - 1) <= shifted <= 0:
            continue
        seen.add(x)
        points.append(x)
    return points


def _run_new6(cfg: SuiteConfig) -> list[CheckResult]:
    out = []
    for n in range(2, min(cfg.max_n, 50) + 1):
        for x in _new6_points(cfg.seed, n):
            try:
                out.append(_result_from_outcome("new6", check_new6_at(n, x)))
            except SkippedPole as exc:
                out.append(_skip_result("new6", {"n": n, "x": x}, str(exc)))
    return out


def _run_new6_limits(cfg: SuiteConfig) -> list[CheckResult]:
    return [
        _result_from_outcome("new6_limits", check_new6_limits(n))
        for n in range(2, min(cfg.max_n, 30) + 1)
    ]


def _registry() -> list[CheckSpec]:
    congruences = [
        CheckSpec("a3", "(a-3)", "p^3", "primes p >= 5", "congruences", _one(check_main_a3)),
        CheckSpec("new7", "(new-7)", "p^2", "primes p >= 5", "congruences", _one(check_new7)),
        CheckSpec("a1", "(a-1)", "p^2", "primes p >= 5", "congruences", _one(check_a1)),
        CheckSpec("a2", "(a-2)", "p^2", "primes p >= 5", "congruences", _one(check_a2)),
        CheckSpec(
            "rv1", "(rv-1)", "p^2", "primes p >= 5", "congruences",
            lambda ctx, info: [check_rv(1, ctx.p, informational=info)],
        ),
        CheckSpec(
            "rv2", "(rv-2)", "p^2", "primes p >= 5", "congruences",
            lambda ctx, info: [check_rv(2, ctx.p, informational=info)],
        ),
        CheckSpec(
            "rv3", "(rv-3)", "p^2", "primes p >= 5", "congruences",
            lambda ctx, info: [check_rv(3, ctx.p, informational=info)],
        ),
        CheckSpec(
            "rv4", "(rv-4)", "p^2", "primes p >= 5", "congruences",
            lambda ctx, info: [check_rv(4, ctx.p, informational=info)],
        ),
        CheckSpec("sun_euler", "(sun)", "p^3", "primes p >= 5", "congruences", _one(check_sun_euler)),
        CheckSpec(
            "new1", "(new-1)", "p^3", "primes p >= 5, k = 0..p-1", "congruences",
            lambda ctx, info: sweep_new1(ctx.p, informational=info),
        ),
        CheckSpec(
            "b4", "(b-4)", "p^2", "primes p >= 5, k = 0..(p-1)/2", "congruences",
            lambda ctx, info: sweep_pochhammer_cong("b4", ctx.p, informational=info),
        ),
        CheckSpec(
            "b5", "(b-5)", "p^2", "primes p >= 5", "congruences",
            lambda ctx, info: [check_intermediate("b5", ctx.p, ctx, informational=info)],
        ),
        CheckSpec(
            "b9", "(b-9)", "p^2", "primes p >= 5", "congruences",
            lambda ctx, info: [check_intermediate("b9", ctx.p, ctx, informational=info)],
        ),
        CheckSpec(
            "b10", "(b-10)", "p^2", "primes p >= 5", "congruences",
            lambda ctx, info: [check_harmonic_cong("b10", ctx.p, ctx, informational=info)],
        ),
        CheckSpec(
            "b11", "(b-11)", "p", "primes p >= 5", "congruences",
            lambda ctx, info: [check_harmonic_cong("b11", ctx.p, ctx, informational=info)],
        ),
        CheckSpec(
            "b12", "(b-12)", "p^2", "primes p >= 5", "congruences",
            lambda ctx, info: [check_intermediate("b12", ctx.p, ctx, informational=info)],
        ),
        CheckSpec(
            "c3", "(c-3)", "p^4", "primes p >= 5, k = 0..(p-1)/2", "congruences",
            lambda ctx, info: sweep_pochhammer_cong("c3", ctx.p, informational=info),
        ),
        CheckSpec(
            "c4", "(c-4)", "p^4", "primes p >= 5", "congruences",
            lambda ctx, info: [check_intermediate("c4", ctx.p, ctx, informational=info)],
        ),
        CheckSpec(
            "c4_zp", "(c-4) integrality", "v_p >= 0", "primes p >= 5, k = 0..(p-1)/2", "congruences",
            lambda ctx, info: sweep_c4_integrality(ctx.p, informational=info),
        ),
        CheckSpec(
            "c5", "(c-5)", "p^2", "primes p >= 5, k = 0..(p-1)/2", "congruences",
            lambda ctx, info: sweep_pochhammer_cong("c5", ctx.p, informational=info),
        ),
        CheckSpec(
            "c6", "(c-6)", "p^2", "primes p >= 5", "congruences",
            lambda ctx, info: [check_intermediate("c6", ctx.p, ctx, informational=info)],
        ),
        CheckSpec(
            "c7", "(c-7)", "p^4", "primes p >= 5", "congruences",
            lambda ctx, info: [check_intermediate("c7", ctx.p, ctx, informational=info)],
        ),
        CheckSpec(
            "c8", "(c-8)", "p^3", "primes p >= 5", "congruences",
            lambda ctx, info: [check_binomial_cong("c8", ctx.p, informational=info)],
        ),
        CheckSpec(
            "c9", "(c-9)", "p", "primes p >= 5", "congruences",
            lambda ctx, info: [check_harmonic_cong("c9", ctx.p, ctx, informational=info)],
        ),
        CheckSpec(
            "c10", "(c-10)", "p^3", "primes p >= 5", "congruences",
            lambda ctx, info: [check_intermediate("c10", ctx.p, ctx, informational=info)],
        ),
        CheckSpec(
            "c_final", "(c-10) precursor", "p^3", "primes p >= 5", "congruences",
            lambda ctx, info: [check_intermediate("c_final", ctx.p, ctx, informational=info)],
        ),
    ]
    identities = [
        CheckSpec("b1", "(b-1)/(b-3)", "exact", "n = 2..max_n", "identities", None, _run_b1),
        CheckSpec("b2", "(b-2)/(b-8)", "exact", "n = 2..max_n", "identities", None, _run_b2),
        CheckSpec("c1", "(c-1)", "exact", "n = 0..min(max_n, 150)", "identities", None, _run_c1),
        CheckSpec("c2", "(c-2)", "exact", "n = 0..min(max_n, 150)", "identities", None, _run_c2),
        CheckSpec(
            "gauss", "(new-3)", "exact", "n = 1..min(max_n, 30), 25-point (b, c) grid",
            "identities", None, _run_gauss,
        ),
        CheckSpec(
            "new4", "(new-4)", "exact", "n = 1..min(max_n, 10), 25 seeded (a, b, e, f) tuples",
            "identities", None, _run_new4,
        ),
        CheckSpec(
            "new2", "(new-2)", "exact",
            "n = 1..min(max_n, 30) on a fixed (f, g) grid, plus the degenerate family",
            "identities", None, _run_new2,
        ),
        CheckSpec(
            "new6", "(new-5)/(new-6)", "exact", "n = 2..min(max_n, 50), 20 seeded x per n",
            "identities", None, _run_new6,
        ),
        CheckSpec(
            "new6_limits", "(new-6) limits", "exact", "n = 2..min(max_n, 30)",
            "identities", None, _run_new6_limits,
        ),
    ]
    return congruences + identities


REGISTRY: tuple[CheckSpec, ...] = tuple(_registry())
REGISTRY_BY_NAME: dict[str, CheckSpec] = {spec.name: spec for spec in REGISTRY}


def selected_specs(suites: tuple[str, ...], checks: tuple[str, ...]) -> list[CheckSpec]:
    """Registry entries matching a suite selection and optional name filter."""
    wanted_suites = set(suites)
    if "all" in wanted_suites:
        wanted_suites = {"congruences", "identities"}
    unknown = [name for name in checks if name not in REGISTRY_BY_NAME]
    if unknown:
        raise KeyError(f"unknown check name(s): {', '.join(sorted(unknown))}")
    specs = [spec for spec in REGISTRY if spec.suite in wanted_suites]
    if checks:
        specs = [spec for spec in specs if spec.name in checks]
    return specs


def congruence_primes(cfg: SuiteConfig) -> list[int]:
    """Primes the congruence suite runs on: p >= 5, plus 3 only on request."""
    return [
        p
        for p in primes_in(max(cfg.prime_min, 2), cfg.prime_max)
        if p >= 5 or (p == 3 and cfg.include_p3)
    ]


def run_congruences_at(p: int, names: tuple[str, ...], cfg: SuiteConfig) -> list[CheckResult]:
    """All selected congruence checks at one prime, sharing one context.

    A runner that raises records a failure instead of crashing the sweep.
    """
    ctx = PrimeContext(p)
    informational = p < 5
    out: list[CheckResult] = []
    for name in names:
        spec = REGISTRY_BY_NAME[name]
        try:
            out.extend(spec.run_at_prime(ctx, informational))
        except Exception as exc:  # computational errors become failure records
            out.append(CheckResult(name, p, {}, "fail", note=f"error: {exc!r}"))
    return out


def run_identity(name: str, cfg: SuiteConfig) -> list[CheckResult]:
    spec = REGISTRY_BY_NAME[name]
    try:
        return spec.run_identity(cfg)
    except Exception as exc:
        return [CheckResult(name, None, {}, "fail", note=f"error: {exc!r}")]


def execute_task(task) -> tuple[str, object, list[CheckResult]]:
    """Run one unit of work; the task tuple is picklable for process pools.

    Congruence tasks are ("primes", p, names, cfg); identity tasks are
    ("identity", name, cfg).  The return value tags the results with enough
    information for deterministic regrouping.
    """
    kind = task[0]
    if kind == "primes":
        _, p, names, cfg = task
        return ("primes", p, run_congruences_at(p, names, cfg))
    if kind == "identity":
        _, name, cfg = task
        return ("identity", name, run_identity(name, cfg))
    raise ValueError(f"unknown task kind {kind!r}")
