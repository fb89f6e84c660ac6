"""Command-line driver: select suites, run them, emit deterministic reports.

Subcommands:
  verify  run the selected checks and write a text or JSON report
  list    print the check registry

Exit codes: 0 all checks passed, 1 at least one failure, 2 configuration
error.  Every flag can also be supplied through an environment variable
with the SUPERCONG_ prefix (SUPERCONG_PRIME_MAX, ...); explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import __version__
from .congruences import CheckResult
from .registry import (
    DEFAULT_SEED,
    REGISTRY,
    SuiteConfig,
    congruence_primes,
    execute_task,
    selected_specs,
)
from .report import build_report, render_json, render_text

ENV_PREFIX = "SUPERCONG_"

EXIT_OK = 0
EXIT_CHECK_FAILURES = 1
EXIT_CONFIG_ERROR = 2


class ConfigError(ValueError):
    """Invalid flag combination or value."""


@dataclass(frozen=True)
class RunConfig:
    """Full configuration of one verification run."""

    suites: tuple[str, ...] = ("all",)
    checks: tuple[str, ...] = ()
    prime_min: int = 5
    prime_max: int = 199
    max_n: int = 200
    seed: int = DEFAULT_SEED
    jobs: int = 1
    format: str = "text"
    output: str | None = None
    include_p3: bool = False
    verbose: bool = False

    def validate(self) -> None:
        if self.prime_min < 2:
            raise ConfigError(f"--prime-min must be >= 2, got {self.prime_min}")
        if self.prime_min > self.prime_max:
            raise ConfigError(
                f"--prime-min {self.prime_min} exceeds --prime-max {self.prime_max}"
            )
        if self.max_n < 2:
            raise ConfigError(f"--max-n must be >= 2, got {self.max_n}")
        if self.jobs < 1:
            raise ConfigError(f"--jobs must be >= 1, got {self.jobs}")
        if self.format not in ("text", "json"):
            raise ConfigError(f"--format must be text or json, got {self.format!r}")
        for suite in self.suites:
            if suite not in ("identities", "congruences", "all"):
                raise ConfigError(f"unknown suite {suite!r}")

    def suite_config(self) -> SuiteConfig:
        return SuiteConfig(
            prime_min=self.prime_min,
            prime_max=self.prime_max,
            max_n=self.max_n,
            seed=self.seed,
            include_p3=self.include_p3,
        )

    def echo(self) -> dict:
        """The semantic fields, echoed into the report.

        Execution details (jobs, format, output, verbose) are omitted on
        purpose: the body must be identical across worker counts.
        """
        return {
            "suites": list(self.suites),
            "checks": list(self.checks),
            "prime_min": self.prime_min,
            "prime_max": self.prime_max,
            "max_n": self.max_n,
            "seed": self.seed,
            "include_p3": self.include_p3,
        }


def run(config: RunConfig) -> tuple[dict, dict[str, list[CheckResult]]]:
    """Execute the selected checks and build the report object."""
    config.validate()
    try:
        specs = selected_specs(config.suites, config.checks)
    except KeyError as exc:
        raise ConfigError(str(exc)) from None
    suite_cfg = config.suite_config()
    congruence_names = tuple(s.name for s in specs if s.suite == "congruences")
    identity_names = tuple(s.name for s in specs if s.suite == "identities")

    tasks = []
    if congruence_names:
        for p in congruence_primes(suite_cfg):
            tasks.append(("primes", p, congruence_names, suite_cfg))
    for name in identity_names:
        tasks.append(("identity", name, suite_cfg))

    start = time.perf_counter()
    if config.jobs == 1 or len(tasks) <= 1:
        outcomes = [execute_task(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            outcomes = list(pool.map(execute_task, tasks))
    duration = time.perf_counter() - start

    # Tasks are created in deterministic order and pool.map preserves it, so
    # plain concatenation groups identically for any worker count.
    results_by_name: dict[str, list[CheckResult]] = {spec.name: [] for spec in specs}
    for _, _, results in outcomes:
        for result in results:
            results_by_name[result.name].append(result)

    report = build_report(__version__, config.echo(), specs, results_by_name, duration)
    return report, results_by_name


def _env(name: str) -> str | None:
    return os.environ.get(ENV_PREFIX + name)


def _env_int(name: str) -> int | None:
    raw = _env(name)
    if raw is None:
        return None
    try:
        return int(raw, 0)
    except ValueError:
        raise ConfigError(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}") from None


def _env_bool(name: str) -> bool | None:
    raw = _env(name)
    if raw is None:
        return None
    return raw.strip().lower() in ("1", "true", "yes", "on")


def _env_list(name: str) -> tuple[str, ...] | None:
    raw = _env(name)
    if raw is None:
        return None
    items = tuple(part.strip() for part in raw.split(",") if part.strip())
    return items or None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supercong",
        description="Exact verification of hypergeometric identities and supercongruences.",
    )
    parser.add_argument("--version", action="version", version=f"supercong {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run checks and emit a report")
    verify.add_argument(
        "--suite",
        action="append",
        choices=("identities", "congruences", "all"),
        help="suite to run (repeatable; default: all)",
    )
    verify.add_argument(
        "--check",
        action="append",
        metavar="NAME",
        help="run only this named check (repeatable; see `supercong list`)",
    )
    verify.add_argument("--prime-min", type=int, help="smallest prime to test (default 5)")
    verify.add_argument("--prime-max", type=int, help="largest prime to test (default 199)")
    verify.add_argument("--max-n", type=int, help="upper bound for identity ranges (default 200)")
    verify.add_argument("--seed", type=lambda s: int(s, 0), help="seed for parameter grids (default 0x5EED)")
    verify.add_argument("--jobs", type=int, help="worker processes (default 1)")
    verify.add_argument("--format", choices=("text", "json"), help="report format (default text)")
    verify.add_argument("--output", metavar="PATH", help="write the report to a file instead of stdout")
    verify.add_argument(
        "--include-p3",
        action="store_true",
        default=None,
        help="also run congruences at p=3, reported as informational skips",
    )
    verify.add_argument(
        "--verbose", action="store_true", default=None, help="one line per check instance"
    )

    lister = sub.add_parser("list", help="print the check registry")
    lister.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    """Merge precedence: explicit flag, then environment variable, then default."""
    suites = tuple(args.suite) if args.suite else (_env_list("SUITE") or ("all",))
    checks = tuple(args.check) if args.check else (_env_list("CHECK") or ())
    return RunConfig(
        suites=suites,
        checks=checks,
        prime_min=args.prime_min if args.prime_min is not None else _env_int("PRIME_MIN") or 5,
        prime_max=args.prime_max if args.prime_max is not None else _env_int("PRIME_MAX") or 199,
        max_n=args.max_n if args.max_n is not None else _env_int("MAX_N") or 200,
        seed=args.seed if args.seed is not None else (
            _env_int("SEED") if _env_int("SEED") is not None else DEFAULT_SEED
        ),
        jobs=args.jobs if args.jobs is not None else _env_int("JOBS") or 1,
        format=args.format if args.format is not None else _env("FORMAT") or "text",
        output=args.output if args.output is not None else _env("OUTPUT"),
        include_p3=(
            args.include_p3 if args.include_p3 is not None else _env_bool("INCLUDE_P3") or False
        ),
        verbose=args.verbose if args.verbose is not None else _env_bool("VERBOSE") or False,
    )


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _list_checks(fmt: str) -> str:
    if fmt == "json":
        rows = [
            {
                "name": spec.name,
                "equation": spec.equation,
                "modulus": spec.modulus,
                "domain": spec.domain,
                "suite": spec.suite,
            }
            for spec in REGISTRY
        ]
        return json.dumps(rows, indent=2) + "\n"
    name_w = max(len(spec.name) for spec in REGISTRY)
    eq_w = max(len(spec.equation) for spec in REGISTRY)
    mod_w = max(len(spec.modulus) for spec in REGISTRY)
    suite_w = max(len(spec.suite) for spec in REGISTRY)
    lines = [
        f"{spec.name:<{name_w}}  {spec.equation:<{eq_w}}  {spec.modulus:<{mod_w}}"
        f"  {spec.suite:<{suite_w}}  {spec.domain}"
        for spec in REGISTRY
    ]
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "list":
        _emit(_list_checks(args.format), None)
        return EXIT_OK
    try:
        config = _config_from_args(args)
        report, results = run(config)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    if config.format == "json":
        text = render_json(report)
    else:
        text = render_text(report, results, verbose=config.verbose)
    _emit(text, config.output)
    return EXIT_OK if report["summary"]["fail"] == 0 else EXIT_CHECK_FAILURES


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
