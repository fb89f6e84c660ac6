"""Deterministic aggregation of check results into text and JSON reports.

The JSON schema is fixed: a top-level object with keys "version", "config",
"checks", "failures", "summary" and "duration_seconds", in that order.  Keys
inside every object also have a fixed order, so an identical configuration
produces a byte-identical report body (everything except the duration).
"""

from __future__ import annotations

import json

from .congruences import CheckResult
from .registry import CheckSpec


def build_report(
    version: str,
    config_echo: dict,
    specs: list[CheckSpec],
    results_by_name: dict[str, list[CheckResult]],
    duration: float,
) -> dict:
    """Assemble the report object from grouped results.

    ``config_echo`` carries only the semantic selection fields (suites,
    checks, ranges, seed, include_p3): execution details such as the worker
    count must not change the body.
    """
    checks = []
    failures = []
    totals = {"pass": 0, "fail": 0, "skipped": 0}
    for spec in specs:
        results = results_by_name.get(spec.name, [])
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for result in results:
            counts[result.status] += 1
            if result.status == "fail":
                failures.append(
                    {
                        "name": result.name,
                        "p": result.p,
                        "params": result.params,
                        "lhs_residue": result.lhs_residue,
                        "rhs_residue": result.rhs_residue,
                        "note": result.note,
                    }
                )
        for key in totals:
            totals[key] += counts[key]
        checks.append(
            {
                "name": spec.name,
                "equation": spec.equation,
                "modulus": spec.modulus,
                "domain": spec.domain,
                "total": sum(counts.values()),
                "pass": counts["pass"],
                "fail": counts["fail"],
                "skipped": counts["skipped"],
            }
        )
    return {
        "version": version,
        "config": config_echo,
        "checks": checks,
        "failures": failures,
        "summary": totals,
        "duration_seconds": round(duration, 3),
    }


def render_json(report: dict) -> str:
    """Canonical serialization; parsing and re-rendering reproduces it exactly."""
    return json.dumps(report, indent=2, ensure_ascii=True) + "\n"


def _format_config(config: dict) -> str:
    checks = ",".join(config["checks"]) if config["checks"] else "*"
    return (
        f"config: suites={','.join(config['suites'])} checks={checks}"
        f" primes={config['prime_min']}..{config['prime_max']}"
        f" max_n={config['max_n']} seed={config['seed']:#x}"
        f" include_p3={'yes' if config['include_p3'] else 'no'}"
    )


def render_text(
    report: dict,
    results_by_name: dict[str, list[CheckResult]] | None = None,
    verbose: bool = False,
) -> str:
    """Human-readable report; per-instance lines only under verbose."""
    lines = [f"supercong {report['version']}", _format_config(report["config"])]
    rows = report["checks"]
    if rows:
        name_w = max(len("name"), max(len(r["name"]) for r in rows))
        eq_w = max(len("equation"), max(len(r["equation"]) for r in rows))
        mod_w = max(len("modulus"), max(len(r["modulus"]) for r in rows))
        header = (
            f"{'name':<{name_w}}  {'equation':<{eq_w}}  {'modulus':<{mod_w}}"
            f"  {'pass':>6}  {'fail':>6}  {'skip':>6}  domain"
        )
        lines.append(header)
        for row in rows:
            lines.append(
                f"{row['name']:<{name_w}}  {row['equation']:<{eq_w}}  {row['modulus']:<{mod_w}}"
                f"  {row['pass']:>6}  {row['fail']:>6}  {row['skipped']:>6}  {row['domain']}"
            )
            if verbose and results_by_name:
                for result in results_by_name.get(row["name"], ()):
                    lines.append("  " + _format_result(result))
    for failure in report["failures"]:
        lines.append(
            f"FAIL {failure['name']} p={failure['p']} params={failure['params']}"
            f" lhs_residue={failure['lhs_residue']} rhs_residue={failure['rhs_residue']}"
            f" note={failure['note']!r}"
        )
    summary = report["summary"]
    lines.append(
        f"summary: pass={summary['pass']} fail={summary['fail']} skipped={summary['skipped']}"
    )
    lines.append(f"duration: {report['duration_seconds']} s")
    return "\n".join(lines) + "\n"


def _format_result(result: CheckResult) -> str:
    bits = [result.name]
    if result.p is not None:
        bits.append(f"p={result.p}")
    bits.extend(f"{key}={value}" for key, value in result.params.items())
    bits.append(result.status)
    if result.note:
        bits.append(f"({result.note})")
    return " ".join(bits)
