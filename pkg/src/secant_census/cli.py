"""Command-line front end: compute counts, run verification suites, emit tables.

All JSON output renders counts as decimal strings so arbitrary-precision
values survive any consumer.  Verification prints one JSON line per check
and exits 0 only if every check passes (1 otherwise); usage errors exit 2.
"""

from __future__ import annotations

import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

import click

from . import census, chains, iecf, macdonald, plucker, reference

THREADS_ENV = "SECANT_CENSUS_THREADS"


def _thread_cap() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return min(8, os.cpu_count() or 1)
    try:
        value = int(raw)
    except ValueError as exc:
        raise click.UsageError(
            f"{THREADS_ENV} must be an integer, got {raw!r}"
        ) from exc
    return max(1, value)


def _parse_range(text: str, what: str) -> list[int]:
    """Parse '5' or '2..6' into a list of integers."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
            if hi_i < lo_i:
                raise ValueError
            return list(range(lo_i, hi_i + 1))
        return [int(text)]
    except ValueError:
        raise click.UsageError(
            f"{what} must be an integer or a range like 2..6, got {text!r}"
        ) from None


def _echo_json(record: dict) -> None:
    click.echo(json.dumps(record))


@click.group()
def main() -> None:
    """Exact secant-plane counts, cross-verified between independent engines."""


@main.command("macdonald")
@click.option("--g", "g", type=int, required=True, help="Genus.")
@click.option("--s", "s", type=int, required=True, help="Ambient projective dimension.")
@click.option("--m", "m", type=int, required=True, help="Degree of the ambient series.")
@click.option("--d", "d", type=int, required=True, help="Points in the secant divisor.")
@click.option("--r", "r", type=int, required=True, help="Conditions the divisor fails.")
@click.option(
    "--version",
    "version",
    type=click.Choice(["one", "two", "closed"]),
    default="one",
    show_default=True,
    help="Generating-function form, or the r=1 closed sum.",
)
def cmd_macdonald(g: int, s: int, m: int, d: int, r: int, version: str) -> None:
    """Count by coefficient extraction (or the r=1 closed form)."""
    try:
        params = macdonald.SecantParams(g=g, s=s, m=m, d=d, r=r)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    try:
        if version == "closed":
            if r != 1:
                raise click.UsageError(
                    "--version closed is the r=1 closed form; got r != 1"
                )
            value = macdonald.macdonald_r1(d, g, m)
        else:
            value = macdonald.macdonald_general(params, version=version)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    except ArithmeticError as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(str(value))
    click.echo(f"rho={params.rho} mu={params.mu} method={version}")
    _echo_json(
        {
            "command": "macdonald",
            "g": g,
            "s": s,
            "m": m,
            "d": d,
            "r": r,
            "method": version,
            "rho": params.rho,
            "mu": params.mu,
            "count": str(value),
        }
    )


def _count_r1_by_method(t: int, u: int, method: str) -> int:
    if method == "dp":
        return census.count_traversals_dp(census.r1_grid(t, u))
    if method == "brute":
        return census.count_set_S(t, u)
    return census.count_r1(t, u)


def _count_rs1_by_method(r: int, u: int, method: str) -> int:
    if method == "dp":
        return plucker.count_rs1(r, u)
    if method == "brute":
        return plucker.count_rs1_brute(r, u)
    return plucker.count_rs1_stratified(r, u)


@main.command("count")
@click.option(
    "--case",
    "case",
    type=click.Choice(["r1", "rs1"]),
    required=True,
    help="Which count: pencil inclusions (r1) or the corank-one family (rs1).",
)
@click.option("--t", "t", type=int, default=None, help="Pencil parameter (r1 case).")
@click.option("--r", "r", type=int, default=None, help="Rank parameter (rs1 case).")
@click.option("--u", "u", type=int, required=True, help="Chain multiplicity.")
@click.option(
    "--method",
    "method",
    type=click.Choice(["dp", "brute", "stratified"]),
    default="dp",
    show_default=True,
)
def cmd_count(case: str, t: int | None, r: int | None, u: int, method: str) -> None:
    """Count grid traversals by the chosen engine."""
    try:
        if case == "r1":
            if t is None:
                raise click.UsageError("--case r1 requires --t")
            param = t
            value = _count_r1_by_method(t, u, method)
        else:
            if r is None:
                raise click.UsageError("--case rs1 requires --r")
            param = r
            value = _count_rs1_by_method(r, u, method)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    except ArithmeticError as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(str(value))
    _echo_json(
        {
            "command": "count",
            "case": case,
            "param": param,
            "u": u,
            "method": method,
            "count": str(value),
        }
    )


@dataclass
class Check:
    suite: str
    name: str
    params: dict
    fn: Callable[[], dict]

    def run(self) -> dict:
        record = {"suite": self.suite, "check": self.name, **self.params}
        try:
            outcome = self.fn()
        except Exception as exc:  # a crashed check is a failed check
            record.update({"ok": False, "error": f"{type(exc).__name__}: {exc}"})
            return record
        record.update(outcome)
        return record


def _all_equal_check(values_fn: Callable[[], dict[str, int]]) -> Callable[[], dict]:
    def run() -> dict:
        values = values_fn()
        rendered = {key: str(v) for key, v in values.items()}
        distinct = set(values.values())
        return {"ok": len(distinct) == 1, "values": rendered}

    return run


def _catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


def _identity_checks(max_d: int, max_u: int) -> list[Check]:
    checks: list[Check] = []
    for d in range(2, max_d + 1):
        expected = reference.STRATA[d]

        def strata_check(d: int = d, expected: tuple[int, ...] = expected) -> dict:
            actual = census.enumerate_W(2 * d - 2, d)
            ok = (
                actual[: d - 1] == expected
                and all(x == 0 for x in actual[d - 1 :])
                and sum(actual) == (2 * d - 2) ** d
            )
            return {
                "ok": ok,
                "expected": [str(x) for x in expected],
                "actual": [str(x) for x in actual],
            }

        checks.append(Check("identities", "strata_table", {"d": d}, strata_check))

    for d in range(2, max_d + 1):
        for u in range(1, max_u + 1):

            def central(d: int = d, u: int = u) -> dict:
                strata = census.enumerate_W(2 * d - 2, d)
                lhs = sum(
                    strata[k] * census.binom(d + u - 2 - k, d)
                    for k in range(d - 1)
                )
                rhs = sum(
                    (-1) ** i
                    * census.binom(u, i)
                    * census.binom((2 * d - 1) * u, d - i)
                    for i in range(d + 1)
                )
                return {"ok": lhs == rhs, "lhs": str(lhs), "rhs": str(rhs)}

            checks.append(
                Check("identities", "central_identity", {"d": d, "u": u}, central)
            )

    for d in range(2, max_d + 1):
        for u in range(1, min(max_u, 10) + 1):

            def poly(d: int = d, u: int = u) -> dict:
                combinatorial = Fraction(census.count_r1(d - 1, u))
                closed = reference.polynomial_value(d, u)
                return {
                    "ok": combinatorial == closed,
                    "lhs": str(combinatorial),
                    "rhs": str(closed),
                }

            checks.append(
                Check("identities", "polynomial", {"d": d, "u": u}, poly)
            )

    for t in (1, 2, 3):
        for u in range(1, min(max_u, 5) + 1):

            def quadruple(t: int = t, u: int = u) -> dict[str, int]:
                g = (2 * t + 1) * u
                return {
                    "brute": census.count_set_S(t, u),
                    "dp": census.count_traversals_dp(census.r1_grid(t, u)),
                    "stratified": census.count_r1(t, u),
                    "closed": macdonald.macdonald_r1(t + 1, g, 2 * t * (u + 1)),
                }

            checks.append(
                Check(
                    "identities",
                    "r1_quadruple",
                    {"t": t, "u": u},
                    _all_equal_check(quadruple),
                )
            )

    for r in (2, 3):
        for u in range(1, min(max_u, 6) + 1):

            def rs1(r: int = r, u: int = u) -> dict[str, int]:
                params = macdonald.SecantParams(
                    g=(r + 2) * u,
                    s=r + 1,
                    m=(r + 1) * (u + 1),
                    d=2 * r,
                    r=r,
                )
                return {
                    "chains_dp": plucker.count_rs1(r, u),
                    "chains_stratified": plucker.count_rs1_stratified(r, u),
                    "extraction_two": macdonald.macdonald_rs1(r, u),
                    "extraction_one": macdonald.macdonald_general(params, "one"),
                }

            checks.append(
                Check(
                    "identities",
                    "rs1_identity",
                    {"r": r, "u": u},
                    _all_equal_check(rs1),
                )
            )

    for t in (1, 2, 3):
        for u in range(1, min(max_u, 5) + 1):

            def versions_r1(t: int = t, u: int = u) -> dict[str, int]:
                params = macdonald.SecantParams(
                    g=(2 * t + 1) * u,
                    s=2 * t,
                    m=2 * t * (u + 1),
                    d=t + 1,
                    r=1,
                )
                return {
                    "one": macdonald.macdonald_general(params, "one"),
                    "two": macdonald.macdonald_general(params, "two"),
                }

            checks.append(
                Check(
                    "identities",
                    "macdonald_versions_r1",
                    {"t": t, "u": u},
                    _all_equal_check(versions_r1),
                )
            )

    def chain_count() -> dict:
        count = len(plucker.maximal_chains(5))
        return {"ok": count == 5, "actual": str(count), "expected": "5"}

    checks.append(Check("identities", "chain_count_gr25", {}, chain_count))

    def worked_chain() -> dict:
        prohibitions = [
            plucker.prohibition_of_chain(c).labels
            for c in plucker.maximal_chains(5)
        ]
        expected = (1, 3, 2, 4, 3, 5)
        return {
            "ok": prohibitions[0] == expected,
            "actual": list(prohibitions[0]),
            "expected": list(expected),
        }

    checks.append(Check("identities", "worked_chain_labels", {}, worked_chain))

    def leftover() -> dict:
        chain = plucker.maximal_chains(5)[0]
        d = chain.edges
        grid = census.GridSpec(10, 5, plucker.prohibition_of_chain(chain))
        total = census.count_traversals_dp(grid)
        strata = plucker.chain_strata(chain)
        stratified_tail = sum(
            strata[k] * census.binom(2 + d - 2 - k, d) for k in range(1, d - 1)
        )
        residual = total - stratified_tail
        return {
            "ok": residual == 4,
            "actual": str(residual),
            "expected": "4",
        }

    checks.append(Check("identities", "worked_chain_leftover_u2", {}, leftover))

    for n in range(3, 9):

        def catalan_check(n: int = n) -> dict[str, int]:
            return {
                "chains": len(plucker.maximal_chains(n)),
                "tableaux": len(chains.enumerate_tableaux(2, n - 2)),
                "catalan": _catalan(n - 2),
            }

        checks.append(
            Check(
                "identities",
                "chain_tableau_catalan",
                {"n": n},
                _all_equal_check(catalan_check),
            )
        )

    for a in range(1, 9):
        for b in range(2, 17):
            if a * b > 16:
                continue

            def eta_check(a: int = a, b: int = b) -> dict[str, int]:
                g = a * b
                s = b - 1
                m = g + s - a
                return {
                    "eta": macdonald.eta(g, s, m),
                    "tableaux": len(chains.enumerate_tableaux(a, b)),
                }

            checks.append(
                Check(
                    "identities",
                    "eta_tableaux",
                    {"rows": a, "cols": b},
                    _all_equal_check(eta_check),
                )
            )

    return checks


def _claim_checks() -> list[Check]:
    checks: list[Check] = []
    for claim_name, verifier in (
        ("claim_A", chains.verify_claim_A),
        ("claim_B", chains.verify_claim_B),
    ):
        for s in range(2, 7):
            for M in (2, 3, 4):

                def sweep(
                    s: int = s,
                    M: int = M,
                    verifier: Callable = verifier,
                ) -> dict:
                    instances = 0
                    vacuous = 0
                    violations = 0
                    for m in range(1, 3 * s + 6 + 1):
                        for i0 in range(2, s + 1):
                            for sstar in range(0, s + 1):
                                instances += 1
                                try:
                                    report = verifier(s, m, i0, M, sstar)
                                except ArithmeticError:
                                    violations += 1
                                    continue
                                if report.vacuous:
                                    vacuous += 1
                                elif not report.holds:
                                    violations += 1
                    return {
                        "ok": violations == 0,
                        "instances": instances,
                        "vacuous": vacuous,
                        "violations": violations,
                    }

                checks.append(
                    Check("claims", claim_name, {"s": s, "M": M}, sweep)
                )
    return checks


def _fixture_checks(fixtures_dir: Path | None) -> list[Check]:
    def load(name: str) -> list[chains.SeqPair]:
        if fixtures_dir is not None:
            return chains.load_vanishing_table(fixtures_dir / name)
        return chains.load_packaged_table(name)

    def ambient() -> dict:
        table = load(chains.AMBIENT_TABLE_FIXTURE)
        return {"ok": chains.eh_compatible(table, 10), "components": len(table)}

    def included() -> dict:
        table = load(chains.INCLUDED_TABLE_FIXTURE)
        return {"ok": chains.eh_compatible(table, 7), "components": len(table)}

    def perturbed() -> dict:
        table = load(chains.AMBIENT_TABLE_FIXTURE)
        incoming, outgoing = table[0]
        table[0] = (incoming, (outgoing[0] - 1,) + outgoing[1:])
        return {"ok": not chains.eh_compatible(table, 10)}

    return [
        Check("fixtures", "ambient_compatible", {"d": 10}, ambient),
        Check("fixtures", "included_compatible", {"d": 7}, included),
        Check("fixtures", "perturbation_detected", {"d": 10}, perturbed),
    ]


@main.command("verify")
@click.option(
    "--suite",
    "suite",
    type=click.Choice(["identities", "claims", "fixtures", "all"]),
    default="all",
    show_default=True,
)
@click.option("--max-d", "max_d", type=int, default=6, show_default=True)
@click.option("--max-u", "max_u", type=int, default=25, show_default=True)
@click.option(
    "--fixtures",
    "fixtures_dir",
    type=click.Path(exists=True, file_okay=False, path_type=Path),
    default=None,
    help="Directory with vanishing-table fixtures (defaults to the packaged ones).",
)
def cmd_verify(suite: str, max_d: int, max_u: int, fixtures_dir: Path | None) -> None:
    """Run verification suites; one JSON line per check, exit 0 iff all pass."""
    if not 2 <= max_d <= 6:
        raise click.UsageError(f"--max-d must be in [2, 6], got {max_d}")
    if max_u < 1:
        raise click.UsageError(f"--max-u must be >= 1, got {max_u}")
    checks: list[Check] = []
    if suite in ("identities", "all"):
        checks.extend(_identity_checks(max_d, max_u))
    if suite in ("claims", "all"):
        checks.extend(_claim_checks())
    if suite in ("fixtures", "all"):
        checks.extend(_fixture_checks(fixtures_dir))

    workers = _thread_cap()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(Check.run, checks))
    else:
        records = [check.run() for check in checks]

    failures = 0
    for record in records:
        _echo_json(record)
        if not record.get("ok"):
            failures += 1
    click.echo(
        f"{len(records) - failures}/{len(records)} checks passed", err=True
    )
    if failures:
        sys.exit(1)


def _table_rows_nk(d_values: Sequence[int]) -> list[dict]:
    rows = []
    for d in sorted(d_values):
        strata = census.enumerate_W(2 * d - 2, d)
        for k in range(d - 1):
            rows.append({"d": d, "k": k, "value": str(strata[k])})
    return rows


def _table_rows_counts(
    case: str, params: Sequence[int], u_values: Sequence[int]
) -> list[dict]:
    rows = []
    for param in sorted(params):
        for u in sorted(u_values):
            if case == "r1":
                value = census.count_r1(param, u)
            else:
                value = plucker.count_rs1(param, u)
            rows.append(
                {"case": case, "param": param, "u": u, "value": str(value)}
            )
    return rows


@main.command("table")
@click.option(
    "--what",
    "what",
    type=click.Choice(["nk", "counts"]),
    required=True,
    help="nk: stratified coefficients; counts: traversal counts over (param, u).",
)
@click.option("--d", "d_range", type=str, default=None, help="d range for nk, e.g. 2..6.")
@click.option("--case", "case", type=click.Choice(["r1", "rs1"]), default=None)
@click.option("--t", "t_range", type=str, default=None, help="t range (r1 case).")
@click.option("--r", "r_range", type=str, default=None, help="r range (rs1 case).")
@click.option("--u", "u_range", type=str, default=None, help="u range, e.g. 1..3.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "json"]),
    default="csv",
    show_default=True,
)
@click.option(
    "--output",
    "output",
    type=click.Path(dir_okay=False, writable=True, path_type=Path),
    default=None,
    help="Write to a file instead of stdout.",
)
def cmd_table(
    what: str,
    d_range: str | None,
    case: str | None,
    t_range: str | None,
    r_range: str | None,
    u_range: str | None,
    fmt: str,
    output: Path | None,
) -> None:
    """Emit machine-readable tables (CSV header fixed per table kind)."""
    if what == "nk":
        if d_range is None:
            raise click.UsageError("--what nk requires --d")
        d_values = _parse_range(d_range, "--d")
        if any(not 2 <= d <= 6 for d in d_values):
            raise click.UsageError("--d values must be in [2, 6]")
        rows = _table_rows_nk(d_values)
        header = ["d", "k", "value"]
    else:
        if case is None or u_range is None:
            raise click.UsageError("--what counts requires --case and --u")
        u_values = _parse_range(u_range, "--u")
        if case == "r1":
            if t_range is None:
                raise click.UsageError("--case r1 requires --t")
            params = _parse_range(t_range, "--t")
        else:
            if r_range is None:
                raise click.UsageError("--case rs1 requires --r")
            params = _parse_range(r_range, "--r")
        try:
            rows = _table_rows_counts(case, params, u_values)
        except ValueError as exc:
            raise click.UsageError(str(exc)) from exc
        header = ["case", "param", "u", "value"]

    if fmt == "csv":
        lines = [",".join(header)]
        lines.extend(",".join(str(row[h]) for h in header) for row in rows)
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(rows, indent=2) + "\n"

    if output is None:
        click.echo(text, nl=False)
    else:
        try:
            output.write_text(text, encoding="utf-8")
        except OSError as exc:
            raise click.ClickException(f"cannot write {output}: {exc}") from exc


if __name__ == "__main__":
    main()
