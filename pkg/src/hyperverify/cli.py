"""Batch verification driver: config in, deterministic JSON report out.

Exit codes: 0 when every evaluated case passed (skips are fine), 1 when any
identity failed or a check crashed, 2 for config or I/O problems.  Reports
carry rationals as exact "p/q" strings and contain no timestamps, so a
given build produces byte-identical output for a given config, regardless
of --jobs.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .identities import VerificationRecord, coeff_A, coeff_B, grid_sweep
from .suites import ALL_SUITES

# Config check names; "corollaries" is the config spelling of the
# "corollary" check.
CONFIG_CHECKS = ("theorem", "corollaries", "transform", "kummer", "pipeline")
_CHECK_FOR_CONFIG = {
    "theorem": "theorem",
    "corollaries": "corollary",
    "transform": "transform",
    "kummer": "kummer",
    "pipeline": "pipeline",
}
_CONFIG_FIELDS = (
    "checks", "jSet", "aSet", "bSet", "dSet", "eSet",
    "seriesOrder", "theoremArgument",
)
MAX_SERIES_ORDER = 256


class ConfigParseError(Exception):
    """The sweep configuration is malformed; details in the message."""


def _parse_rational(value, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ConfigParseError(
            f"{where}: rationals must be integers or 'p/q' strings, got {value!r}"
        )
    try:
        q = Fraction(str(value))
    except (ValueError, ZeroDivisionError) as err:
        raise ConfigParseError(f"{where}: {value!r} is not a rational ({err})")
    return q


def _parse_rational_list(raw, where: str) -> tuple:
    if not isinstance(raw, list):
        raise ConfigParseError(f"{where}: expected a list")
    return tuple(_parse_rational(v, where) for v in raw)


@dataclass(frozen=True)
class SweepConfig:
    checks: tuple = ()
    j_set: tuple = ()
    a_set: tuple = ()
    b_set: tuple = ()
    d_set: tuple = ()
    e_set: tuple = ()
    series_order: int = 24
    theorem_argument: str = "two"

    @classmethod
    def from_dict(cls, raw) -> "SweepConfig":
        if not isinstance(raw, dict):
            raise ConfigParseError("config must be a JSON object")
        unknown = sorted(set(raw) - set(_CONFIG_FIELDS))
        if unknown:
            raise ConfigParseError(f"unknown config fields: {', '.join(unknown)}")

        checks = raw.get("checks", [])
        if not isinstance(checks, list) or not all(
            isinstance(c, str) for c in checks
        ):
            raise ConfigParseError("checks: expected a list of strings")
        bad = sorted(set(checks) - set(CONFIG_CHECKS))
        if bad:
            raise ConfigParseError(
                f"checks: unknown names {', '.join(bad)}; "
                f"valid: {', '.join(CONFIG_CHECKS)}"
            )

        j_raw = raw.get("jSet", [])
        if not isinstance(j_raw, list):
            raise ConfigParseError("jSet: expected a list")
        j_set = []
        for j in j_raw:
            if isinstance(j, bool) or not isinstance(j, int):
                raise ConfigParseError(f"jSet: {j!r} is not an integer")
            if not -5 <= j <= 5:
                raise ConfigParseError(f"jSet: j={j} outside [-5, 5]")
            j_set.append(j)

        order = raw.get("seriesOrder", 24)
        if isinstance(order, bool) or not isinstance(order, int):
            raise ConfigParseError("seriesOrder: expected an integer")
        if not 1 <= order <= MAX_SERIES_ORDER:
            raise ConfigParseError(
                f"seriesOrder: {order} outside [1, {MAX_SERIES_ORDER}]"
            )

        argument = raw.get("theoremArgument", "two")
        if argument not in ("one", "two"):
            raise ConfigParseError(
                f"theoremArgument: {argument!r} is neither 'one' nor 'two'"
            )

        return cls(
            checks=tuple(checks),
            j_set=tuple(j_set),
            a_set=_parse_rational_list(raw.get("aSet", []), "aSet"),
            b_set=_parse_rational_list(raw.get("bSet", []), "bSet"),
            d_set=_parse_rational_list(raw.get("dSet", []), "dSet"),
            e_set=_parse_rational_list(raw.get("eSet", []), "eSet"),
            series_order=order,
            theorem_argument=argument,
        )

    def echo(self) -> dict:
        return {
            "checks": list(self.checks),
            "jSet": list(self.j_set),
            "aSet": [str(a) for a in self.a_set],
            "bSet": [str(b) for b in self.b_set],
            "dSet": [str(d) for d in self.d_set],
            "eSet": [str(e) for e in self.e_set],
            "seriesOrder": self.series_order,
            "theoremArgument": self.theorem_argument,
        }


def _fmt(value):
    if value is None:
        return None
    if isinstance(value, tuple):
        return [str(c) for c in value]
    return str(value)


def _record_json(rec: VerificationRecord) -> dict:
    return {
        "check": rec.check,
        "j": rec.j,
        "a": _fmt(rec.a),
        "b": _fmt(rec.b),
        "d": _fmt(rec.d),
        "e": _fmt(rec.e),
        "branch": rec.branch,
        "lhs": _fmt(rec.lhs),
        "rhs": _fmt(rec.rhs),
        "equal": rec.equal,
        "error": rec.error,
    }


def _sort_key(rec: VerificationRecord):
    def key(v):
        return (0, Fraction(0)) if v is None else (1, Fraction(v))

    return (rec.check, key(rec.j), key(rec.a), key(rec.b), key(rec.d), key(rec.e))


def _summary(records) -> dict:
    counts = {"passed": 0, "failed": 0, "errored": 0, "skipped": 0}
    for rec in records:
        counts[rec.status] += 1
    return counts


def _exit_code(summary: dict) -> int:
    return 0 if summary["failed"] == 0 and summary["errored"] == 0 else 1


def _sweep(config: SweepConfig, jobs: int) -> list:
    checks = tuple(_CHECK_FOR_CONFIG[c] for c in config.checks)
    argument = 2 if config.theorem_argument == "two" else 1
    kwargs = dict(
        series_order=config.series_order,
        theorem_argument=argument,
    )
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            def mapper(fn, items):
                return pool.map(fn, items, chunksize=16)

            records = grid_sweep(
                config.j_set, config.a_set, config.b_set, config.d_set,
                config.e_set, checks, mapper=mapper, **kwargs,
            )
    else:
        records = grid_sweep(
            config.j_set, config.a_set, config.b_set, config.d_set,
            config.e_set, checks, **kwargs,
        )
    return sorted(records, key=_sort_key)


def run(config_path: str, out_path: str | None = None, jobs: int = 1) -> int:
    """Execute a sweep config and emit the JSON report; returns the exit code."""
    try:
        with open(config_path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        config = SweepConfig.from_dict(raw)
    except (OSError, json.JSONDecodeError, ConfigParseError) as err:
        print(f"hyperverify: config error: {err}", file=sys.stderr)
        return 2

    records = _sweep(config, jobs)
    summary = _summary(records)
    report = {
        "config": config.echo(),
        "records": [_record_json(r) for r in records],
        "summary": summary,
    }
    body = json.dumps(report, indent=2) + "\n"
    try:
        if out_path is None:
            sys.stdout.write(body)
        else:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(body)
    except OSError as err:
        print(f"hyperverify: cannot write report: {err}", file=sys.stderr)
        return 2
    print(
        "hyperverify: {passed} passed, {failed} failed, {errored} errored, "
        "{skipped} skipped".format(**summary),
        file=sys.stderr,
    )
    return _exit_code(summary)


def selftest(jobs: int = 1) -> int:
    """Run the canonical suites with no config; print one line per suite."""
    totals = {"passed": 0, "failed": 0, "errored": 0, "skipped": 0}
    count = 0
    for suite in ALL_SUITES:
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                def mapper(fn, items):
                    return pool.map(fn, items, chunksize=16)

                records = suite.run(mapper=mapper)
        else:
            records = suite.run()
        summary = _summary(records)
        count += len(records)
        for key in totals:
            totals[key] += summary[key]
        print(
            "{name:<12} records={n:<5} passed={passed:<5} failed={failed:<4} "
            "errored={errored:<4} skipped={skipped}".format(
                name=suite.name, n=len(records), **summary
            )
        )
    code = _exit_code(totals)
    print(
        "{name:<12} records={n:<5} passed={passed:<5} failed={failed:<4} "
        "errored={errored:<4} skipped={skipped}".format(
            name="total", n=count, **totals
        )
    )
    print(f"selftest: {'PASS' if code == 0 else 'FAIL'}")
    return code


def table(j: int | None, b, n: int) -> int:
    """Print the even/odd weight table evaluated at (b, n)."""
    shifts = [j] if j is not None else list(range(-5, 6))
    for shift in shifts:
        print(f"j={shift:<3} A={coeff_A(shift, b, n)} B={coeff_B(shift, b, n)}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperverify",
        description="Exact verification of a family of hypergeometric identities "
        "over rational parameter grids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run the checks described by a JSON config")
    p_run.add_argument("--config", required=True, help="path to the sweep config")
    p_run.add_argument("--out", help="write the report here instead of stdout")
    p_run.add_argument("--jobs", type=int, default=1,
                       help="worker processes (default 1)")

    p_self = sub.add_parser("selftest", help="run the built-in canonical suites")
    p_self.add_argument("--jobs", type=int, default=1,
                        help="worker processes (default 1)")

    p_table = sub.add_parser("table", help="print the weight table at (b, n)")
    p_table.add_argument("--j", type=int, help="single shift (default: all)")
    p_table.add_argument("--b", required=True, help="rational b, e.g. 1/3")
    p_table.add_argument("--n", required=True, type=int, help="summation index")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "run":
        if args.jobs < 1:
            print("hyperverify: --jobs must be >= 1", file=sys.stderr)
            return 2
        return run(args.config, args.out, args.jobs)
    if args.command == "selftest":
        if args.jobs < 1:
            print("hyperverify: --jobs must be >= 1", file=sys.stderr)
            return 2
        return selftest(args.jobs)
    if args.command == "table":
        if args.j is not None and not -5 <= args.j <= 5:
            print(f"hyperverify: j={args.j} outside [-5, 5]", file=sys.stderr)
            return 2
        try:
            b = Fraction(args.b)
        except (ValueError, ZeroDivisionError) as err:
            print(f"hyperverify: bad --b value: {err}", file=sys.stderr)
            return 2
        return table(args.j, b, args.n)
    raise AssertionError("unreachable")


def console_main() -> None:
    sys.exit(main())
