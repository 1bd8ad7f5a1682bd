"""Command line interface: list, verify, grid, eval, special.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage
error.  Report rendering is a pure function of the report set, so a
given set always serializes byte-identically.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import engine
from .catalog import Params, catalog_metadata, get_identity, list_identities
from .engine import TailCertificationError, VerificationReport
from .exactnum import golden_to_decimal

FORMATS = ("text", "json", "csv", "markdown")
MODES = ("exact", "limit", "both")


@dataclass
class RunConfig:
    command: str
    identity: Optional[str] = None
    n: int = 1
    q: int = 1
    n_max: int = 1
    q_max: int = 1
    terms: int = 40
    digits: int = 30
    format: str = "text"
    mode: str = "both"


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("value must be a positive integer")
    return value


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError("value must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibprod",
        description=(
            "Verify Fibonacci/Lucas infinite product identities exactly "
            "and against certified truncation bounds."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cmd = sub.add_parser("list", help="print the identity catalog")
    cmd.add_argument("--format", choices=FORMATS, default="text")

    cmd = sub.add_parser("verify", help="verify one identity at depth N")
    cmd.add_argument("--identity", required=True)
    cmd.add_argument("--n", type=_positive, default=1)
    cmd.add_argument("--q", type=_positive, default=1)
    cmd.add_argument("--terms", type=_nonneg, default=40)
    cmd.add_argument("--digits", type=_positive, default=30)
    cmd.add_argument("--mode", choices=MODES, default="both")
    cmd.add_argument("--format", choices=FORMATS, default="text")

    cmd = sub.add_parser("grid", help="verify every identity over a grid")
    cmd.add_argument("--n-max", dest="n_max", type=_positive, required=True)
    cmd.add_argument("--q-max", dest="q_max", type=_positive, required=True)
    cmd.add_argument("--terms", type=_nonneg, default=40)
    cmd.add_argument("--digits", type=_positive, default=30)
    cmd.add_argument("--mode", choices=MODES, default="both")
    cmd.add_argument("--format", choices=FORMATS, default="text")

    cmd = sub.add_parser("eval", help="print the truncated product, rounded")
    cmd.add_argument("--identity", required=True)
    cmd.add_argument("--n", type=_positive, default=1)
    cmd.add_argument("--q", type=_positive, default=1)
    cmd.add_argument("--terms", type=_nonneg, default=40)
    cmd.add_argument("--digits", type=_positive, default=30)
    cmd.add_argument("--format", choices=FORMATS, default="text")

    cmd = sub.add_parser("special", help="check the five constant evaluations")
    cmd.add_argument("--digits", type=_positive, default=30)
    cmd.add_argument("--format", choices=FORMATS, default="text")

    return parser


def parse_args(argv: Sequence[str]) -> RunConfig:
    parser = build_parser()
    namespace = parser.parse_args(list(argv))
    if getattr(namespace, "identity", None) is not None:
        known = {d.ident for d in list_identities()}
        if namespace.identity not in known:
            parser.error(
                f"unknown identity {namespace.identity!r}; "
                f"valid ids: {', '.join(sorted(known))}"
            )
    config = RunConfig(command=namespace.command)
    for name in (
        "identity", "n", "q", "n_max", "q_max", "terms", "digits",
        "format", "mode",
    ):
        if hasattr(namespace, name):
            setattr(config, name, getattr(namespace, name))
    return config


# -- rendering -------------------------------------------------------------


def _floor_log10(x: Fraction) -> int:
    estimate = len(str(x.numerator)) - len(str(x.denominator))
    while Fraction(10) ** estimate > x:
        estimate -= 1
    while Fraction(10) ** (estimate + 1) <= x:
        estimate += 1
    return estimate


def _sci_upper(x: Fraction, sig: int = 3) -> str:
    """Upward-rounded scientific notation; never under-reports a bound."""
    if x == 0:
        return "0"
    exponent = _floor_log10(x)
    scaled = x / Fraction(10) ** (exponent - sig + 1)
    mantissa = scaled.numerator // scaled.denominator
    if scaled != mantissa:
        mantissa += 1
    if mantissa >= 10 ** sig:
        mantissa //= 10
        exponent += 1
    text = str(mantissa)
    return f"{text[0]}.{text[1:]}e{exponent:+03d}"


def _bound_str(x: Optional[Fraction]) -> Optional[str]:
    if x is None:
        return None
    return _sci_upper(x)


def _report_dict(report: VerificationReport, digits: int) -> dict:
    return {
        "id": report.ident,
        "theorem": report.theorem,
        "n": report.n,
        "q": report.q,
        "N": report.big_n,
        "mode": report.mode,
        "lhs_decimal": golden_to_decimal(report.partial, digits),
        "rhs_decimal": golden_to_decimal(report.rhs, digits),
        "rhs_exact": {
            "a_num": report.rhs.a.numerator,
            "a_den": report.rhs.a.denominator,
            "b_num": report.rhs.b.numerator,
            "b_den": report.rhs.b.denominator,
        },
        "deviation_bound": _bound_str(report.deviation_bound),
        "tail_bound": _bound_str(report.tail_bound),
        "passed": report.passed,
        "elapsed_ms": round(report.elapsed_ms, 3),
    }


CSV_COLUMNS = (
    "id", "theorem", "n", "q", "N", "mode", "lhs_decimal", "rhs_decimal",
    "a_num", "a_den", "b_num", "b_den", "deviation_bound", "tail_bound",
    "passed", "elapsed_ms",
)


def _csv_text(reports: Sequence[VerificationReport], digits: int) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for report in reports:
        record = _report_dict(report, digits)
        exact = record.pop("rhs_exact")
        record.update(exact)
        row = []
        for column in CSV_COLUMNS:
            value = record[column]
            if value is None:
                row.append("")
            elif isinstance(value, bool):
                row.append(str(value).lower())
            else:
                row.append(value)
        writer.writerow(row)
    return buffer.getvalue().rstrip("\n")


def _text_lines(reports: Sequence[VerificationReport], digits: int) -> str:
    lines = []
    for report in reports:
        bits = [
            f"{report.ident}",
            f"n={report.n}",
            f"q={report.q}",
            f"N={report.big_n}",
            report.mode,
            f"lhs={golden_to_decimal(report.partial, digits)}",
            f"rhs={golden_to_decimal(report.rhs, digits)}",
            f"rhs_exact={report.rhs}",
        ]
        if report.deviation_bound is not None:
            bits.append(f"dev<={_sci_upper(report.deviation_bound)}")
        if report.tail_bound is not None:
            bits.append(f"tail<={_sci_upper(report.tail_bound)}")
        bits.append("PASS" if report.passed else "FAIL")
        if report.reason:
            bits.append(f"({report.reason})")
        lines.append("  ".join(bits))
    passed = sum(1 for r in reports if r.passed)
    lines.append(f"{passed}/{len(reports)} checks passed")
    return "\n".join(lines)


def _markdown_text(reports: Sequence[VerificationReport], digits: int) -> str:
    lines = []
    for theorem in sorted({r.theorem for r in reports}):
        lines.append(f"## Theorem {theorem}")
        lines.append("")
        lines.append(
            "| id | n | q | N | mode | lhs | rhs | deviation <= | tail <= "
            "| passed |"
        )
        lines.append("|---|---|---|---|---|---|---|---|---|---|")
        for report in reports:
            if report.theorem != theorem:
                continue
            deviation = _bound_str(report.deviation_bound) or ""
            tail = _bound_str(report.tail_bound) or ""
            lines.append(
                f"| {report.ident} | {report.n} | {report.q} "
                f"| {report.big_n} | {report.mode} "
                f"| {golden_to_decimal(report.partial, digits)} "
                f"| {golden_to_decimal(report.rhs, digits)} "
                f"| {deviation} | {tail} "
                f"| {str(report.passed).lower()} |"
            )
        lines.append("")
    return "\n".join(lines).rstrip("\n")


def emit_report(
    reports: Sequence[VerificationReport], fmt: str, digits: int
) -> str:
    """Serialize a report set; deterministic for identical inputs."""
    if fmt == "json":
        return json.dumps([_report_dict(r, digits) for r in reports], indent=2)
    if fmt == "csv":
        return _csv_text(reports, digits)
    if fmt == "markdown":
        return _markdown_text(reports, digits)
    if fmt == "text":
        return _text_lines(reports, digits)
    raise ValueError(f"unknown format {fmt!r}")


# -- commands --------------------------------------------------------------


def _limit_report(ident: str, params: Params, big_n: int) -> VerificationReport:
    try:
        return engine.verify_limit(ident, params, big_n)
    except (TailCertificationError, ValueError) as err:
        started = time.perf_counter()
        desc = get_identity(ident)
        partial = engine.partial_product(ident, params, big_n)
        rhs = desc.rhs(params)
        elapsed = (time.perf_counter() - started) * 1000.0
        return VerificationReport(
            ident, desc.theorem, params.n, params.q, big_n, "limit",
            partial, rhs, None, None, False, elapsed, str(err),
        )


def _reports_for(ident: str, params: Params, config: RunConfig) -> list[VerificationReport]:
    out = []
    if config.mode in ("exact", "both"):
        out.append(engine.verify_exact(ident, params, config.terms))
    if config.mode in ("limit", "both"):
        out.append(_limit_report(ident, params, config.terms))
    return out


def _run_list(config: RunConfig) -> tuple[str, int]:
    records = catalog_metadata()
    if config.format == "json":
        return json.dumps(records, indent=2), 0
    if config.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        columns = list(records[0])
        writer.writerow(columns)
        for record in records:
            writer.writerow(
                [str(record[c]).lower() if isinstance(record[c], bool)
                 else record[c] for c in columns]
            )
        return buffer.getvalue().rstrip("\n"), 0
    if config.format == "markdown":
        lines = [
            "| id | theorem | family | alternating | p | m | X | C |",
            "|---|---|---|---|---|---|---|---|",
        ]
        for record in records:
            lines.append(
                f"| {record['id']} | {record['theorem']} | {record['family']} "
                f"| {str(record['alternating']).lower()} | {record['p_map']} "
                f"| {record['m_map']} | {record['x_kind']} "
                f"| {record['c_kind']} |"
            )
        return "\n".join(lines), 0
    lines = []
    for record in records:
        shape = "alternating" if record["alternating"] else "plain"
        lines.append(
            f"{record['id']}  [{record['family']}, {shape}; "
            f"p={record['p_map']}, m={record['m_map']}]"
        )
        lines.append(f"    lhs: {record['lhs']}")
        lines.append(f"    rhs: {record['rhs']}")
    return "\n".join(lines), 0


def _run_verify(config: RunConfig) -> tuple[str, int]:
    reports = _reports_for(config.identity, Params(config.n, config.q), config)
    code = 0 if all(r.passed for r in reports) else 1
    return emit_report(reports, config.format, config.digits), code


def _run_grid(config: RunConfig) -> tuple[str, int]:
    reports = []
    for desc in list_identities():
        for n in range(1, config.n_max + 1):
            for q in range(1, config.q_max + 1):
                reports.extend(_reports_for(desc.ident, Params(n, q), config))
    reports.sort(key=lambda r: (r.ident, r.n, r.q, r.big_n, r.mode))
    code = 0 if all(r.passed for r in reports) else 1
    return emit_report(reports, config.format, config.digits), code


def _run_eval(config: RunConfig) -> tuple[str, int]:
    params = Params(config.n, config.q)
    value = engine.partial_product(config.identity, params, config.terms)
    decimal = golden_to_decimal(value, config.digits)
    if config.format == "json":
        payload = {
            "id": config.identity,
            "n": config.n,
            "q": config.q,
            "N": config.terms,
            "value_decimal": decimal,
            "value_exact": {
                "a_num": value.a.numerator,
                "a_den": value.a.denominator,
                "b_num": value.b.numerator,
                "b_den": value.b.denominator,
            },
        }
        return json.dumps(payload, indent=2), 0
    if config.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(("id", "n", "q", "N", "value_decimal"))
        writer.writerow(
            (config.identity, config.n, config.q, config.terms, decimal)
        )
        return buffer.getvalue().rstrip("\n"), 0
    if config.format == "markdown":
        return (
            "| id | n | q | N | value |\n|---|---|---|---|---|\n"
            f"| {config.identity} | {config.n} | {config.q} "
            f"| {config.terms} | {decimal} |"
        ), 0
    return decimal, 0


def _run_special(config: RunConfig) -> tuple[str, int]:
    reports = engine.special_evaluations()
    code = 0 if all(r.passed for r in reports) else 1
    return emit_report(reports, config.format, config.digits), code


def run(config: RunConfig) -> tuple[str, int]:
    if config.command == "list":
        return _run_list(config)
    if config.command == "verify":
        return _run_verify(config)
    if config.command == "grid":
        return _run_grid(config)
    if config.command == "eval":
        return _run_eval(config)
    if config.command == "special":
        return _run_special(config)
    raise ValueError(f"unknown command {config.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = parse_args(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    output, code = run(config)
    if output:
        print(output)
    return code
