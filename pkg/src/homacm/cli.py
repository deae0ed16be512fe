"""Command-line client for the query handlers.

Every command builds the same request models the HTTP service consumes,
calls the shared handler and renders the response as text, JSON or CSV.
Output is deterministic: identical invocations produce identical bytes.
Exit codes: 0 on success (boolean answers live in the payload, not the
exit code), 2 for invalid input, 3 when an enumeration hits its
candidate cap.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from typing import Callable, Optional

import click

from .classify import EnumerationCapExceeded
from .service import handlers, models

FORMATS = click.Choice(["text", "json", "csv"])


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise click.UsageError(f"cannot parse {what} {text!r}; expected comma-separated integers")


def _pair(text: str, what: str) -> tuple[int, int]:
    values = _ints(text, what)
    if len(values) != 2:
        raise click.UsageError(f"{what} needs exactly two integers, got {text!r}")
    return values[0], values[1]


def _run(handler: Callable, request) -> object:
    try:
        return handler(request)
    except EnumerationCapExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _emit(report, fmt: str, text_renderer: Callable[[object], str]) -> None:
    if fmt == "json":
        click.echo(json.dumps(report.model_dump(), indent=2))
    elif fmt == "csv":
        click.echo(_csv_rows(report), nl=False)
    else:
        click.echo(text_renderer(report))


CSV_COLUMNS = [
    "family", "rank", "I", "weight", "dim",
    "m_num", "m_den", "M_num", "M_den",
    "acm", "ulrich", "rank_of_bundle",
]


def _csv_rows(report) -> str:
    if isinstance(report, models.BundleReport):
        rows = [report]
    elif isinstance(report, models.EnumerationReport):
        rows = [
            handlers.bundle_report(
                models.BundleRequest(
                    type=report.input.type,
                    I=report.input.I,
                    polarization=report.input.polarization,
                    weight=item.weight,
                )
            )
            for item in report.items
        ]
    else:
        raise click.UsageError("csv output is available for bundle and enumeration reports")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                row.input.type[0],
                row.input.type[1:],
                ";".join(str(i) for i in row.input.I),
                ";".join(str(a) for a in row.input.weight),
                row.dim,
                row.m.num, row.m.den, row.M.num, row.M.den,
                str(row.acm).lower(), str(row.ulrich).lower(),
                row.bundle_rank,
            ]
        )
    return buffer.getvalue()


def _describe_space(echo: models.SpaceEcho) -> str:
    marks = ",".join(str(i) for i in echo.I)
    pol = ",".join(str(n) for n in echo.polarization)
    return f"space: {echo.type}/P({marks})  polarization: ({pol})"


def _fraction(value: models.Rational) -> str:
    return str(value.num) if value.den == 1 else f"{value.num}/{value.den}"


def _bundle_text(report: models.BundleReport) -> str:
    entries = ", ".join(
        _fraction(e) + (f" (x{e.mult})" if e.mult > 1 else "") for e in report.entries
    )
    return "\n".join(
        [
            f"{_describe_space(report.input)}  dim: {report.dim}",
            f"weight: ({', '.join(str(a) for a in report.input.weight)})"
            f"  bundle rank: {report.bundle_rank}",
            f"datum: {entries}",
            f"m: {_fraction(report.m)}  M: {_fraction(report.M)}",
            f"acm: {str(report.acm).lower()}  ulrich: {str(report.ulrich).lower()}",
        ]
    )


def _space_options(fn):
    fn = click.argument("type_token", metavar="TYPE")(fn)
    fn = click.option("--I", "marked", required=True, help="comma list of marked nodes")(fn)
    fn = click.option("--polarization", default=None, help="comma list of weights (default all 1)")(fn)
    return fn


def _format_option(fn):
    return click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)(fn)


def _bundle_request(type_token: str, marked: str, polarization: Optional[str], weight: str) -> models.BundleRequest:
    return models.BundleRequest(
        type=type_token,
        I=_ints(marked, "--I"),
        polarization=None if polarization is None else _ints(polarization, "--polarization"),
        weight=_ints(weight, "--weight"),
    )


@click.group()
@click.version_option(package_name="homacm")
def main() -> None:
    """Exact queries about irreducible homogeneous bundles."""


def _bundle_command(name: str, doc: str):
    @main.command(name, help=doc)
    @_space_options
    @click.option("--weight", required=True, help="comma list of weight coefficients")
    @_format_option
    def command(type_token, marked, polarization, weight, fmt):
        request = _bundle_request(type_token, marked, polarization, weight)
        _emit(_run(handlers.bundle_report, request), fmt, _bundle_text)

    return command


_bundle_command("datum", "Exact twist-ratio multiset of a bundle weight.")
_bundle_command("acm", "Decide the ACM property: no intermediate cohomology in any twist.")
_bundle_command("ulrich", "Decide the Ulrich property: datum exactly {1..dim}.")
_bundle_command("rank", "Bundle rank and datum summary for a weight.")


@main.command("cohomology", help="Cohomology table over a window of twists.")
@_space_options
@click.option("--weight", required=True)
@click.option("--twists", default="0,0", show_default=True, help="inclusive window lo,hi")
@_format_option
def cohomology_cmd(type_token, marked, polarization, weight, twists, fmt):
    request = models.CohomologyRequest(
        **_bundle_request(type_token, marked, polarization, weight).model_dump(),
        twists=_pair(twists, "--twists"),
    )
    report = _run(handlers.cohomology_report, request)

    def text(r: models.CohomologyReport) -> str:
        lines = [f"{_describe_space(r.input)}  weight: ({', '.join(map(str, r.input.weight))})"]
        for cell in r.records:
            if cell.degree is None:
                lines.append(f"t={cell.twist}: all cohomology vanishes")
            else:
                lines.append(
                    f"t={cell.twist}: H^{cell.degree} has dimension {cell.dimension}, "
                    f"module weight ({', '.join(map(str, cell.module_weight))})"
                )
        return "\n".join(lines)

    _emit(report, fmt, text)


def _enumeration_text(report: models.EnumerationReport) -> str:
    lines = [
        f"{_describe_space(report.input)}  dim: {report.dim}",
        f"{report.kind} weights: {report.count}",
    ]
    for item in report.items:
        lines.append(
            f"  ({', '.join(str(a) for a in item.weight)})  rank {item.bundle_rank}"
        )
    return "\n".join(lines)


def _enumerate_command(name: str, handler, doc: str, allow_tight: bool):
    options = [
        _space_options,
        click.option("--cap", type=int, default=None, help="candidate cap (env HOMACM_CAP)"),
        _format_option,
    ]
    if allow_tight:
        options.insert(1, click.option("--tight", is_flag=True, help="prune with all quotient roots"))

    def command(type_token, marked, polarization, cap, fmt, tight=False):
        request = models.EnumerateRequest(
            type=type_token,
            I=_ints(marked, "--I"),
            polarization=None if polarization is None else _ints(polarization, "--polarization"),
            tight=tight,
            cap=cap,
        )
        _emit(_run(handler, request), fmt, _enumeration_text)

    for option in reversed(options):
        command = option(command)
    return main.command(name, help=doc)(command)


_enumerate_command(
    "enumerate-acm", handlers.enumerate_acm_report,
    "List every ACM weight inside the hull of the twist-normalised ones.", True,
)
_enumerate_command(
    "enumerate-ulrich", handlers.enumerate_ulrich_report,
    "List every Ulrich weight (datum exactly {1..dim}).", False,
)


@main.command("verify-closed-form", help="Cross-check the per-family closed form against the datum.")
@_space_options
@click.option("--weight", required=True)
@_format_option
def verify_cmd(type_token, marked, polarization, weight, fmt):
    request = _bundle_request(type_token, marked, polarization, weight)
    report = _run(handlers.verify_report, request)

    def text(r: models.VerifyReportModel) -> str:
        lines = [
            f"{_describe_space(r.input)}  case: {r.case}",
            f"match: {str(r.match).lower()}"
            f"  (entries: {str(r.entries_match).lower()}, max: {str(r.max_match).lower()})",
            f"datum max: {_fraction(r.datum_max)}  closed max: {_fraction(r.closed_max)}",
        ]
        if r.missing:
            lines.append("missing from closed form: " + ", ".join(map(_fraction, r.missing)))
        if r.extra:
            lines.append("extra in closed form: " + ", ".join(map(_fraction, r.extra)))
        return "\n".join(lines)

    _emit(report, fmt, text)


@main.command("line-bundle", help="Exact line-bundle criterion on a two-marked-node space.")
@click.argument("type_token", metavar="TYPE")
@click.option("--d", "nodes", required=True, help="comma pair d1,d2 of marked nodes")
@click.option("--a", "coeffs", required=True, help="comma pair a1,a2 of coefficients")
@_format_option
def line_bundle_cmd(type_token, nodes, coeffs, fmt):
    try:
        family, n = type_token[0].upper(), int(type_token[1:])
    except (IndexError, ValueError):
        raise click.UsageError(f"cannot parse type token {type_token!r}")
    request = models.LineBundleRequest(
        family=family, n=n, d=_pair(nodes, "--d"), a=_pair(coeffs, "--a")
    )
    report = _run(handlers.line_bundle_report, request)

    def text(r: models.LineBundleReport) -> str:
        return "\n".join(
            [
                f"family: {r.input.family}{r.input.n}  nodes: {r.input.d}  coefficients: {r.input.a}",
                f"closed criterion: {str(r.closed).lower()}  datum criterion: {str(r.datum).lower()}"
                f"  agree: {str(r.agree).lower()}",
            ]
        )

    _emit(report, fmt, text)


@main.command("sufficient", help="Sufficient block-support admissibility conditions.")
@_space_options
@click.option("--weight", required=True)
@click.option("--block", required=True, type=int, help="block index, 1..s+1")
@_format_option
def sufficient_cmd(type_token, marked, polarization, weight, block, fmt):
    request = models.SufficientRequest(
        **_bundle_request(type_token, marked, polarization, weight).model_dump(),
        block=block,
    )
    report = _run(handlers.sufficient_report, request)

    def text(r: models.SufficientReport) -> str:
        return "\n".join(
            [
                f"{_describe_space(r.input)}  weight: ({', '.join(map(str, r.input.weight))})",
                f"block: {r.block}  mu: {r.mu}  nu: {r.nu}",
                f"sufficient: {str(r.sufficient).lower()}  acm: {str(r.acm).lower()}",
            ]
        )

    _emit(report, fmt, text)


@main.command("universal-weights", help="Catalogue of tautological quotient weights.")
@_space_options
@_format_option
def universal_cmd(type_token, marked, polarization, fmt):
    request = models.SpaceRequest(
        type=type_token,
        I=_ints(marked, "--I"),
        polarization=None if polarization is None else _ints(polarization, "--polarization"),
    )
    report = _run(handlers.universal_report, request)

    def text(r: models.UniversalReport) -> str:
        lines = [_describe_space(r.input)]
        for item in r.items:
            lines.append(
                f"  {item.name}: weight ({', '.join(map(str, item.weight))})"
                f"  rank {item.bundle_rank}  acm: {str(item.acm).lower()}"
            )
        return "\n".join(lines)

    _emit(report, fmt, text)


@main.command("serve", help="Run the HTTP service.")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve_cmd(host, port):
    import uvicorn

    uvicorn.run("homacm.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
