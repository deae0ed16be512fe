"""Shared query handlers behind both the HTTP routes and the CLI.

Each handler takes a request model, runs the exact computation and
returns a response model.  Invalid mathematical input surfaces as
``ValueError``; enumeration resource exhaustion as
:class:`homacm.classify.EnumerationCapExceeded`.  Callers map those to
their transport (HTTP status codes, process exit codes).
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Optional

from .. import classify, closed_forms, criteria, datum
from ..roots import lie_type
from . import models

CAP_ENV_VAR = "HOMACM_CAP"


def resolve_cap(explicit: Optional[int]) -> int:
    """Explicit request value, else the environment override, else the default."""
    if explicit is not None:
        return explicit
    from_env = os.environ.get(CAP_ENV_VAR)
    if from_env is not None:
        try:
            value = int(from_env)
        except ValueError as exc:
            raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {from_env!r}") from exc
        if value < 1:
            raise ValueError(f"{CAP_ENV_VAR} must be positive, got {value}")
        return value
    return classify.DEFAULT_CAP


def build_space(request: models.SpaceRequest) -> datum.PolarizedSpace:
    return datum.space(lie_type(request.type), request.I, request.polarization)


def _rational(value: Fraction) -> models.Rational:
    return models.Rational(num=value.numerator, den=value.denominator)


def _space_echo(ps: datum.PolarizedSpace) -> models.SpaceEcho:
    return models.SpaceEcho(
        type=str(ps.lie_type), I=list(ps.marked), polarization=list(ps.polarization)
    )


def _bundle_echo(ps: datum.PolarizedSpace, weight: list[int]) -> models.BundleEcho:
    return models.BundleEcho(**_space_echo(ps).model_dump(), weight=list(weight))


def bundle_report(request: models.BundleRequest) -> models.BundleReport:
    ps = build_space(request)
    weight = ps.validate_weight(request.weight)
    table = datum.associated_datum(ps, weight)
    entries = [
        models.DatumEntry(num=value.numerator, den=value.denominator, mult=mult)
        for value, mult in sorted(table.multiplicities.items())
    ]
    return models.BundleReport(
        input=_bundle_echo(ps, request.weight),
        dim=ps.dimension,
        entries=entries,
        m=_rational(table.minimum),
        M=_rational(table.maximum),
        acm=datum.is_acm(ps, weight),
        ulrich=datum.is_ulrich(ps, weight),
        bundle_rank=datum.bundle_rank(ps, weight),
    )


def cohomology_report(request: models.CohomologyRequest) -> models.CohomologyReport:
    ps = build_space(request)
    weight = ps.validate_weight(request.weight)
    low, high = request.twists
    if low > high:
        raise ValueError(f"empty twist window ({low}, {high})")
    records = []
    for twist in range(low, high + 1):
        cell = datum.cohomology(ps, weight, twist)
        records.append(
            models.CohomologyCell(
                twist=twist,
                degree=cell.degree,
                module_weight=list(cell.module_weight) if cell.module_weight else None,
                dimension=cell.dimension,
            )
        )
    return models.CohomologyReport(
        input=_bundle_echo(ps, request.weight), twists=(low, high), records=records
    )


def _enumeration(request: models.EnumerateRequest, kind: str) -> models.EnumerationReport:
    ps = build_space(request)
    cap = resolve_cap(request.cap)
    if kind == "acm":
        weights = classify.enumerate_acm(ps, cap=cap, tight=request.tight)
    else:
        weights = classify.enumerate_ulrich(ps, cap=cap)
    items = [
        models.EnumeratedBundle(
            weight=list(w),
            bundle_rank=datum.bundle_rank(ps, w),
            acm=True if kind == "acm" else datum.is_acm(ps, w),
            ulrich=datum.is_ulrich(ps, w),
        )
        for w in weights
    ]
    return models.EnumerationReport(
        input=_space_echo(ps), kind=kind, dim=ps.dimension, count=len(items), items=items
    )


def enumerate_acm_report(request: models.EnumerateRequest) -> models.EnumerationReport:
    return _enumeration(request, "acm")


def enumerate_ulrich_report(request: models.EnumerateRequest) -> models.EnumerationReport:
    return _enumeration(request, "ulrich")


def verify_report(request: models.BundleRequest) -> models.VerifyReportModel:
    ps = build_space(request)
    weight = ps.validate_weight(request.weight)
    report = closed_forms.verify_closed_form(ps, weight)
    return models.VerifyReportModel(
        input=_bundle_echo(ps, request.weight),
        case=report.case,
        match=report.matches,
        entries_match=report.entries_match,
        max_match=report.max_match,
        datum_max=_rational(report.datum_max),
        closed_max=_rational(report.closed_maximum),
        missing=[_rational(v) for v in report.missing],
        extra=[_rational(v) for v in report.extra],
    )


def line_bundle_report(request: models.LineBundleRequest) -> models.LineBundleReport:
    d1, d2 = request.d
    a1, a2 = request.a
    closed = criteria.line_bundle_acm(request.family, request.n, d1, d2, a1, a2)
    lt, marked, weight = criteria.line_bundle_weight(
        request.family, request.n, d1, d2, a1, a2
    )
    oracle = datum.is_acm(datum.space(lt, marked), weight)
    return models.LineBundleReport(
        input=request, closed=closed, datum=oracle, agree=closed == oracle
    )


def sufficient_report(request: models.SufficientRequest) -> models.SufficientReport:
    ps = build_space(request)
    if not ps.is_minimal:
        raise ValueError("the sufficient conditions assume the minimal polarization")
    weight = ps.validate_weight(request.weight)
    invariants = criteria.mu_nu(ps.lie_type, ps.marked, weight)
    verdict = criteria.sufficient_acm(ps.lie_type, ps.marked, request.block, weight)
    return models.SufficientReport(
        input=_bundle_echo(ps, request.weight),
        block=request.block,
        mu=invariants.mu,
        nu=invariants.nu,
        sufficient=verdict,
        acm=datum.is_acm(ps, weight),
    )


def universal_report(request: models.SpaceRequest) -> models.UniversalReport:
    ps = build_space(request)
    if not ps.is_minimal:
        raise ValueError("the universal-bundle catalogue assumes the minimal polarization")
    items = []
    for bundle in criteria.universal_weights(ps.lie_type, ps.marked):
        items.append(
            models.UniversalItem(
                name=bundle.name,
                weight=list(bundle.weight),
                acm=datum.is_acm(ps, bundle.weight),
                bundle_rank=datum.bundle_rank(ps, bundle.weight),
            )
        )
    return models.UniversalReport(input=_space_echo(ps), items=items)
