"""FastAPI application exposing the query handlers over HTTP.

Mathematically invalid input is answered with 422, an exhausted
enumeration cap with 400; both carry the diagnostic in ``detail``.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..classify import EnumerationCapExceeded
from . import handlers, models

app = FastAPI(
    title="homacm",
    description="Exact decision service for homogeneous bundle cohomology queries",
    version=__version__,
)


@app.exception_handler(ValueError)
async def _invalid_input(_: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(EnumerationCapExceeded)
async def _cap_exceeded(_: Request, exc: EnumerationCapExceeded) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/v1/datum", response_model=models.BundleReport)
def datum_route(request: models.BundleRequest) -> models.BundleReport:
    return handlers.bundle_report(request)


@app.post("/v1/acm", response_model=models.BundleReport)
def acm_route(request: models.BundleRequest) -> models.BundleReport:
    return handlers.bundle_report(request)


@app.post("/v1/ulrich", response_model=models.BundleReport)
def ulrich_route(request: models.BundleRequest) -> models.BundleReport:
    return handlers.bundle_report(request)


@app.post("/v1/rank", response_model=models.BundleReport)
def rank_route(request: models.BundleRequest) -> models.BundleReport:
    return handlers.bundle_report(request)


@app.post("/v1/cohomology", response_model=models.CohomologyReport)
def cohomology_route(request: models.CohomologyRequest) -> models.CohomologyReport:
    return handlers.cohomology_report(request)


@app.post("/v1/enumerate/acm", response_model=models.EnumerationReport)
def enumerate_acm_route(request: models.EnumerateRequest) -> models.EnumerationReport:
    return handlers.enumerate_acm_report(request)


@app.post("/v1/enumerate/ulrich", response_model=models.EnumerationReport)
def enumerate_ulrich_route(request: models.EnumerateRequest) -> models.EnumerationReport:
    return handlers.enumerate_ulrich_report(request)


@app.post("/v1/verify-closed-form", response_model=models.VerifyReportModel)
def verify_route(request: models.BundleRequest) -> models.VerifyReportModel:
    return handlers.verify_report(request)


@app.post("/v1/line-bundle", response_model=models.LineBundleReport)
def line_bundle_route(request: models.LineBundleRequest) -> models.LineBundleReport:
    return handlers.line_bundle_report(request)


@app.post("/v1/sufficient", response_model=models.SufficientReport)
def sufficient_route(request: models.SufficientRequest) -> models.SufficientReport:
    return handlers.sufficient_report(request)


@app.post("/v1/universal-weights", response_model=models.UniversalReport)
def universal_route(request: models.SpaceRequest) -> models.UniversalReport:
    return handlers.universal_report(request)
