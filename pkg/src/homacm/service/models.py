"""Request and response schemas for the query service.

The CLI and the HTTP API share these models, so a JSON report printed by
the command line is byte-identical to the corresponding endpoint body.
All rationals travel as reduced ``{num, den}`` integer pairs; nothing is
ever serialised as a float.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class Rational(BaseModel):
    num: int
    den: int


class DatumEntry(Rational):
    mult: int


# ---------------------------------------------------------------- requests


class SpaceRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    type: str = Field(description="family and rank token, e.g. 'B3'")
    I: list[int] = Field(min_length=1, description="marked node indices, 1-based")
    polarization: Optional[list[int]] = Field(
        default=None, description="per-marked-node weights; defaults to all ones"
    )


class BundleRequest(SpaceRequest):
    weight: list[int]


class CohomologyRequest(BundleRequest):
    twists: tuple[int, int] = Field(
        default=(0, 0), description="inclusive twist window (low, high)"
    )


class EnumerateRequest(SpaceRequest):
    tight: bool = False
    cap: Optional[int] = Field(default=None, ge=1)


class LineBundleRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    family: str
    n: int
    d: tuple[int, int]
    a: tuple[int, int]


class SufficientRequest(BundleRequest):
    block: int


# ---------------------------------------------------------------- responses


class SpaceEcho(BaseModel):
    type: str
    I: list[int]
    polarization: list[int]


class BundleEcho(SpaceEcho):
    weight: list[int]


class BundleReport(BaseModel):
    """Everything there is to say about one bundle weight."""

    input: BundleEcho
    dim: int
    entries: list[DatumEntry]
    m: Rational
    M: Rational
    acm: bool
    ulrich: bool
    bundle_rank: int


class CohomologyCell(BaseModel):
    twist: int
    degree: Optional[int]
    module_weight: Optional[list[int]]
    dimension: Optional[int]


class CohomologyReport(BaseModel):
    input: BundleEcho
    twists: tuple[int, int]
    records: list[CohomologyCell]


class EnumeratedBundle(BaseModel):
    weight: list[int]
    bundle_rank: int
    acm: bool
    ulrich: bool


class EnumerationReport(BaseModel):
    input: SpaceEcho
    kind: str  # "acm" | "ulrich"
    dim: int
    count: int
    items: list[EnumeratedBundle]


class VerifyReportModel(BaseModel):
    input: BundleEcho
    case: str
    match: bool
    entries_match: bool
    max_match: bool
    datum_max: Rational
    closed_max: Rational
    missing: list[Rational]
    extra: list[Rational]


class LineBundleReport(BaseModel):
    input: LineBundleRequest
    closed: bool
    datum: bool
    agree: bool


class SufficientReport(BaseModel):
    input: BundleEcho
    block: int
    mu: int
    nu: int
    sufficient: bool
    acm: bool


class UniversalItem(BaseModel):
    name: str
    weight: list[int]
    acm: bool
    bundle_rank: int


class UniversalReport(BaseModel):
    input: SpaceEcho
    items: list[UniversalItem]
