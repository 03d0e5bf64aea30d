"""Request and response models for the HTTP service. The CLI speaks these
same shapes, so the JSON rendered by either surface is identical.

Counts can exceed 2^53; they travel as JSON integers, which Python decodes
losslessly.
"""
from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1


class ErrorBody(BaseModel):
    type: str
    message: str


class PointsRequest(BaseModel):
    level: Optional[int] = Field(default=None, description="catalog level")
    family: Optional[Literal["xpx"]] = Field(
        default=None, description="the y^2 = x^p - x family instead of a catalog level"
    )
    p: int = Field(ge=2, le=9973)


class PointsResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    p: int
    count: int
    affine: list[tuple[int, int]]
    infinity: int


class ModelRequest(BaseModel):
    level: int


class ModelResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    level: int
    equation: str
    discriminant: int
    kind: Literal["weierstrass", "hyperelliptic"]
    coefficients: dict


class GenusRequest(BaseModel):
    N: int = Field(ge=1, le=10**7)


class GenusResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    N: int
    mu: int
    mu2: int
    mu3: int
    mu_inf: int
    genus: int


class CodeRequest(BaseModel):
    p: int = Field(ge=2, le=9973)
    a: int = Field(ge=0, le=10**6, description="pole-order bound at the point at infinity")
    level: Optional[int] = None
    family: Optional[Literal["xpx"]] = None
    with_matrices: bool = False
    jobs: int = Field(default=1, ge=1, le=64)
    max_words: Optional[int] = Field(default=None, ge=1)


class CodeResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    p: int
    n: int
    k: int
    d: int
    mds: bool
    t: int
    provenance: str
    generator: Optional[list[list[int]]] = None
    systematic: Optional[list[list[int]]] = None
    check: Optional[list[list[int]]] = None
    column_permutation: Optional[list[int]] = None


class WeightsRequest(BaseModel):
    p: int = Field(ge=2, le=9973)
    a: int = Field(ge=0, le=10**6)
    level: Optional[int] = None
    family: Optional[Literal["xpx"]] = None
    convention: Literal["table2", "plain"] = "table2"
    strategy: Literal["auto", "direct", "dual"] = "auto"
    jobs: int = Field(default=1, ge=1, le=64)
    max_words: Optional[int] = Field(default=None, ge=1)


class WeightsResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    n: int
    k: int
    p: int
    counts: list[int]
    polynomial: str
    convention: str


class BoundsRequest(BaseModel):
    q: int = Field(ge=2)
    grid: int = Field(default=1000, ge=100, le=10**6)
    genus: Optional[int] = None
    n: Optional[int] = None


class BoundsResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    q: int
    columns: list[str]
    rows: list[list[float]]
    excess_interval: Optional[tuple[float, float]]


class QSeriesRequest(BaseModel):
    which: Literal["j", "delta", "eta11", "e4", "e6", "eta"]
    M: int = Field(default=60, ge=2, le=5000)
    eta_spec: Optional[list[tuple[int, int]]] = Field(
        default=None, description="factors (scale, exponent) when which == 'eta'"
    )


class QSeriesResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    lowest_exponent: int
    coefficients: list[int]
    truncation: int
    text: str


class HeckeRequest(BaseModel):
    N: int = Field(ge=1)
    p: int = Field(ge=2, le=9973)


class HeckeResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    N: int
    p: int
    trace_by_count: int
    coefficient: Optional[int] = Field(
        default=None, description="eta-product coefficient, available at level 11"
    )
    agree: Optional[bool] = None
    text: str


class ConicExampleResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    rows: list[dict]
    ok: bool


class ReproduceRequest(BaseModel):
    only: Optional[str] = None
    include_slow: bool = False
    jobs: int = Field(default=1, ge=1, le=64)


class ReproduceResponse(BaseModel):
    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    ok: bool
    rows: list[dict]
    text: str
